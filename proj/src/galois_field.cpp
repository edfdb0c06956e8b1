#include "ffgold/galois_field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "ffgold/arith.hpp"
#include "ffgold/error.hpp"

namespace ffgold {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

void trim(PolyModP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

PolyModP poly_mod(PolyModP a, const PolyModP& m, std::int64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::int64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::int64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = mod(a[shift + i] - factor * m[i], p);
    }
    trim(a);
  }
  return a;
}

PolyModP poly_mulmod(const PolyModP& a, const PolyModP& b, const PolyModP& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyModP prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), m, p);
}

PolyModP poly_powmod(PolyModP base, std::uint64_t e, const PolyModP& m, std::int64_t p) {
  PolyModP result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

PolyModP poly_gcd(PolyModP a, PolyModP b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyModP r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f by repeated p-th powering.
PolyModP frobenius_power(unsigned k, const PolyModP& f, std::int64_t p) {
  PolyModP h = poly_mod(PolyModP{0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i) h = poly_powmod(h, static_cast<std::uint64_t>(p), f, p);
  return h;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::int64_t> coeffs, std::uint32_t p) {
  PolyModP f(coeffs.begin(), coeffs.end());
  for (auto& c : f) c = mod(c, p);
  trim(f);
  if (f.size() < 2) return false;
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  // Rabin: x^(p^n) = x mod f and gcd(x^(p^(n/l)) - x, f) = 1 for primes l | n.
  PolyModP full = frobenius_power(n, f, p);
  PolyModP x = poly_mod(PolyModP{0, 1}, f, p);
  if (full != x) return false;
  for (std::uint64_t l : prime_factors(n)) {
    PolyModP h = frobenius_power(n / static_cast<unsigned>(l), f, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = mod(h[1] - 1, p);
    trim(h);
    if (h.empty()) return false;
    if (poly_gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

PolyModP smallest_irreducible(std::uint32_t p, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  PolyModP f(n + 1, 0);
  f[n] = 1;
  // Odometer with c_{n-1} as the fastest digit yields lexicographic order on
  // (c_0, ..., c_{n-1}).
  while (true) {
    if (is_irreducible_mod_p(f, p)) return f;
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0) {
      if (++f[pos] < static_cast<std::int64_t>(p)) break;
      f[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

GaloisField::GaloisField(std::uint32_t p, unsigned n) : p_(p), n_(n) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "field characteristic must be prime");
  const std::uint64_t size = checked_pow(p, n);
  if (size > kMaxSize) {
    throw Error(ErrorKind::BudgetExceeded, "field of size " + std::to_string(size) + " is too large");
  }
  size_ = static_cast<std::uint32_t>(size);
  modulus_ = smallest_irreducible(p, n);

  const std::uint64_t order = size_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem result = 1;
    while (e > 0) {
      if (e & 1) result = mul_slow(result, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return result;
  };
  if (size_ > 2) {
    for (Elem g = 2; g < size_; ++g) {
      bool primitive = true;
      for (std::uint64_t l : factors) {
        if (slow_pow(g, order / l) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator_ = g;
        break;
      }
    }
  }
  exp_.resize(2 * order);
  log_.assign(size_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_slow(cur, generator_);
  }
  for (std::uint64_t i = order; i < 2 * order; ++i) exp_[i] = exp_[i - order];
}

std::shared_ptr<const GaloisField> GaloisField::get(std::uint32_t p, unsigned n) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const GaloisField>> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find({p, n});
    if (it != memo.end()) return it->second;
  }
  auto field = std::make_shared<const GaloisField>(p, n);
  std::lock_guard lock(mutex);
  return memo.emplace(std::make_pair(p, n), std::move(field)).first->second;
}

GaloisField::Elem GaloisField::mul_slow(Elem a, Elem b) const {
  PolyModP pa, pb;
  for (unsigned i = 0; i < n_; ++i, a /= p_, b /= p_) {
    pa.push_back(a % p_);
    pb.push_back(b % p_);
  }
  trim(pa);
  trim(pb);
  PolyModP prod = poly_mulmod(pa, pb, modulus_, p_);
  Elem out = 0;
  for (std::size_t i = prod.size(); i-- > 0;) out = out * p_ + static_cast<Elem>(prod[i]);
  return out;
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (size_ - 1))) % (size_ - 1)];
}

GaloisField::Elem GaloisField::from_int(std::int64_t v) const {
  return static_cast<Elem>(mod(v, p_));
}

GaloisField::Elem GaloisField::trace(Elem a) const {
  Elem sum = 0, term = a;
  for (unsigned i = 0; i < n_; ++i) {
    sum = add(sum, term);
    term = pow(term, p_);
  }
  return sum;
}

GaloisField::Elem GaloisField::embedding_root(const GaloisField& sub) const {
  {
    std::lock_guard lock(root_mutex_);
    auto it = embedding_roots_.find(sub.n_);
    if (it != embedding_roots_.end()) return it->second;
  }
  for (Elem x = 0; x < size_; ++x) {
    Elem value = 0;
    for (std::size_t i = sub.modulus_.size(); i-- > 0;) {
      value = add(mul(value, x), from_int(sub.modulus_[i]));
    }
    if (value == 0) {
      std::lock_guard lock(root_mutex_);
      embedding_roots_[sub.n_] = x;
      return x;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "subfield modulus has no root");
}

GaloisField::Elem GaloisField::embed(const GaloisField& sub, Elem a) const {
  if (sub.p_ != p_ || n_ % sub.n_ != 0) {
    throw Error(ErrorKind::InvalidArgument, "subfield does not embed");
  }
  if (sub.n_ == n_) return a;
  const Elem beta = embedding_root(sub);
  Elem out = 0, power = 1;
  for (unsigned i = 0; i < sub.n_; ++i, a /= p_) {
    out = add(out, mul(from_int(a % p_), power));
    power = mul(power, beta);
  }
  return out;
}

}  // namespace ffgold
