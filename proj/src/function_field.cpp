#include "ffgold/function_field.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "ffgold/error.hpp"
#include "ffgold/galois_field.hpp"
#include "ffgold/polynomial_roots.hpp"

namespace ffgold {

const char* to_string(FieldSource source) {
  switch (source) {
    case FieldSource::rational: return "rational";
    case FieldSource::elliptic: return "elliptic";
    case FieldSource::custom: return "custom";
  }
  return "custom";
}

FunctionFieldSpec::FunctionFieldSpec(PrimePower q, std::vector<std::int64_t> l_coeffs,
                                     FieldSource source, std::optional<WeierstrassCurve> curve)
    : q_(q),
      l_coeffs_(std::move(l_coeffs)),
      source_(source),
      curve_(std::move(curve)),
      genus_(0),
      log_q_(std::log(static_cast<double>(q.q()))) {
  if (l_coeffs_.empty() || l_coeffs_.size() % 2 == 0) {
    throw Error(ErrorKind::InvalidSpec, "L-polynomial must have odd length 2g+1");
  }
  genus_ = static_cast<unsigned>((l_coeffs_.size() - 1) / 2);
  if (l_coeffs_.front() != 1) {
    throw Error(ErrorKind::FunctionalEquationViolation, "L(0) must equal 1");
  }
  const BigInt qq = q.q();
  for (unsigned j = 0; j <= genus_; ++j) {
    const BigInt lhs = l_coeffs_[2 * genus_ - j];
    const BigInt rhs = boost::multiprecision::pow(qq, genus_ - j) * l_coeffs_[j];
    if (lhs != rhs) {
      throw Error(ErrorKind::FunctionalEquationViolation,
                  "c_{2g-j} != q^{g-j} c_j at j = " + std::to_string(j));
    }
  }
  if (genus_ == 0) return;

  std::vector<double> coeffs(l_coeffs_.begin(), l_coeffs_.end());
  const auto roots = polynomial_roots(coeffs);
  const double sqrt_q = std::sqrt(static_cast<double>(q.q()));
  for (const auto& root : roots) {
    const std::complex<double> pi = 1.0 / root;
    if (std::abs(std::abs(pi) - sqrt_q) > kWeilTol * sqrt_q) {
      throw Error(ErrorKind::WeilViolation, "inverse root modulus differs from sqrt(q)");
    }
    inverse_roots_.push_back(pi);
  }
  std::sort(inverse_roots_.begin(), inverse_roots_.end(),
            [](const auto& a, const auto& b) { return std::arg(a) < std::arg(b); });
}

FunctionFieldSpec make_rational_field(const PrimePower& q) {
  return FunctionFieldSpec(q, {1}, FieldSource::rational);
}

FunctionFieldSpec make_elliptic_field(const PrimePower& q, const WeierstrassCurve& curve) {
  if (discriminant(curve, q) == 0) {
    throw Error(ErrorKind::SingularCurve, "curve " + to_string(curve) + " has zero discriminant");
  }
  const auto n1 = static_cast<std::int64_t>(enumerate_points(curve, q, 1));
  const auto qq = static_cast<std::int64_t>(q.q());
  const std::int64_t a = qq + 1 - n1;
  if (a * a > 4 * qq) {
    throw Error(ErrorKind::WeilViolation, "trace exceeds 2 sqrt(q)");
  }
  return FunctionFieldSpec(q, {1, -a, qq}, FieldSource::elliptic, curve);
}

FunctionFieldSpec make_custom_field(const PrimePower& q, std::vector<std::int64_t> l_coeffs) {
  return FunctionFieldSpec(q, std::move(l_coeffs), FieldSource::custom);
}

PointCounts point_counts(const FunctionFieldSpec& spec, unsigned k_max) {
  if (k_max == 0) throw Error(ErrorKind::InvalidArgument, "k_max must be positive");
  const auto& c = spec.l_coeffs();
  const std::size_t deg = c.size() - 1;
  // S_k = -sum_{i=1}^{k-1} c_i S_{k-i} - k c_k, with c_i = 0 for i > 2g.
  std::vector<BigInt> power_sums(k_max + 1, 0);
  PointCounts out;
  out.n.reserve(k_max);
  BigInt q_pow = 1;
  for (unsigned k = 1; k <= k_max; ++k) {
    BigInt s = 0;
    for (unsigned i = 1; i < k && i <= deg; ++i) s -= c[i] * power_sums[k - i];
    if (k <= deg) s -= BigInt(k) * c[k];
    power_sums[k] = s;
    q_pow *= spec.q();
    out.n.push_back(q_pow + 1 - s);
  }
  return out;
}

PlaceCounts place_counts(const FunctionFieldSpec& spec, unsigned k_max) {
  const PointCounts counts = point_counts(spec, k_max);
  PlaceCounts out;
  for (unsigned d = 1; d <= k_max; ++d) {
    BigInt total = 0;
    for (std::uint64_t e : divisors(d)) {
      total += mobius(d / e) * counts.at(static_cast<unsigned>(e));
    }
    if (total < 0 || total % d != 0) {
      throw Error(ErrorKind::InvalidSpec,
                  "place count at degree " + std::to_string(d) + " is not a non-negative integer");
    }
    out.a.push_back(total / d);
  }
  return out;
}

BigInt effective_divisor_count(const FunctionFieldSpec& spec, unsigned n) {
  // 1/((1-u)(1-qu)) has coefficients (q^{m+1} - 1)/(q - 1).
  const BigInt q = spec.q();
  const auto& c = spec.l_coeffs();
  BigInt total = 0;
  for (std::size_t j = 0; j < c.size() && j <= n; ++j) {
    const unsigned m = n - static_cast<unsigned>(j);
    const BigInt e = (boost::multiprecision::pow(q, m + 1) - 1) / (q - 1);
    total += c[j] * e;
  }
  return total;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // monic coefficient vector without the leading 1

std::uint64_t encode(const Poly& f, std::uint64_t q) {
  std::uint64_t idx = 0;
  for (std::size_t i = f.size(); i-- > 0;) idx = idx * q + f[i];
  return idx;
}

Poly decode(std::uint64_t idx, unsigned deg, std::uint64_t q) {
  Poly f(deg);
  for (unsigned i = 0; i < deg; ++i, idx /= q) f[i] = static_cast<std::uint32_t>(idx % q);
  return f;
}

// Product of monic f (deg a) and g (deg b), both stored without leading 1.
Poly monic_product(const Poly& f, const Poly& g, const GaloisField& field) {
  const std::size_t a = f.size(), b = g.size();
  std::vector<std::uint32_t> full(a + b + 1, 0);
  auto coeff_f = [&](std::size_t i) { return i == a ? 1u : f[i]; };
  auto coeff_g = [&](std::size_t i) { return i == b ? 1u : g[i]; };
  for (std::size_t i = 0; i <= a; ++i) {
    const auto fi = coeff_f(i);
    if (fi == 0) continue;
    for (std::size_t j = 0; j <= b; ++j) {
      full[i + j] = field.add(full[i + j], field.mul(fi, coeff_g(j)));
    }
  }
  full.pop_back();
  return full;
}

std::vector<Poly> irreducible_list(const PrimePower& q, unsigned d, const GaloisField& field,
                                   std::map<unsigned, std::vector<Poly>>& memo) {
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  const std::uint64_t total = checked_pow(q.q(), d);
  std::vector<bool> reducible(total, false);
  for (unsigned i = 1; i <= d / 2; ++i) {
    const auto small = irreducible_list(q, i, field, memo);
    const std::uint64_t others = checked_pow(q.q(), d - i);
    for (const Poly& f : small) {
      for (std::uint64_t gi = 0; gi < others; ++gi) {
        reducible[encode(monic_product(f, decode(gi, d - i, q.q()), field), q.q())] = true;
      }
    }
  }
  std::vector<Poly> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (!reducible[idx]) out.push_back(decode(idx, d, q.q()));
  }
  memo[d] = out;
  return out;
}

}  // namespace

std::uint64_t enumerate_irreducibles(const PrimePower& q, unsigned d) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  if (d == 1) return q.q();
  const double size = std::pow(static_cast<double>(q.q()), d);
  if (size > static_cast<double>(kPolynomialBudget)) {
    throw Error(ErrorKind::BudgetExceeded, "q^d exceeds the polynomial budget");
  }
  const auto field = GaloisField::get(static_cast<std::uint32_t>(q.p()), q.r());
  std::map<unsigned, std::vector<Poly>> memo;
  return irreducible_list(q, d, *field, memo).size();
}

BigInt count_effective_divisors(const std::vector<std::uint64_t>& places_by_degree, unsigned n) {
  // Multisets of places: multiply in (1 - u^d)^{-a_d} one place at a time.
  std::vector<BigInt> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t idx = 0; idx < places_by_degree.size(); ++idx) {
    const unsigned d = static_cast<unsigned>(idx + 1);
    if (d > n) break;
    for (std::uint64_t place = 0; place < places_by_degree[idx]; ++place) {
      for (unsigned m = d; m <= n; ++m) ways[m] += ways[m - d];
    }
  }
  return ways[n];
}

}  // namespace ffgold
