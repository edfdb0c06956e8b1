#include "ffgold/arith.hpp"

#include <cmath>

#include "ffgold/error.hpp"
#include "ffgold/prime_power.hpp"

namespace ffgold {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::WeilViolation: return "WeilViolation";
    case ErrorKind::FunctionalEquationViolation: return "FunctionalEquationViolation";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ToleranceUnreachable: return "ToleranceUnreachable";
    case ErrorKind::PoleAtNonPositiveInteger: return "PoleAtNonPositiveInteger";
    case ErrorKind::NearPole: return "NearPole";
    case ErrorKind::NearZeroOfLogDeriv: return "NearZeroOfLogDeriv";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::RootFindingFailed: return "RootFindingFailed";
    case ErrorKind::DegenerateRatio: return "DegenerateRatio";
  }
  return "Unknown";
}

bool is_numerical_failure(ErrorKind kind) {
  return kind == ErrorKind::ToleranceUnreachable ||
         kind == ErrorKind::RootFindingFailed ||
         kind == ErrorKind::QuadratureNotConverged;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic below 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      n /= f;
      if (n % f == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d * d != n) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  u128 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    result *= base;
    if (result > (static_cast<u128>(1) << 63)) {
      throw Error(ErrorKind::InvalidArgument, "integer power overflows 63 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

BigInt big_pow(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

double big_ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "big_ratio: zero denominator");
  const auto bits = [](const BigInt& x) -> long {
    return x == 0 ? 0 : static_cast<long>(boost::multiprecision::msb(abs(x)));
  };
  const long shift = std::max(bits(num), bits(den)) - 900;
  if (shift <= 0) return num.convert_to<double>() / den.convert_to<double>();
  const BigInt n = num >> shift;
  const BigInt d = den >> shift;
  return n.convert_to<double>() / d.convert_to<double>();
}

double big_log(const BigInt& n) {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "big_log of non-positive value");
  const long bits = static_cast<long>(boost::multiprecision::msb(n));
  const long shift = bits > 60 ? bits - 60 : 0;
  const BigInt top = n >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

PrimePower::PrimePower(std::uint64_t p, unsigned r) : p_(p), r_(r), q_(0) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p is not prime");
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "exponent r must be positive");
  q_ = checked_pow(p, r);
}

PrimePower PrimePower::from_q(std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
  const auto factors = prime_factors(q);
  if (factors.size() != 1) {
    throw Error(ErrorKind::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
  }
  unsigned r = 0;
  for (std::uint64_t m = q; m > 1; m /= factors[0]) ++r;
  return PrimePower(factors[0], r);
}

}  // namespace ffgold
