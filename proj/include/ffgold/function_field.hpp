#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffgold/arith.hpp"
#include "ffgold/curve.hpp"
#include "ffgold/prime_power.hpp"

namespace ffgold {

enum class FieldSource { rational, elliptic, custom };

const char* to_string(FieldSource source);

/// Relative tolerance on | |pi_j| - sqrt(q) | / sqrt(q).
inline constexpr double kWeilTol = 1e-9;

/// A function field over F_q presented by its L-polynomial
/// L(u) = sum_j c_j u^j = prod_j (1 - pi_j u), deg L = 2g.
///
/// Construction validates c_0 = 1, the functional equation
/// c_{2g-j} = q^{g-j} c_j, and the Weil bound on the inverse roots.
/// Instances are immutable; inverse roots are computed once.
class FunctionFieldSpec {
 public:
  FunctionFieldSpec(PrimePower q, std::vector<std::int64_t> l_coeffs, FieldSource source,
                    std::optional<WeierstrassCurve> curve = std::nullopt);

  const PrimePower& prime_power() const noexcept { return q_; }
  std::uint64_t q() const noexcept { return q_.q(); }
  std::uint64_t p() const noexcept { return q_.p(); }
  unsigned genus() const noexcept { return genus_; }
  const std::vector<std::int64_t>& l_coeffs() const noexcept { return l_coeffs_; }
  FieldSource source() const noexcept { return source_; }
  const std::optional<WeierstrassCurve>& curve() const noexcept { return curve_; }
  double log_q() const noexcept { return log_q_; }

  /// pi_j, sorted by argument in (-pi, pi].
  const std::vector<std::complex<double>>& inverse_roots() const noexcept { return inverse_roots_; }

 private:
  PrimePower q_;
  std::vector<std::int64_t> l_coeffs_;
  FieldSource source_;
  std::optional<WeierstrassCurve> curve_;
  unsigned genus_;
  double log_q_;
  std::vector<std::complex<double>> inverse_roots_;
};

FunctionFieldSpec make_rational_field(const PrimePower& q);

/// Genus-1 field of a nonsingular Weierstrass curve; N_1 by exhaustion.
FunctionFieldSpec make_elliptic_field(const PrimePower& q, const WeierstrassCurve& curve);

FunctionFieldSpec make_custom_field(const PrimePower& q, std::vector<std::int64_t> l_coeffs);

/// N_k = #degree-1 places over F_{q^k}, k = 1..k_max (index 0 holds N_1).
struct PointCounts {
  std::vector<BigInt> n;

  const BigInt& at(unsigned k) const { return n.at(k - 1); }
  unsigned depth() const noexcept { return static_cast<unsigned>(n.size()); }
};

/// a_d = number of places of degree d, d = 1..k_max (index 0 holds a_1).
struct PlaceCounts {
  std::vector<BigInt> a;

  const BigInt& at(unsigned d) const { return a.at(d - 1); }
};

/// Newton's identities over exact integers: N_k = q^k + 1 - S_k.
PointCounts point_counts(const FunctionFieldSpec& spec, unsigned k_max);

/// Moebius inversion of sum_{d|k} d a_d = N_k. Throws InvalidSpec if some a_d
/// is negative or non-integral.
PlaceCounts place_counts(const FunctionFieldSpec& spec, unsigned k_max);

/// b(n): coefficient of u^n in L(u)/((1-u)(1-qu)).
BigInt effective_divisor_count(const FunctionFieldSpec& spec, unsigned n);

// Exhaustive oracles. These never touch the L-polynomial.

inline constexpr std::uint64_t kPolynomialBudget = 10'000'000;

/// Monic irreducible polynomials of degree d over F_q, by sieving all monic
/// degree-d polynomials against products of lower-degree irreducibles.
std::uint64_t enumerate_irreducibles(const PrimePower& q, unsigned d);

/// Number of effective divisors of degree n, counted as multisets of places
/// from the given per-degree place counts (a[0] = places of degree 1).
BigInt count_effective_divisors(const std::vector<std::uint64_t>& places_by_degree, unsigned n);

}  // namespace ffgold
