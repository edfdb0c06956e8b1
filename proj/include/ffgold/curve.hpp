#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ffgold/prime_power.hpp"

namespace ffgold {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q. Coefficients are
/// F_q elements in the integer encoding of GaloisField.
struct WeierstrassCurve {
  std::uint32_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

/// Accepts either "a1,a2,a3,a4,a6" or an equation such as "y2+y=x3",
/// "y^2 + xy = x^3 + 1", "y2=x3+2x+1". Integer coefficients are element
/// encodings; a leading '-' negates in F_q.
WeierstrassCurve parse_curve(std::string_view text, const PrimePower& q);

std::string to_string(const WeierstrassCurve& curve);

/// Discriminant as an F_q element (0 iff singular).
std::uint32_t discriminant(const WeierstrassCurve& curve, const PrimePower& q);

/// Projective points over F_{q^k} by exhaustion over x. Throws BudgetExceeded
/// when q^k > kPointBudget.
std::uint64_t enumerate_points(const WeierstrassCurve& curve, const PrimePower& q, unsigned k);

inline constexpr std::uint64_t kPointBudget = 1'000'000;

}  // namespace ffgold
