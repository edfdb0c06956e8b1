#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffgold/arith.hpp"
#include "ffgold/curve.hpp"
#include "ffgold/function_field.hpp"

namespace support {

using ffgold::FunctionFieldSpec;
using ffgold::PrimePower;

inline const char* test_curve(std::uint64_t q) {
  switch (q) {
    case 2:
    case 4:
      return "y2+y=x3";
    case 3:
      return "y2=x3+2x+1";
    case 5:
      return "y2=x3+x";
    default:
      return "y2=x3+x+1";
  }
}

inline FunctionFieldSpec rational(std::uint64_t q) { return ffgold::make_rational_field(PrimePower::from_q(q)); }

inline FunctionFieldSpec elliptic(std::uint64_t q) {
  const PrimePower pq = PrimePower::from_q(q);
  return ffgold::make_elliptic_field(pq, ffgold::parse_curve(test_curve(q), pq));
}

inline FunctionFieldSpec model(std::uint64_t q, unsigned genus) { return genus == 0 ? rational(q) : elliptic(q); }

// Places of degree d = 1..d_max, never touching the L-polynomial: monic
// irreducibles (plus infinity) for rational fields, Galois orbits of curve
// points for elliptic ones.
inline std::vector<std::uint64_t> places_by_enumeration(std::uint64_t q, unsigned genus, unsigned d_max) {
  const PrimePower pq = PrimePower::from_q(q);
  std::vector<std::uint64_t> a(d_max, 0);
  if (genus == 0) {
    for (unsigned d = 1; d <= d_max; ++d) a[d - 1] = ffgold::enumerate_irreducibles(pq, d) + (d == 1 ? 1 : 0);
    return a;
  }
  const auto curve = ffgold::parse_curve(test_curve(q), pq);
  std::vector<std::int64_t> n(d_max + 1, 0);
  for (unsigned e = 1; e <= d_max; ++e) n[e] = static_cast<std::int64_t>(ffgold::enumerate_points(curve, pq, e));
  for (unsigned d = 1; d <= d_max; ++d) {
    std::int64_t sum = 0;
    for (unsigned e = 1; e <= d; ++e) {
      if (d % e == 0) sum += ffgold::mobius(d / e) * n[e];
    }
    a[d - 1] = static_cast<std::uint64_t>(sum / d);
  }
  return a;
}

// Prime-power divisors hP grouped by norm: norm -> sum of Lambda(hP) = deg P log q.
inline std::map<std::uint64_t, double> lambda_by_norm(std::uint64_t q, const std::vector<std::uint64_t>& places,
                                                      std::uint64_t norm_max) {
  std::map<std::uint64_t, double> out;
  const double lq = std::log(static_cast<double>(q));
  for (unsigned d = 1; d <= places.size(); ++d) {
    for (std::uint64_t place = 0; place < places[d - 1]; ++place) {
      std::uint64_t norm = 1;
      for (unsigned i = 0; i < d; ++i) norm *= q;
      for (std::uint64_t nh = norm; nh <= norm_max; nh *= norm) {
        out[nh] += d * lq;
        if (nh > norm_max / norm) break;
      }
    }
  }
  return out;
}

// G_2(n) as the literal double sum over pairs of prime-power divisors.
inline double goldbach_brute_force(std::uint64_t n, std::uint64_t q1, const std::vector<std::uint64_t>& places1,
                                   std::uint64_t q2, const std::vector<std::uint64_t>& places2) {
  const auto l1 = lambda_by_norm(q1, places1, n);
  const auto l2 = lambda_by_norm(q2, places2, n);
  double total = 0.0;
  for (const auto& [norm1, lam1] : l1) {
    if (norm1 >= n) break;
    auto it = l2.find(n - norm1);
    if (it != l2.end()) total += lam1 * it->second;
  }
  return total;
}

// Monic polynomials of degree m <= n paired with (n - m) times infinity.
inline std::uint64_t rational_divisors_by_enumeration(std::uint64_t q, unsigned n) {
  std::uint64_t count = 0;
  for (unsigned m = 0; m <= n; ++m) {
    std::uint64_t monic = 1;
    for (unsigned i = 0; i < m; ++i) monic *= q;
    for (std::uint64_t poly = 0; poly < monic; ++poly) ++count;
  }
  return count;
}

}  // namespace support
