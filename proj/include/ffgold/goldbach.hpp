#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "ffgold/function_field.hpp"

namespace ffgold {

/// Two function fields K1, K2 with point counts precomputed to a working depth.
class FieldPair {
 public:
  FieldPair(FunctionFieldSpec k1, FunctionFieldSpec k2, unsigned depth = 64);

  const FunctionFieldSpec& k1() const noexcept { return k1_; }
  const FunctionFieldSpec& k2() const noexcept { return k2_; }
  const PointCounts& counts1() const noexcept { return counts1_; }
  const PointCounts& counts2() const noexcept { return counts2_; }
  unsigned depth() const noexcept { return depth_; }

  /// p1 == p2: meromorphic on C. p1 != p2: Re s = 2 is a natural boundary.
  bool same_characteristic() const noexcept { return k1_.p() == k2_.p(); }

 private:
  FunctionFieldSpec k1_, k2_;
  unsigned depth_;
  PointCounts counts1_, counts2_;
};

struct GoldbachValue {
  std::uint64_t n = 0;
  std::vector<std::pair<unsigned, unsigned>> reps;
  double value = 0.0;
};

/// A complex value with a rigorous bound on the omitted remainder.
struct EvalResult {
  std::complex<double> value;
  double tail_bound = 0.0;
  std::size_t terms_used = 0;
};

/// Sum of Lambda_K(A) over divisors of norm q^k, i.e. N_k log q.
double lambda_norm_sum(const FunctionFieldSpec& spec, unsigned k);

/// All (k1, k2), k_i >= 1, with q1^k1 + q2^k2 = n, lexicographic.
std::vector<std::pair<unsigned, unsigned>> representations(std::uint64_t n, std::uint64_t q1,
                                                           std::uint64_t q2);

/// G_2(n) from point counts. Throws DepthExceeded if the pair's counts are too shallow.
GoldbachValue goldbach_G(const FieldPair& pair, std::uint64_t n);

inline constexpr double kDirectDeltaMin = 0.1;
inline constexpr unsigned kDirectDepthBudget = 6000;

/// Phi_2(s) summed over the (k1, k2) grid. Truncation is chosen so that the
/// remainder bound
///   log q1 log q2 2^{-sigma} C1 C2 [T1(K1) S2 + S1 T2(K2)],
/// with x_i = q_i^{1 - sigma/2}, S_i = x_i/(1-x_i), T_i(K) = x_i^{K+1}/(1-x_i)
/// and C_i = 1 + 1/q_i + 2 g_i / sqrt(q_i) (from N_k <= q^k + 1 + 2g q^{k/2}),
/// falls below target_tail.
/// Throws DomainError if Re s < 2 + delta_min, ToleranceUnreachable if the
/// grid would exceed kDirectDepthBudget.
EvalResult phi_direct(const FieldPair& pair, std::complex<double> s, double target_tail = 1e-10,
                      double delta_min = kDirectDeltaMin);

/// Same series summed in increasing order of the exact norm n, grouping all
/// (k1, k2) with equal q1^k1 + q2^k2. Independent of phi_direct's summation.
EvalResult phi_by_norm(const FieldPair& pair, std::complex<double> s, double target_tail = 1e-10,
                       double delta_min = kDirectDeltaMin);

/// The remainder bound used by both summation orders.
double direct_tail_bound(const FieldPair& pair, double sigma, unsigned k1_max, unsigned k2_max);

}  // namespace ffgold
