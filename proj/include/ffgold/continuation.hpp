#pragma once

#include <complex>

#include "ffgold/goldbach.hpp"

namespace ffgold {

/// Knobs of the residue decomposition
///   Phi_2 = Sigma_1 + Sigma_half + Sigma_0 + R_0 + Sigma_N + I_N.
/// Windows and T set to 0 are chosen automatically: windows start at
///   ceil((|Im s| + 10) log q2 / (2 pi)) + 20
/// and double until the series tail is below series_tol.
struct DecompositionConfig {
  unsigned N = 2;
  double eps = 0.05;
  double alpha = 1.05;
  int M_b = 0;
  int M_c = 0;
  int M_a = 0;
  double T = 0.0;
  int quad_points = 32;
  double series_tol = 1e-13;
  double quad_tol = 1e-11;

  /// Throws InvalidArgument on out-of-range values.
  void validate() const;
};

inline constexpr int kMaxSeriesWindow = 1 << 14;

struct SeriesResult {
  std::complex<double> value;
  double tail_bound = 0.0;
  std::size_t terms_used = 0;
  int window = 0;
};

/// Smallest window allowed for a residue series at s.
int minimal_window(const FieldPair& pair, std::complex<double> s);

/// Gamma(s - z) Gamma(z) / Gamma(s).
std::complex<double> mb_kernel(std::complex<double> s, std::complex<double> z);

/// -sum_b K(s, rho_b) f1(s - rho_b), rho_b = 1 + 2 pi i b / log q2, with
/// K the Mellin-Barnes kernel and f_i = zeta'/zeta of K_i.
SeriesResult sigma_1(const FieldPair& pair, std::complex<double> s, const DecompositionConfig& config = {});
/// +sum_{j,c} K(s, rho) f1(s - rho), rho = 1/2 + i (arg pi_j2 + 2 pi c) / log q2.
/// Exactly 0 for g2 = 0.
SeriesResult sigma_half(const FieldPair& pair, std::complex<double> s, const DecompositionConfig& config = {});
/// -sum_{a != 0} K(s, rho_a) f1(s - rho_a), rho_a = 2 pi i a / log q2.
SeriesResult sigma_0(const FieldPair& pair, std::complex<double> s, const DecompositionConfig& config = {});

/// sum_{n=1}^{N-1} binom(-s, n) f1(s + n) f2(-n).
std::complex<double> sigma_N(const FieldPair& pair, std::complex<double> s, unsigned N);

/// Residue at the double pole z = 0:
///   f1(s) (psi(s) + gamma + C0/C-1) + f1'(s).
std::complex<double> r_0(const FieldPair& pair, std::complex<double> s);
/// The bracket psi(s) - Gamma'(1) + f1'/f1(s) + C0/C-1, i.e. r_0 / f1(s).
/// Throws NearZeroOfLogDeriv within kPoleGuard of a zero of f1.
std::complex<double> r0_bracket(const FieldPair& pair, std::complex<double> s);

/// (1/2 pi i) int over Re z = -N + eps of K(s, z) f1(s - z) f2(z).
EvalResult i_N(const FieldPair& pair, std::complex<double> s, const DecompositionConfig& config = {});

/// The same integrand over Re z = alpha; equals Phi_2(s) for Re s > alpha + 1, alpha > 1.
EvalResult phi_mellin_barnes(const FieldPair& pair, std::complex<double> s,
                             const DecompositionConfig& config = {});

struct ContinuedParts {
  SeriesResult sigma_1, sigma_half, sigma_0;
  std::complex<double> r_0;
  std::complex<double> sigma_N;
  EvalResult i_N;
  double T = 0.0;
  EvalResult total;
};

ContinuedParts phi_continued_parts(const FieldPair& pair, std::complex<double> s,
                                   const DecompositionConfig& config = {});
EvalResult phi_continued(const FieldPair& pair, std::complex<double> s, const DecompositionConfig& config = {});

}  // namespace ffgold
