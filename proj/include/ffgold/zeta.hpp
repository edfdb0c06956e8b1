#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ffgold/function_field.hpp"

namespace ffgold {

/// Radius around singularities inside which analytic evaluations refuse.
inline constexpr double kPoleGuard = 1e-6;

/// zeta'/zeta of a function field as a rational function of u = q^{-s}:
///   zeta'/zeta(s) = -log q * u Q(u) / D(u),
///   Q(u) = L'(u)(1-u)(1-qu) + L(u)(1+q-2qu),  D(u) = L(u)(1-u)(1-qu).
/// For g = 1 the u^3 coefficient of Q cancels, so deg Q = 2g+1 except there.
class ZetaLogDeriv {
 public:
  explicit ZetaLogDeriv(const FunctionFieldSpec& spec);

  const FunctionFieldSpec& spec() const noexcept { return spec_; }

  /// Exact coefficients of Q, lowest degree first, trailing zeros trimmed.
  const std::vector<std::int64_t>& numerator_coeffs() const noexcept { return q_coeffs_; }

  /// Throws NearPole within kPoleGuard of a pole.
  std::complex<double> value(std::complex<double> s) const;
  /// d/ds of value(s), in closed form.
  std::complex<double> derivative(std::complex<double> s) const;

  /// Distance from s to the nearest pole: 2 pi i a / log q, 1 + 2 pi i b / log q,
  /// 1/2 + i (arg pi_j + 2 pi c) / log q.
  double pole_distance(std::complex<double> s) const;

  /// Upper bound for |value| on the vertical line Re s = re:
  ///   log q * r * sum |Q_j| r^j / (|1-r| |1-qr| |1-sqrt(q) r|^{2g}),  r = q^{-re}.
  /// Infinite when the line carries poles.
  double sup_on_line(double re) const;

 private:
  struct Parts {
    std::complex<double> u, one_minus_u, one_minus_qu, l, dl, ddl;
  };
  Parts parts(std::complex<double> s) const;

  FunctionFieldSpec spec_;
  std::vector<double> l_coeffs_;
  std::vector<std::int64_t> q_coeffs_;
  std::vector<double> root_args_;
};

/// Nonzero roots w_k of Q, i.e. the zeros of zeta'/zeta in the u-plane.
/// Throws RootFindingFailed if polishing leaves a residual above 1e-9.
std::vector<std::complex<double>> numerator_roots(const FunctionFieldSpec& spec);

std::complex<double> zeta_logderiv(const FunctionFieldSpec& spec, std::complex<double> s);
std::complex<double> zeta_logderiv_derivative(const FunctionFieldSpec& spec, std::complex<double> s);

/// zeta_K(s) = L(u) / ((1-u)(1-qu)).
std::complex<double> zeta_value(const FunctionFieldSpec& spec, std::complex<double> s);

/// zeta_K(s) = C_{-1}/s + C_0 + O(s).
struct LaurentAtZero {
  std::complex<double> c_minus1;
  std::complex<double> c_0;
};

LaurentAtZero laurent_at_zero(const FunctionFieldSpec& spec);

}  // namespace ffgold
