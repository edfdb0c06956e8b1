#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace ffgold {

struct GaussLegendre {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point rule, cached per n.
const GaussLegendre& gauss_legendre(int n);

struct VerticalIntegral {
  std::complex<double> value;
  double error = 0.0;  // accumulated panel-refinement differences
  double tail = 0.0;   // estimate of the mass beyond |Im z - center| > T
  double height = 0.0;
};

/// (1 / 2 pi i) * integral of f over Re z = c, |Im z - center| <= T, on unit
/// panels with n-point Gauss-Legendre, bisecting panels until the halves agree
/// to tol (or to rounding level relative to the integral of |f|). The tail is the analytic integral of
///   M(t) <= M(T) (t/T)^p exp(-pi (t - T)),  p = max(growth, 0),
/// fitted to the largest |f| on the outermost panel of each side, or to
/// envelope(center -+ T) when an envelope (a majorant of |f| at height t) is given.
/// Throws QuadratureNotConverged if refinement does not settle.
VerticalIntegral integrate_vertical(const std::function<std::complex<double>(std::complex<double>)>& f,
                                    double c, double center, double T, int n, double tol,
                                    double growth,
                                    const std::function<double(double)>& envelope = nullptr);

/// Check of (1 + lambda)^{-s} = (1/2 pi i) int_(alpha) Gamma(s-z)Gamma(z)/Gamma(s) lambda^{-z} dz.
/// T = 0 picks |Im s| + 14. Throws QuadratureNotConverged if error + tail > tol.
std::complex<double> mellin_barnes_check(double lambda, std::complex<double> s, double alpha,
                                         double T = 0.0, int quad_points = 32, double tol = 1e-11);

}  // namespace ffgold
