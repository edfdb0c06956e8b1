#include "ffgold/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include "ffgold/error.hpp"
#include "ffgold/special_functions.hpp"

namespace ffgold {

namespace {

using cplx = std::complex<double>;

GaussLegendre build_rule(int n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = rule.weights[n - 1 - i] = w;
  }
  return rule;
}

struct Panel {
  cplx value;
  double max_abs;
  double abs_integral;
};

Panel panel(const std::function<cplx(cplx)>& f, const GaussLegendre& rule, double c, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Panel out{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const cplx v = f(cplx(c, mid + half * rule.nodes[i]));
    out.value += rule.weights[i] * v;
    out.max_abs = std::max(out.max_abs, std::abs(v));
    out.abs_integral += rule.weights[i] * std::abs(v);
  }
  out.value *= half;
  out.abs_integral *= half;
  return out;
}

constexpr int kMaxBisections = 14;
// Rounding floor relative to the integral of |f|, for integrands that cancel.
constexpr double kRoundingFloor = 64.0 * std::numeric_limits<double>::epsilon();

struct Adaptive {
  const std::function<cplx(cplx)>& f;
  const GaussLegendre& rule;
  double c;
  double tol_per_length;
  cplx sum = 0.0;
  double error = 0.0;

  double run(double a, double b, const Panel& whole, int depth) {
    const double m = 0.5 * (a + b);
    const Panel left = panel(f, rule, c, a, m);
    const Panel right = panel(f, rule, c, m, b);
    const double diff = std::abs(left.value + right.value - whole.value);
    if (diff <= tol_per_length * (b - a) + kRoundingFloor * whole.abs_integral) {
      sum += left.value + right.value;
      error += diff;
      return std::max(left.max_abs, right.max_abs);
    }
    if (depth >= kMaxBisections) {
      throw Error(ErrorKind::QuadratureNotConverged, "contour panel refinement did not converge");
    }
    return std::max(run(a, m, left, depth + 1), run(m, b, right, depth + 1));
  }
};

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  if (n < 2 || n > 256) throw Error(ErrorKind::InvalidArgument, "quadrature points must be in [2, 256]");
  static std::mutex mutex;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

VerticalIntegral integrate_vertical(const std::function<cplx(cplx)>& f, double c, double center, double T,
                                    int n, double tol, double growth,
                                    const std::function<double(double)>& envelope) {
  if (!(T > 1.0)) throw Error(ErrorKind::InvalidArgument, "quadrature height must exceed 1");
  const GaussLegendre& rule = gauss_legendre(n);
  const int panels = static_cast<int>(std::ceil(2.0 * T));
  const double width = 2.0 * T / panels;
  Adaptive adaptive{f, rule, c, tol / (2.0 * T)};
  double edge_low = 0.0, edge_high = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double a = center - T + k * width, b = a + width;
    const double m = adaptive.run(a, b, panel(f, rule, c, a, b), 0);
    if (k == 0) edge_low = m;
    if (k == panels - 1) edge_high = m;
  }
  if (envelope) {
    edge_low = envelope(center - T);
    edge_high = envelope(center + T);
  }
  const double p = std::max(growth, 0.0);
  const double rate = std::numbers::pi - p / T;
  VerticalIntegral out;
  out.value = adaptive.sum / (2.0 * std::numbers::pi);
  out.error = adaptive.error / (2.0 * std::numbers::pi);
  out.tail = rate > 0.0 ? (edge_low + edge_high) / rate / (2.0 * std::numbers::pi)
                        : std::numeric_limits<double>::infinity();
  out.height = T;
  return out;
}

cplx mellin_barnes_check(double lambda, cplx s, double alpha, double T, int quad_points, double tol) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::InvalidArgument, "lambda must be positive");
  if (!(s.real() > 0.0) || !(alpha > 0.0) || !(alpha < s.real())) {
    throw Error(ErrorKind::InvalidArgument, "need 0 < alpha < Re s");
  }
  if (T <= 0.0) T = std::abs(s.imag()) + 14.0;
  const cplx log_gamma_s = log_gamma(s);
  const double log_lambda = std::log(lambda);
  auto integrand = [&](cplx z) { return std::exp(log_gamma(s - z) + log_gamma(z) - log_gamma_s - z * log_lambda); };
  const VerticalIntegral r = integrate_vertical(integrand, alpha, 0.0, T, quad_points, 0.1 * tol, s.real() - 1.0);
  if (r.error + r.tail > tol) {
    throw Error(ErrorKind::QuadratureNotConverged, "Mellin-Barnes tail above tolerance");
  }
  return r.value;
}

}  // namespace ffgold
