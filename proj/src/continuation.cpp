#include "ffgold/continuation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "ffgold/error.hpp"
#include "ffgold/quadrature.hpp"
#include "ffgold/special_functions.hpp"
#include "ffgold/zeta.hpp"

namespace ffgold {

namespace {

using cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// One residue lattice rho_k = base + i step k, summed with the given sign.
class ResidueSeries {
 public:
  ResidueSeries(const FieldPair& pair, const ZetaLogDeriv& f1, cplx s, cplx base, double sign, bool skip_zero)
      : pair_(pair), f1_(f1), s_(s), base_(base), sign_(sign), skip_zero_(skip_zero),
        step_(kTwoPi / pair.k2().log_q()), log_gamma_s_(log_gamma(s)) {}

  cplx rho(long k) const { return base_ + cplx(0.0, step_ * static_cast<double>(k)); }

  cplx kernel(long k) const {
    const cplx z = rho(k);
    if (distance_to_gamma_pole(s_ - z) < kPoleGuard) {
      throw Error(ErrorKind::NearPole, "s - rho hits a pole of Gamma");
    }
    return std::exp(log_gamma(s_ - z) + log_gamma(z) - log_gamma_s_);
  }

  cplx term(long k) const { return sign_ * kernel(k) * f1_.value(s_ - rho(k)); }

  cplx sum(int window) const {
    cplx total = 0.0;
    for (long k = window; k >= 1; --k) total += term(k) + term(-k);
    if (!skip_zero_) total += term(0);
    return total;
  }

  // Geometric majorant of sum_{|k| > M} |K(s, rho_k)| times a bound on |f1(s - rho_k)|.
  double tail(int window) const {
    double kernel_mass = 0.0;
    for (int side : {1, -1}) {
      double g[3];
      for (int i = 0; i < 3; ++i) g[i] = std::abs(kernel(side * (window + 1L + i)));
      if (g[0] == 0.0) continue;
      const double r = std::max(g[1] / g[0], g[2] / std::max(g[1], 1e-300));
      if (!(r < 1.0)) return kInf;
      kernel_mass += g[0] / (1.0 - r);
    }
    if (kernel_mass == 0.0) return 0.0;
    return kernel_mass * f1_sup(window);
  }

 private:
  double f1_sup(int window) const {
    if (pair_.same_characteristic()) {
      // f1(s - rho_k) is periodic in k with period r2 / gcd(r1, r2).
      const long r1 = pair_.k1().prime_power().r(), r2 = pair_.k2().prime_power().r();
      const long period = r2 / std::gcd(r1, r2);
      double sup = 0.0;
      for (long k = 1; k <= period; ++k) sup = std::max(sup, std::abs(f1_.value(s_ - rho(window + k))));
      return sup;
    }
    return f1_.sup_on_line(s_.real() - base_.real());
  }

  const FieldPair& pair_;
  const ZetaLogDeriv& f1_;
  cplx s_, base_;
  double sign_;
  bool skip_zero_;
  double step_;
  cplx log_gamma_s_;
};

int resolve_window(int configured, int minimal) {
  if (configured == 0) return minimal;
  if (configured < minimal) {
    throw Error(ErrorKind::InvalidArgument, "window " + std::to_string(configured) +
                                                " is below the minimal window " + std::to_string(minimal));
  }
  return configured;
}

// Sums a family of lattices sharing one window, growing an automatic window
// until the tail is below tol.
template <class Series>
SeriesResult run_series(const std::vector<Series>& lattices, int configured, int minimal, double tol,
                        std::size_t terms_per_index) {
  int window = resolve_window(configured, minimal);
  auto total_tail = [&](int m) {
    double t = 0.0;
    for (const auto& lat : lattices) t += lat.tail(m);
    return t;
  };
  double tail = total_tail(window);
  if (configured == 0) {
    while (!(tail <= tol)) {
      if (window * 2 > kMaxSeriesWindow) {
        throw Error(ErrorKind::ToleranceUnreachable, "residue series window exceeds budget");
      }
      window *= 2;
      tail = total_tail(window);
    }
  }
  SeriesResult out;
  for (const auto& lat : lattices) out.value += lat.sum(window);
  out.tail_bound = tail;
  out.window = window;
  out.terms_used = lattices.size() * (2 * static_cast<std::size_t>(window) + terms_per_index);
  return out;
}

double auto_height(cplx s) { return 0.5 * std::abs(s.imag()) + 14.0; }

EvalResult contour_integral(const FieldPair& pair, cplx s, double c, const DecompositionConfig& config) {
  const ZetaLogDeriv f1(pair.k1()), f2(pair.k2());
  const cplx log_gamma_s = log_gamma(s);
  auto integrand = [&](cplx z) {
    return std::exp(log_gamma(s - z) + log_gamma(z) - log_gamma_s) * f1.value(s - z) * f2.value(z);
  };
  const double sup = f1.sup_on_line(s.real() - c) * f2.sup_on_line(c);
  auto envelope = [&](double t) { return std::abs(std::exp(log_gamma(s - cplx(c, t)) + log_gamma(cplx(c, t)) - log_gamma_s)) * sup; };
  const double T = config.T > 0.0 ? config.T : auto_height(s);
  const VerticalIntegral r = integrate_vertical(integrand, c, 0.5 * s.imag(), T, config.quad_points,
                                                config.quad_tol, s.real() - 1.0, envelope);
  return {r.value, r.error + r.tail, static_cast<std::size_t>(std::ceil(2.0 * T)) * config.quad_points};
}

}  // namespace

void DecompositionConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); };
  if (N < 1 || N > 50) bad("N must be in [1, 50]");
  if (!(eps > 0.0 && eps < 0.5)) bad("eps must be in (0, 0.5)");
  if (!(alpha > 0.0)) bad("alpha must be positive");
  if (M_b < 0 || M_c < 0 || M_a < 0) bad("windows must be non-negative");
  if (M_b > kMaxSeriesWindow || M_c > kMaxSeriesWindow || M_a > kMaxSeriesWindow) bad("window too large");
  if (!(T >= 0.0) || T > 1e4) bad("T must be in [0, 1e4]");
  if (T > 0.0 && T <= 1.0) bad("T must exceed 1");
  if (quad_points < 2 || quad_points > 256) bad("quad_points must be in [2, 256]");
  if (!(series_tol > 0.0) || !(quad_tol > 0.0)) bad("tolerances must be positive");
}

int minimal_window(const FieldPair& pair, cplx s) {
  return static_cast<int>(std::ceil((std::abs(s.imag()) + 10.0) * pair.k2().log_q() / kTwoPi)) + 20;
}

cplx mb_kernel(cplx s, cplx z) { return std::exp(log_gamma(s - z) + log_gamma(z) - log_gamma(s)); }

SeriesResult sigma_1(const FieldPair& pair, cplx s, const DecompositionConfig& config) {
  config.validate();
  const ZetaLogDeriv f1(pair.k1());
  std::vector<ResidueSeries> lattices;
  lattices.emplace_back(pair, f1, s, cplx(1.0, 0.0), -1.0, false);
  return run_series(lattices, config.M_b, minimal_window(pair, s), config.series_tol, 1);
}

SeriesResult sigma_half(const FieldPair& pair, cplx s, const DecompositionConfig& config) {
  config.validate();
  if (pair.k2().genus() == 0) return {};
  const ZetaLogDeriv f1(pair.k1());
  std::vector<ResidueSeries> lattices;
  for (const cplx& pi : pair.k2().inverse_roots()) {
    lattices.emplace_back(pair, f1, s, cplx(0.5, std::arg(pi) / pair.k2().log_q()), 1.0, false);
  }
  return run_series(lattices, config.M_c, minimal_window(pair, s), config.series_tol, 1);
}

SeriesResult sigma_0(const FieldPair& pair, cplx s, const DecompositionConfig& config) {
  config.validate();
  const ZetaLogDeriv f1(pair.k1());
  std::vector<ResidueSeries> lattices;
  lattices.emplace_back(pair, f1, s, cplx(0.0, 0.0), -1.0, true);
  return run_series(lattices, config.M_a, minimal_window(pair, s), config.series_tol, 0);
}

cplx sigma_N(const FieldPair& pair, cplx s, unsigned N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  const ZetaLogDeriv f1(pair.k1()), f2(pair.k2());
  cplx binom = 1.0, total = 0.0;
  for (unsigned n = 1; n < N; ++n) {
    binom *= -(s + static_cast<double>(n - 1)) / static_cast<double>(n);
    total += binom * f1.value(s + static_cast<double>(n)) * f2.value(-static_cast<double>(n));
  }
  return total;
}

cplx r_0(const FieldPair& pair, cplx s) {
  const ZetaLogDeriv f1(pair.k1());
  const LaurentAtZero c = laurent_at_zero(pair.k2());
  return f1.value(s) * (digamma(s) + kEulerGamma + c.c_0 / c.c_minus1) + f1.derivative(s);
}

cplx r0_bracket(const FieldPair& pair, cplx s) {
  const ZetaLogDeriv f1(pair.k1());
  const double lq = pair.k1().log_q();
  const double period = kTwoPi / lq;
  for (const cplx& w : numerator_roots(pair.k1())) {
    // rho(d) = -(log|w| + i (arg w + 2 pi d)) / log q
    const cplx rho = -cplx(std::log(std::abs(w)), std::arg(w)) / lq;
    const double im = s.imag() - rho.imag();
    const double dist = std::hypot(s.real() - rho.real(), im - period * std::round(im / period));
    if (dist < kPoleGuard) throw Error(ErrorKind::NearZeroOfLogDeriv, "s is at a zero of zeta'/zeta");
  }
  const LaurentAtZero c = laurent_at_zero(pair.k2());
  return digamma(s) + kEulerGamma + f1.derivative(s) / f1.value(s) + c.c_0 / c.c_minus1;
}

EvalResult i_N(const FieldPair& pair, cplx s, const DecompositionConfig& config) {
  config.validate();
  const double c = -static_cast<double>(config.N) + config.eps;
  if (!(s.real() > c + 1.0 + kPoleGuard)) {
    throw Error(ErrorKind::DomainError, "I_N needs Re s > 1 - N + eps");
  }
  return contour_integral(pair, s, c, config);
}

EvalResult phi_mellin_barnes(const FieldPair& pair, cplx s, const DecompositionConfig& config) {
  config.validate();
  if (!(config.alpha > 1.0) || !(s.real() > config.alpha + 1.0)) {
    throw Error(ErrorKind::DomainError, "the alpha contour needs 1 < alpha < Re s - 1");
  }
  return contour_integral(pair, s, config.alpha, config);
}

ContinuedParts phi_continued_parts(const FieldPair& pair, cplx s, const DecompositionConfig& config) {
  config.validate();
  ContinuedParts out;
  out.sigma_1 = sigma_1(pair, s, config);
  out.sigma_half = sigma_half(pair, s, config);
  out.sigma_0 = sigma_0(pair, s, config);
  out.r_0 = r_0(pair, s);
  out.sigma_N = sigma_N(pair, s, config.N);
  out.i_N = i_N(pair, s, config);
  out.T = config.T > 0.0 ? config.T : auto_height(s);
  out.total.value = out.sigma_1.value + out.sigma_half.value + out.sigma_0.value + out.r_0 + out.sigma_N +
                    out.i_N.value;
  out.total.tail_bound =
      out.sigma_1.tail_bound + out.sigma_half.tail_bound + out.sigma_0.tail_bound + out.i_N.tail_bound;
  out.total.terms_used = out.sigma_1.terms_used + out.sigma_half.terms_used + out.sigma_0.terms_used +
                         config.N + out.i_N.terms_used;
  return out;
}

EvalResult phi_continued(const FieldPair& pair, cplx s, const DecompositionConfig& config) {
  return phi_continued_parts(pair, s, config).total;
}

}  // namespace ffgold
