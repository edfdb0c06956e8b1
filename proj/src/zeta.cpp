#include "ffgold/zeta.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ffgold/error.hpp"
#include "ffgold/polynomial_roots.hpp"
#include "ffgold/special_functions.hpp"

namespace ffgold {

namespace {

using cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Distance from x to the lattice offset + i * period * Z.
double lattice_distance(cplx x, double offset, double period) {
  const double re = x.real() - offset;
  const double im = x.imag() - period * std::round(x.imag() / period);
  return std::hypot(re, im);
}

}  // namespace

ZetaLogDeriv::ZetaLogDeriv(const FunctionFieldSpec& spec) : spec_(spec) {
  const auto& c = spec_.l_coeffs();
  const std::int64_t q = static_cast<std::int64_t>(spec_.q());
  l_coeffs_.assign(c.begin(), c.end());
  const std::size_t deg = c.size() - 1;
  std::vector<std::int64_t> qc(deg + 2, 0);
  // L'(u) (1 - (1+q) u + q u^2)
  for (std::size_t j = 1; j <= deg; ++j) {
    const std::int64_t d = static_cast<std::int64_t>(j) * c[j];
    qc[j - 1] += d;
    qc[j] -= (1 + q) * d;
    qc[j + 1] += q * d;
  }
  // L(u) (1 + q - 2 q u)
  for (std::size_t j = 0; j <= deg; ++j) {
    qc[j] += (1 + q) * c[j];
    qc[j + 1] -= 2 * q * c[j];
  }
  while (qc.size() > 1 && qc.back() == 0) qc.pop_back();
  q_coeffs_ = std::move(qc);
  for (const cplx& pi : spec_.inverse_roots()) root_args_.push_back(std::arg(pi));
}

ZetaLogDeriv::Parts ZetaLogDeriv::parts(cplx s) const {
  const double lq = spec_.log_q();
  Parts p;
  p.u = std::exp(-s * lq);
  p.one_minus_u = -expm1(-s * lq);
  p.one_minus_qu = -expm1((1.0 - s) * lq);
  p.l = p.dl = p.ddl = 0.0;
  for (std::size_t i = l_coeffs_.size(); i-- > 0;) {
    p.ddl = p.ddl * p.u + 2.0 * p.dl;
    p.dl = p.dl * p.u + p.l;
    p.l = p.l * p.u + l_coeffs_[i];
  }
  return p;
}

double ZetaLogDeriv::pole_distance(cplx s) const {
  const double period = kTwoPi / spec_.log_q();
  double d = std::min(lattice_distance(s, 0.0, period), lattice_distance(s, 1.0, period));
  for (double theta : root_args_) {
    d = std::min(d, lattice_distance(s - cplx(0.0, theta / spec_.log_q()), 0.5, period));
  }
  return d;
}

cplx ZetaLogDeriv::value(cplx s) const {
  if (pole_distance(s) < kPoleGuard) throw Error(ErrorKind::NearPole, "zeta'/zeta evaluated at a pole");
  const Parts p = parts(s);
  const double q = static_cast<double>(spec_.q());
  const cplx num = p.dl * p.one_minus_u * p.one_minus_qu + p.l * (p.one_minus_qu + q * p.one_minus_u);
  return -spec_.log_q() * p.u * num / (p.l * p.one_minus_u * p.one_minus_qu);
}

cplx ZetaLogDeriv::derivative(cplx s) const {
  if (pole_distance(s) < kPoleGuard) throw Error(ErrorKind::NearPole, "zeta'/zeta evaluated at a pole");
  const Parts p = parts(s);
  const double q = static_cast<double>(spec_.q());
  const double lq = spec_.log_q();
  const cplx d = p.l * p.one_minus_u * p.one_minus_qu;
  const cplx num = p.dl * p.one_minus_u * p.one_minus_qu + p.l * (p.one_minus_qu + q * p.one_minus_u);
  const cplx dnum = p.ddl * p.one_minus_u * p.one_minus_qu - 2.0 * q * p.l;
  const cplx log_dd = p.dl / p.l - 1.0 / p.one_minus_u - q / p.one_minus_qu;
  return lq * lq * p.u * ((num + p.u * dnum) / d - (p.u * num / d) * log_dd);
}

double ZetaLogDeriv::sup_on_line(double re) const {
  const double q = static_cast<double>(spec_.q());
  const double r = std::exp(-re * spec_.log_q());
  double num = 0.0, rj = 1.0;
  for (std::int64_t c : q_coeffs_) {
    num += std::abs(static_cast<double>(c)) * rj;
    rj *= r;
  }
  const double den = std::abs(1.0 - r) * std::abs(1.0 - q * r) *
                     std::pow(std::abs(1.0 - std::sqrt(q) * r), 2.0 * spec_.genus());
  if (!(den > 1e-300)) return std::numeric_limits<double>::infinity();
  return spec_.log_q() * r * num / den;
}

std::vector<cplx> numerator_roots(const FunctionFieldSpec& spec) {
  const ZetaLogDeriv f(spec);
  std::vector<double> c(f.numerator_coeffs().begin(), f.numerator_coeffs().end());
  std::vector<cplx> roots = polynomial_roots(c);
  std::erase_if(roots, [](cplx w) { return std::abs(w) == 0.0; });
  return roots;
}

cplx zeta_logderiv(const FunctionFieldSpec& spec, cplx s) { return ZetaLogDeriv(spec).value(s); }

cplx zeta_logderiv_derivative(const FunctionFieldSpec& spec, cplx s) {
  return ZetaLogDeriv(spec).derivative(s);
}

cplx zeta_value(const FunctionFieldSpec& spec, cplx s) {
  const double lq = spec.log_q();
  const cplx u = std::exp(-s * lq);
  cplx l = 0.0;
  const auto& c = spec.l_coeffs();
  for (std::size_t i = c.size(); i-- > 0;) l = l * u + static_cast<double>(c[i]);
  return l / (expm1(-s * lq) * expm1((1.0 - s) * lq));
}

LaurentAtZero laurent_at_zero(const FunctionFieldSpec& spec) {
  const auto& c = spec.l_coeffs();
  double l1 = 0.0, dl1 = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    l1 += static_cast<double>(c[j]);
    dl1 += static_cast<double>(j) * static_cast<double>(c[j]);
  }
  const double q = static_cast<double>(spec.q());
  const double lq = spec.log_q();
  LaurentAtZero out;
  out.c_minus1 = l1 / ((1.0 - q) * lq);
  const double ratio = -lq * dl1 / l1 - lq * q / (1.0 - q) + lq / 2.0;
  out.c_0 = out.c_minus1 * ratio;
  return out;
}

}  // namespace ffgold
