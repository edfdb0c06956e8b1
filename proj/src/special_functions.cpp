#include "ffgold/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "ffgold/error.hpp"

namespace ffgold {

namespace {

using cplx = std::complex<double>;

// B_{2k} for k = 1..10.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,          -1.0 / 30.0,     1.0 / 42.0,      -1.0 / 30.0,  5.0 / 66.0,
    -691.0 / 2730.0,    7.0 / 6.0,       -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0};

constexpr double kShiftTarget = 16.0;

bool is_pole(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

int shift_count(cplx z) {
  return z.real() < kShiftTarget ? static_cast<int>(std::ceil(kShiftTarget - z.real())) : 0;
}

cplx stirling_log_gamma(cplx w) {
  cplx sum = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * std::numbers::pi);
  const cplx inv = 1.0 / w;
  const cplx inv2 = inv * inv;
  cplx power = inv;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    sum += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  return sum;
}

cplx asymptotic_digamma(cplx w) {
  cplx sum = std::log(w) - 0.5 / w;
  const cplx inv2 = 1.0 / (w * w);
  cplx power = inv2;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    sum -= kBernoulli[k - 1] / (2.0 * k) * power;
    power *= inv2;
  }
  return sum;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_pole(z)) {
    throw Error(ErrorKind::PoleAtNonPositiveInteger, "Gamma has a pole at a non-positive integer");
  }
  if (z.real() < -40.0) {
    // Reflection keeps the shift count bounded; branch fixed only modulo 2 pi i.
    const double pi = std::numbers::pi;
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  const int m = shift_count(z);
  cplx correction = 0.0;
  for (int j = 0; j < m; ++j) correction += std::log(z + static_cast<double>(j));
  cplx out = stirling_log_gamma(z + static_cast<double>(m)) - correction;
  if (z.imag() == 0.0 && z.real() > 0.0) out.imag(0.0);
  return out;
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx digamma(cplx z) {
  if (is_pole(z)) {
    throw Error(ErrorKind::PoleAtNonPositiveInteger, "digamma has a pole at a non-positive integer");
  }
  if (z.real() < -40.0) {
    const double pi = std::numbers::pi;
    return digamma(1.0 - z) - pi / std::tan(pi * z);
  }
  const int m = shift_count(z);
  cplx correction = 0.0;
  for (int j = 0; j < m; ++j) correction += 1.0 / (z + static_cast<double>(j));
  return asymptotic_digamma(z + static_cast<double>(m)) - correction;
}

cplx expm1(cplx z) {
  const double x = z.real(), y = z.imag();
  const double s = std::sin(0.5 * y);
  const double ex = std::exp(x);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, ex * std::sin(y)};
}

double distance_to_gamma_pole(cplx z) {
  const double n = std::min(0.0, std::round(z.real()));
  return std::abs(z - cplx(n, 0.0));
}

}  // namespace ffgold
