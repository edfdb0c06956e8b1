#pragma once

#include <complex>

namespace ffgold {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// log Gamma(z). For Re z > 0 this is the principal branch (the continuation
/// of the real lgamma); elsewhere the branch is the one reached by upward
/// recurrence, so exp(log_gamma(z)) == Gamma(z) always.
/// Throws PoleAtNonPositiveInteger at z = 0, -1, -2, ...
std::complex<double> log_gamma(std::complex<double> z);

std::complex<double> gamma(std::complex<double> z);

/// Gamma'(z)/Gamma(z).
std::complex<double> digamma(std::complex<double> z);

/// exp(z) - 1 without cancellation for small |z|.
std::complex<double> expm1(std::complex<double> z);

/// Distance from z to the nearest non-positive integer.
double distance_to_gamma_pole(std::complex<double> z);

}  // namespace ffgold
