#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ffgold {

/// All complex roots (with multiplicity) of sum_j c_j x^j, coefficients lowest
/// degree first; exact trailing zeros are trimmed. Companion-matrix
/// eigenvalues, then one Newton step per simple root; clusters of nearby
/// eigenvalues (a perturbed multiple root) are replaced by their mean.
/// Throws RootFindingFailed if any relative residual exceeds 1e-9.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs);

/// Relative residual |p(x)| / sum |c_j| |x|^j.
double relative_residual(std::span<const double> coeffs, std::complex<double> x);

}  // namespace ffgold
