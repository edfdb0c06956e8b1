#include "ffgold/polynomial_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "ffgold/error.hpp"

namespace ffgold {

namespace {

using cplx = std::complex<double>;

void horner(std::span<const double> c, cplx x, cplx& value, cplx& deriv) {
  value = 0.0;
  deriv = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    deriv = deriv * x + value;
    value = value * x + c[i];
  }
}

constexpr double kClusterTol = 1e-6;
constexpr double kResidualTol = 1e-9;

}  // namespace

double relative_residual(std::span<const double> coeffs, cplx x) {
  cplx value = 0.0;
  double scale = 0.0;
  const double ax = std::abs(x);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    value = value * x + coeffs[i];
    scale = scale * ax + std::abs(coeffs[i]);
  }
  return scale == 0.0 ? 0.0 : std::abs(value) / scale;
}

std::vector<cplx> polynomial_roots(std::span<const double> coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0.0) --n;
  if (n == 0) throw Error(ErrorKind::RootFindingFailed, "zero polynomial");
  const auto c = coeffs.first(n);
  const std::size_t degree = n - 1;
  if (degree == 0) return {};

  std::vector<cplx> roots;
  if (degree == 1) {
    roots.push_back(-c[0] / c[1]);
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (std::size_t i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < degree; ++i) companion(i, degree - 1) = -c[i] / c[degree];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorKind::RootFindingFailed, "companion eigenvalue iteration failed");
    }
    const auto& ev = solver.eigenvalues();
    roots.assign(ev.data(), ev.data() + ev.size());

    // Union nearby eigenvalues into clusters.
    std::vector<std::size_t> parent(degree);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (std::size_t i = 0; i < degree; ++i) {
      for (std::size_t j = i + 1; j < degree; ++j) {
        const double scale = std::max(1.0, std::abs(roots[i]));
        if (std::abs(roots[i] - roots[j]) <= kClusterTol * scale) parent[find(j)] = find(i);
      }
    }
    std::vector<cplx> polished(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      const std::size_t root = find(i);
      cplx sum = 0.0;
      std::size_t members = 0;
      for (std::size_t j = 0; j < degree; ++j) {
        if (find(j) == root) {
          sum += roots[j];
          ++members;
        }
      }
      if (members > 1) {
        polished[i] = sum / static_cast<double>(members);
      } else {
        cplx value, deriv;
        horner(c, roots[i], value, deriv);
        polished[i] = std::abs(deriv) > 0.0 ? roots[i] - value / deriv : roots[i];
      }
    }
    roots = std::move(polished);
  }

  for (const cplx& r : roots) {
    if (!(relative_residual(c, r) <= kResidualTol)) {
      throw Error(ErrorKind::RootFindingFailed, "root residual above tolerance after polish");
    }
  }
  // Real coefficients: eigenvalue noise must not push a real root off the axis.
  for (cplx& r : roots) {
    if (std::abs(r.imag()) <= 1e-14 * std::max(1.0, std::abs(r))) r.imag(0.0);
  }
  std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
    const double aa = std::arg(a), ab = std::arg(b);
    if (std::abs(aa - ab) > 1e-12) return aa < ab;
    return std::abs(a) < std::abs(b);
  });
  return roots;
}

}  // namespace ffgold
