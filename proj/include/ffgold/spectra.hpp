#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ffgold/continuation.hpp"
#include "ffgold/zeta.hpp"

namespace ffgold {

/// A possible pole of the continued series.
///
/// Families (K1 lattices carry a trailing 1, K2 lattices do not):
///   a, b, c, d, -n       poles of R_0: rho(a1), rho(b1), rho(c_j1), rho(d_k1), -n
///   a-n, b-n, c-n        rho(a2) - n, rho(b2) - n, rho(c_j2) - n, n >= 0
///   a1-n, b1-n, c1-n     rho(x1) - n, 1 <= n <= N-1
///   x+y                  rho(x1) + rho(y2), x, y in {a, b, c}
struct PoleRecord {
  std::string family;
  std::vector<long> indices;
  std::complex<double> location;
  int order = 1;
};

struct Region {
  double re_min = -1e300, re_max = 1e300, im_min = -1e300, im_max = 1e300;
  bool contains(std::complex<double> s) const {
    return s.real() >= re_min && s.real() <= re_max && s.imag() >= im_min && s.imag() <= im_max;
  }
};

const std::vector<std::string>& pole_families();

/// Poles of the selected families with every index in [-index_bound, index_bound]
/// (and 0 <= n <= index_bound), inside region, deduplicated by location to 1e-9
/// keeping the first family listed.
std::vector<PoleRecord> enumerate_poles(const FieldPair& pair, const std::vector<std::string>& families,
                                        int index_bound, const Region& region = {}, unsigned N = 2);

/// Recomputes a record's location from its family and indices.
std::complex<double> pole_location(const FieldPair& pair, const std::string& family,
                                   const std::vector<long>& indices);

struct ProbeRow {
  std::string label;
  double parameter = 0.0;
  double observed = 0.0;
  double predicted = 0.0;
  double bound = 0.0;
};

struct ProbeVerdict {
  std::string criterion;
  bool pass = false;
};

struct ProbeReport {
  std::string probe;
  std::vector<ProbeRow> rows;
  std::vector<ProbeVerdict> verdicts;

  bool all_pass() const;
  const ProbeVerdict& verdict(const std::string& criterion) const;
};

/// min_k |w_k| against q^{-2}. Rows: one per root, plus a boundary flag row for
/// each root with | |w| - q^{-2} | <= 1e-9.
ProbeReport check_w_bound(const FunctionFieldSpec& spec);

/// Max circle gap of the fractional parts {b theta}, |b| <= B and |b| <= 2B,
/// theta = log q1 / log q2 in 50-digit arithmetic. Throws DegenerateRatio if p1 = p2.
ProbeReport density_gap(std::uint64_t q1, std::uint64_t q2, long B);

/// Record minima of |X(b)| = || b log q1 / log q2 ||, b = 1..B, minima over
/// dyadic prefixes and the fitted exponent C_hat in min |X| ~ B'^{-C_hat}.
/// Throws DegenerateRatio if p1 = p2.
ProbeReport gelfond_probe(std::uint64_t q1, std::uint64_t q2, long B);

/// Sigma_1 near rho(b1_0) + rho(b2_0) approached from the right, with the
/// b2 = b2_0 term split off and the divergent part of f1 isolated:
///   dominant = K(s, rho(b2_0)) l1 [u/(1-u) + q1 u/(1 - q1 u)],  u = q1^{-(s - rho(b2_0))}.
/// For p1 = p2 runs a control at a regular point shifted by +i and checks boundedness.
ProbeReport boundary_probe(const FieldPair& pair, long b1_0, long b2_0, const std::vector<double>& eta_list,
                           const DecompositionConfig& config = {});

}  // namespace ffgold
