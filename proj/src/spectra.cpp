#include "ffgold/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ffgold/arith.hpp"
#include "ffgold/error.hpp"
#include "ffgold/special_functions.hpp"

namespace ffgold {

namespace {

using cplx = std::complex<double>;
using Float50 = boost::multiprecision::cpp_bin_float_50;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// rho of a single lattice letter; consumes its indices from the front of idx.
cplx lattice_point(const FunctionFieldSpec& spec, char letter, const long*& idx) {
  const double lq = spec.log_q();
  switch (letter) {
    case 'a':
      return {0.0, kTwoPi * static_cast<double>(*idx++) / lq};
    case 'b':
      return {1.0, kTwoPi * static_cast<double>(*idx++) / lq};
    case 'c': {
      const long j = *idx++, c = *idx++;
      const auto& roots = spec.inverse_roots();
      if (j < 1 || j > static_cast<long>(roots.size())) throw Error(ErrorKind::InvalidArgument, "bad root index");
      return {0.5, (std::arg(roots[j - 1]) + kTwoPi * static_cast<double>(c)) / lq};
    }
    case 'd': {
      const long k = *idx++, d = *idx++;
      const auto roots = numerator_roots(spec);
      if (k < 1 || k > static_cast<long>(roots.size())) throw Error(ErrorKind::InvalidArgument, "bad root index");
      const cplx w = roots[k - 1];
      return -cplx(std::log(std::abs(w)), std::arg(w) + kTwoPi * static_cast<double>(d)) / lq;
    }
    default:
      throw Error(ErrorKind::InvalidArgument, std::string("unknown lattice letter ") + letter);
  }
}

std::size_t index_arity(char letter) { return letter == 'c' || letter == 'd' ? 2 : 1; }

// Index tuples for one lattice letter with all lattice indices bounded by B.
std::vector<std::vector<long>> lattice_indices(const FunctionFieldSpec& spec, char letter, int B) {
  std::vector<std::vector<long>> out;
  if (letter == 'a' || letter == 'b') {
    for (long i = -B; i <= B; ++i) out.push_back({i});
  } else {
    const long count = letter == 'c' ? static_cast<long>(spec.inverse_roots().size())
                                     : static_cast<long>(numerator_roots(spec).size());
    for (long j = 1; j <= count; ++j) {
      for (long i = -B; i <= B; ++i) out.push_back({j, i});
    }
  }
  return out;
}

struct Family {
  enum Kind { residue_k1, minus_n, shifted_k2, shifted_k1, sum } kind;
  char x = 0, y = 0;
};

Family parse_family(const std::string& tag) {
  if (tag == "-n") return {Family::minus_n};
  if (tag.size() == 1 && std::string("abcd").find(tag[0]) != std::string::npos) return {Family::residue_k1, tag[0]};
  if (tag.size() == 3 && tag.substr(1) == "-n" && std::string("abc").find(tag[0]) != std::string::npos) {
    return {Family::shifted_k2, tag[0]};
  }
  if (tag.size() == 4 && tag.substr(1) == "1-n" && std::string("abc").find(tag[0]) != std::string::npos) {
    return {Family::shifted_k1, tag[0]};
  }
  if (tag.size() == 3 && tag[1] == '+' && std::string("abc").find(tag[0]) != std::string::npos &&
      std::string("abc").find(tag[2]) != std::string::npos) {
    return {Family::sum, tag[0], tag[2]};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown pole family '" + tag + "'");
}

// Deduplication by location on a hashed grid of 1e-8 cells.
class LocationSet {
 public:
  bool insert(cplx z) {
    const long long cx = static_cast<long long>(std::floor(z.real() / kCell));
    const long long cy = static_cast<long long>(std::floor(z.imag() / kCell));
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(key(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (const cplx& w : it->second) {
          if (std::abs(w - z) <= kTol) return false;
        }
      }
    }
    cells_[key(cx, cy)].push_back(z);
    return true;
  }

 private:
  static constexpr double kCell = 1e-8;
  static constexpr double kTol = 1e-9;
  static std::uint64_t key(long long x, long long y) {
    return static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(y);
  }
  std::unordered_map<std::uint64_t, std::vector<cplx>> cells_;
};

double circle_max_gap(std::vector<Float50>& fracs, std::size_t& distinct) {
  std::sort(fracs.begin(), fracs.end());
  std::vector<Float50> gaps;
  gaps.reserve(fracs.size());
  for (std::size_t i = 1; i < fracs.size(); ++i) gaps.push_back(fracs[i] - fracs[i - 1]);
  gaps.push_back(Float50(1) - fracs.back() + fracs.front());
  std::sort(gaps.begin(), gaps.end());
  distinct = 0;
  const Float50 tol("1e-30");
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (i == 0 || gaps[i] - gaps[i - 1] > tol) ++distinct;
  }
  return static_cast<double>(gaps.back());
}

Float50 log_ratio(std::uint64_t q1, std::uint64_t q2) {
  const PrimePower a = PrimePower::from_q(q1), b = PrimePower::from_q(q2);
  if (a.p() == b.p()) {
    throw Error(ErrorKind::DegenerateRatio, "log q1 / log q2 is rational when p1 = p2");
  }
  return (a.r() * log(Float50(a.p()))) / (b.r() * log(Float50(b.p())));
}

}  // namespace

const std::vector<std::string>& pole_families() {
  static const std::vector<std::string> families = {"a",    "b",    "c",    "d",   "-n",  "a-n", "b-n",
                                                    "c-n",  "a1-n", "b1-n", "c1-n", "a+a", "a+b", "a+c",
                                                    "b+a",  "b+b",  "b+c",  "c+a", "c+b", "c+c"};
  return families;
}

cplx pole_location(const FieldPair& pair, const std::string& family, const std::vector<long>& indices) {
  const Family f = parse_family(family);
  auto need = [&](std::size_t n) {
    if (indices.size() != n) throw Error(ErrorKind::InvalidArgument, "wrong index count for family " + family);
  };
  const long* idx = indices.data();
  switch (f.kind) {
    case Family::minus_n:
      need(1);
      return {-static_cast<double>(indices[0]), 0.0};
    case Family::residue_k1:
      need(index_arity(f.x));
      return lattice_point(pair.k1(), f.x, idx);
    case Family::shifted_k2: {
      need(index_arity(f.x) + 1);
      const cplx rho = lattice_point(pair.k2(), f.x, idx);
      return rho - static_cast<double>(*idx);
    }
    case Family::shifted_k1: {
      need(index_arity(f.x) + 1);
      const cplx rho = lattice_point(pair.k1(), f.x, idx);
      return rho - static_cast<double>(*idx);
    }
    case Family::sum: {
      need(index_arity(f.x) + index_arity(f.y));
      const cplx r1 = lattice_point(pair.k1(), f.x, idx);
      return r1 + lattice_point(pair.k2(), f.y, idx);
    }
  }
  return {};
}

std::vector<PoleRecord> enumerate_poles(const FieldPair& pair, const std::vector<std::string>& families,
                                        int index_bound, const Region& region, unsigned N) {
  if (index_bound < 1) throw Error(ErrorKind::InvalidArgument, "index bound must be at least 1");
  std::vector<PoleRecord> out;
  LocationSet seen;
  auto emit = [&](const std::string& family, std::vector<long> indices) {
    const cplx z = pole_location(pair, family, indices);
    if (!region.contains(z) || !seen.insert(z)) return;
    out.push_back({family, std::move(indices), z, 1});
  };
  for (const std::string& tag : families) {
    const Family f = parse_family(tag);
    switch (f.kind) {
      case Family::minus_n:
        for (long n = 0; n <= index_bound; ++n) emit(tag, {n});
        break;
      case Family::residue_k1:
        for (auto& idx : lattice_indices(pair.k1(), f.x, index_bound)) emit(tag, idx);
        break;
      case Family::shifted_k2:
        for (const auto& idx : lattice_indices(pair.k2(), f.x, index_bound)) {
          for (long n = 0; n <= index_bound; ++n) {
            auto full = idx;
            full.push_back(n);
            emit(tag, full);
          }
        }
        break;
      case Family::shifted_k1:
        for (const auto& idx : lattice_indices(pair.k1(), f.x, index_bound)) {
          for (long n = 1; n < static_cast<long>(N); ++n) {
            auto full = idx;
            full.push_back(n);
            emit(tag, full);
          }
        }
        break;
      case Family::sum: {
        const auto second = lattice_indices(pair.k2(), f.y, index_bound);
        for (const auto& i1 : lattice_indices(pair.k1(), f.x, index_bound)) {
          for (const auto& i2 : second) {
            auto full = i1;
            full.insert(full.end(), i2.begin(), i2.end());
            emit(tag, full);
          }
        }
        break;
      }
    }
  }
  return out;
}

bool ProbeReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const ProbeVerdict& v) { return v.pass; });
}

const ProbeVerdict& ProbeReport::verdict(const std::string& criterion) const {
  for (const auto& v : verdicts) {
    if (v.criterion == criterion) return v;
  }
  throw Error(ErrorKind::InvalidArgument, "no verdict named '" + criterion + "'");
}

ProbeReport check_w_bound(const FunctionFieldSpec& spec) {
  ProbeReport report;
  report.probe = "w_bound";
  const double floor_q = 1.0 / static_cast<double>(spec.q() * spec.q());
  const auto roots = numerator_roots(spec);
  double min_abs = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const double m = std::abs(roots[k]);
    min_abs = std::min(min_abs, m);
    report.rows.push_back({"abs_w", static_cast<double>(k + 1), m, floor_q, 1e-9});
    if (std::abs(m - floor_q) <= 1e-9) {
      // rho(d) then lies on Re s = 2, periodically in Im s.
      report.rows.push_back({"boundary_rho_d_im", static_cast<double>(k + 1),
                             -std::arg(roots[k]) / spec.log_q(), kTwoPi / spec.log_q(), 0.0});
    }
  }
  report.rows.push_back({"min_abs_w", 0.0, min_abs, floor_q, 1e-9});
  report.verdicts.push_back({"min|w| >= q^-2", min_abs >= floor_q - 1e-9});
  return report;
}

ProbeReport density_gap(std::uint64_t q1, std::uint64_t q2, long B) {
  if (B < 10) throw Error(ErrorKind::InvalidArgument, "B must be at least 10");
  const Float50 theta = log_ratio(q1, q2);
  ProbeReport report;
  report.probe = "density_gap";
  double gaps[2];
  bool three_distance = true;
  for (int pass = 0; pass < 2; ++pass) {
    const long bound = pass == 0 ? B : 2 * B;
    std::vector<Float50> fracs;
    fracs.reserve(2 * bound + 1);
    for (long b = -bound; b <= bound; ++b) {
      const Float50 x = b * theta;
      fracs.push_back(x - floor(x));
    }
    std::size_t distinct = 0;
    gaps[pass] = circle_max_gap(fracs, distinct);
    three_distance = three_distance && distinct <= 3;
    report.rows.push_back({"max_gap", static_cast<double>(bound), gaps[pass], 1.0 / (2 * bound + 1), 0.0});
    report.rows.push_back({"distinct_gap_lengths", static_cast<double>(bound), static_cast<double>(distinct), 3.0, 3.0});
  }
  report.verdicts.push_back({"at most 3 distinct gap lengths", three_distance});
  report.verdicts.push_back({"gap(2B) <= gap(B)", gaps[1] <= gaps[0]});
  return report;
}

ProbeReport gelfond_probe(std::uint64_t q1, std::uint64_t q2, long B) {
  if (B < 1) throw Error(ErrorKind::InvalidArgument, "B must be positive");
  const Float50 theta = log_ratio(q1, q2);
  ProbeReport report;
  report.probe = "gelfond";
  Float50 best = 1;
  bool exact_zero = false;
  std::vector<double> fit_x, fit_y;
  long next_dyadic = 1;
  for (long b = 1; b <= B; ++b) {
    const Float50 x = b * theta;
    const Float50 dist = abs(x - round(x));
    if (dist == 0) exact_zero = true;
    if (dist < best) {
      best = dist;
      report.rows.push_back({"record_minimizer", static_cast<double>(b), static_cast<double>(dist), 0.0, 0.0});
    }
    if (b == next_dyadic) {
      report.rows.push_back({"min_abs_X", static_cast<double>(b), static_cast<double>(best), 1.0 / b, 0.0});
      fit_x.push_back(std::log(static_cast<double>(b)));
      fit_y.push_back(std::log(static_cast<double>(best)));
      next_dyadic *= 2;
    }
  }
  double c_hat = std::numeric_limits<double>::quiet_NaN();
  if (fit_x.size() >= 2) {
    const double mx = std::accumulate(fit_x.begin(), fit_x.end(), 0.0) / fit_x.size();
    const double my = std::accumulate(fit_y.begin(), fit_y.end(), 0.0) / fit_y.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < fit_x.size(); ++i) {
      sxy += (fit_x[i] - mx) * (fit_y[i] - my);
      sxx += (fit_x[i] - mx) * (fit_x[i] - mx);
    }
    c_hat = -sxy / sxx;
  }
  report.rows.push_back({"C_hat", static_cast<double>(B), c_hat, 1.0, 0.0});
  report.verdicts.push_back({"no exact zero", !exact_zero});
  report.verdicts.push_back({"C_hat finite", std::isfinite(c_hat)});
  return report;
}

ProbeReport boundary_probe(const FieldPair& pair, long b1_0, long b2_0, const std::vector<double>& eta_list,
                           const DecompositionConfig& config) {
  if (eta_list.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two eta values");
  for (std::size_t i = 0; i < eta_list.size(); ++i) {
    if (!(eta_list[i] > 0.0) || (i > 0 && !(eta_list[i] < eta_list[i - 1]))) {
      throw Error(ErrorKind::InvalidArgument, "eta values must be positive and decreasing");
    }
  }
  const double l1 = pair.k1().log_q(), l2 = pair.k2().log_q();
  const double q1 = static_cast<double>(pair.k1().q());
  const cplx rho2(1.0, kTwoPi * b2_0 / l2);
  const cplx rho1(1.0, kTwoPi * b1_0 / l1);
  const bool control = pair.same_characteristic();
  const cplx s0 = rho1 + rho2 + (control ? cplx(0.0, 1.0) : cplx(0.0, 0.0));

  ProbeReport report;
  report.probe = control ? "boundary_control" : "boundary";
  const cplx beta = std::exp(log_gamma(rho1) + log_gamma(rho2) - log_gamma(rho1 + rho2));
  std::vector<double> abs_sigma, eta_sigma, eta_dom_err, remainder;
  for (double eta : eta_list) {
    const cplx s = s0 + eta;
    const SeriesResult sigma = sigma_1(pair, s, config);
    const cplx w = s - rho2;
    const cplx u = std::exp(-w * l1);
    const cplx bracket = u / -expm1(-w * l1) + q1 * u / -expm1((1.0 - w) * l1);
    const cplx dominant = mb_kernel(s, rho2) * l1 * bracket;
    abs_sigma.push_back(std::abs(sigma.value));
    eta_sigma.push_back(eta * std::abs(sigma.value));
    eta_dom_err.push_back(std::abs(eta * dominant - beta) / std::abs(beta));
    remainder.push_back(std::abs(sigma.value - dominant));
    report.rows.push_back({"abs_sigma_1", eta, abs_sigma.back(), 0.0, sigma.tail_bound});
    report.rows.push_back({"eta_abs_sigma_1", eta, eta_sigma.back(), std::abs(beta), 0.0});
    report.rows.push_back({"eta_abs_dominant", eta, eta * std::abs(dominant), std::abs(beta), eta_dom_err.back()});
    report.rows.push_back({"abs_remainder", eta, remainder.back(), 0.0, 0.0});
  }
  const std::size_t last = eta_list.size() - 1;
  const double rem_max = *std::max_element(remainder.begin(), remainder.end());
  const double rem_min = *std::min_element(remainder.begin(), remainder.end());

  // The other components only need to be finite at the largest eta.
  bool regular = true;
  {
    const cplx s = s0 + eta_list.front();
    try {
      const cplx others = sigma_half(pair, s, config).value + sigma_0(pair, s, config).value +
                          sigma_N(pair, s, config.N) + r_0(pair, s) + i_N(pair, s, config).value;
      regular = std::isfinite(others.real()) && std::isfinite(others.imag());
      report.rows.push_back({"abs_other_components", eta_list.front(), std::abs(others), 0.0, 0.0});
    } catch (const Error&) {
      regular = false;
    }
  }

  if (control) {
    const double lo = *std::min_element(abs_sigma.begin(), abs_sigma.end());
    const double hi = *std::max_element(abs_sigma.begin(), abs_sigma.end());
    report.verdicts.push_back({"sigma_1 bounded", std::isfinite(hi) && hi <= 2.0 * lo});
  } else {
    const double a = eta_sigma[last - 1], b = eta_sigma[last];
    report.verdicts.push_back({"eta*dominant -> Beta(rho1, rho2)", eta_dom_err[last] < 1e-2});
    report.verdicts.push_back({"eta*|sigma_1| converges (10%)", std::abs(a - b) <= 0.1 * std::max(a, b)});
    report.verdicts.push_back({"blow-up factor >= 1e3", abs_sigma[last] >= 1e3 * abs_sigma[0]});
    report.verdicts.push_back({"remainder bounded", std::isfinite(rem_max) && rem_max <= 2.0 * rem_min});
    report.verdicts.push_back({"remainder varies < 5%", (rem_max - rem_min) < 0.05 * rem_max});
  }
  report.verdicts.push_back({"other components regular", regular});
  return report;
}

}  // namespace ffgold
