#include "ffgold/goldbach.hpp"

#include <cmath>
#include <map>
#include <string>

#include "ffgold/error.hpp"

namespace ffgold {

namespace {

using cplx = std::complex<double>;

// Neumaier summation on both components.
class CompensatedSum {
 public:
  void add(cplx x) {
    add_part(sum_re_, comp_re_, x.real());
    add_part(sum_im_, comp_im_, x.imag());
  }
  cplx value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double sum_re_ = 0, comp_re_ = 0, sum_im_ = 0, comp_im_ = 0;
};

double weil_constant(const FunctionFieldSpec& spec) {
  const double q = static_cast<double>(spec.q());
  return 1.0 + 1.0 / q + 2.0 * spec.genus() / std::sqrt(q);
}

struct Truncation {
  unsigned k1, k2;
  double bound;
};

Truncation choose_truncation(const FieldPair& pair, cplx s, double target_tail, double delta_min) {
  const double sigma = s.real();
  if (!(sigma >= 2.0 + delta_min)) {
    throw Error(ErrorKind::DomainError, "direct summation needs Re s >= 2 + " + std::to_string(delta_min));
  }
  if (!(target_tail > 0.0)) throw Error(ErrorKind::InvalidArgument, "target_tail must be positive");
  const double x1 = std::pow(static_cast<double>(pair.k1().q()), 1.0 - sigma / 2.0);
  const double x2 = std::pow(static_cast<double>(pair.k2().q()), 1.0 - sigma / 2.0);
  const double prefactor = pair.k1().log_q() * pair.k2().log_q() * std::pow(2.0, -sigma) *
                           weil_constant(pair.k1()) * weil_constant(pair.k2());
  const double s1 = x1 / (1.0 - x1), s2 = x2 / (1.0 - x2);
  // Each half of the bound gets target/2.
  auto smallest_k = [&](double x, double other_sum) -> unsigned {
    const double need = 0.5 * target_tail * (1.0 - x) / (prefactor * other_sum);
    if (need >= x) return 1;
    const double k = std::ceil(std::log(need) / std::log(x)) - 1.0;
    if (k > kDirectDepthBudget) {
      throw Error(ErrorKind::ToleranceUnreachable, "direct summation depth exceeds budget");
    }
    return std::max(1u, static_cast<unsigned>(k));
  };
  Truncation t;
  t.k1 = smallest_k(x1, s2);
  t.k2 = smallest_k(x2, s1);
  t.bound = direct_tail_bound(pair, sigma, t.k1, t.k2);
  return t;
}

std::vector<double> count_ratios(const FunctionFieldSpec& spec, const PointCounts& cached, unsigned k_max) {
  const PointCounts counts = cached.depth() >= k_max ? cached : point_counts(spec, k_max);
  std::vector<double> out(k_max + 1, 0.0);
  BigInt q_pow = 1;
  for (unsigned k = 1; k <= k_max; ++k) {
    q_pow *= spec.q();
    out[k] = big_ratio(counts.at(k), q_pow);
  }
  return out;
}

}  // namespace

FieldPair::FieldPair(FunctionFieldSpec k1, FunctionFieldSpec k2, unsigned depth)
    : k1_(std::move(k1)), k2_(std::move(k2)), depth_(depth) {
  if (depth_ == 0) throw Error(ErrorKind::InvalidArgument, "working depth must be positive");
  counts1_ = point_counts(k1_, depth_);
  counts2_ = point_counts(k2_, depth_);
}

double lambda_norm_sum(const FunctionFieldSpec& spec, unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  return point_counts(spec, k).at(k).convert_to<double>() * spec.log_q();
}

std::vector<std::pair<unsigned, unsigned>> representations(std::uint64_t n, std::uint64_t q1,
                                                           std::uint64_t q2) {
  std::vector<std::pair<unsigned, unsigned>> reps;
  if (n < 2 || q1 < 2 || q2 < 2) return reps;
  unsigned k1 = 1;
  for (std::uint64_t a = q1; a < n; ++k1) {
    std::uint64_t rest = n - a;
    unsigned k2 = 0;
    while (rest % q2 == 0) {
      rest /= q2;
      ++k2;
    }
    if (rest == 1 && k2 >= 1) reps.emplace_back(k1, k2);
    if (a > (n - 1) / q1) break;
    a *= q1;
  }
  return reps;
}

GoldbachValue goldbach_G(const FieldPair& pair, std::uint64_t n) {
  GoldbachValue out;
  out.n = n;
  out.reps = representations(n, pair.k1().q(), pair.k2().q());
  const double logs = pair.k1().log_q() * pair.k2().log_q();
  for (const auto& [k1, k2] : out.reps) {
    if (k1 > pair.depth() || k2 > pair.depth()) {
      throw Error(ErrorKind::DepthExceeded, "point counts not precomputed to degree " +
                                                std::to_string(std::max(k1, k2)));
    }
    out.value += logs * (pair.counts1().at(k1) * pair.counts2().at(k2)).convert_to<double>();
  }
  return out;
}

double direct_tail_bound(const FieldPair& pair, double sigma, unsigned k1_max, unsigned k2_max) {
  const double x1 = std::pow(static_cast<double>(pair.k1().q()), 1.0 - sigma / 2.0);
  const double x2 = std::pow(static_cast<double>(pair.k2().q()), 1.0 - sigma / 2.0);
  const double prefactor = pair.k1().log_q() * pair.k2().log_q() * std::pow(2.0, -sigma) *
                           weil_constant(pair.k1()) * weil_constant(pair.k2());
  const double s1 = x1 / (1.0 - x1), s2 = x2 / (1.0 - x2);
  const double t1 = std::pow(x1, k1_max + 1.0) / (1.0 - x1);
  const double t2 = std::pow(x2, k2_max + 1.0) / (1.0 - x2);
  return prefactor * (t1 * s2 + s1 * t2);
}

EvalResult phi_direct(const FieldPair& pair, cplx s, double target_tail, double delta_min) {
  const Truncation t = choose_truncation(pair, s, target_tail, delta_min);
  const auto w1 = count_ratios(pair.k1(), pair.counts1(), t.k1);
  const auto w2 = count_ratios(pair.k2(), pair.counts2(), t.k2);
  const double l1 = pair.k1().log_q(), l2 = pair.k2().log_q();
  CompensatedSum sum;
  for (unsigned k1 = t.k1; k1 >= 1; --k1) {
    const double a = k1 * l1;
    for (unsigned k2 = t.k2; k2 >= 1; --k2) {
      const double b = k2 * l2;
      // log(q1^k1 + q2^k2)
      const double log_norm = std::max(a, b) + std::log1p(std::exp(-std::abs(a - b)));
      sum.add(w1[k1] * w2[k2] * std::exp(cplx(a + b, 0.0) - s * log_norm));
    }
  }
  return {l1 * l2 * sum.value(), t.bound, static_cast<std::size_t>(t.k1) * t.k2};
}

EvalResult phi_by_norm(const FieldPair& pair, cplx s, double target_tail, double delta_min) {
  const Truncation t = choose_truncation(pair, s, target_tail, delta_min);
  const PointCounts c1 = pair.depth() >= t.k1 ? pair.counts1() : point_counts(pair.k1(), t.k1);
  const PointCounts c2 = pair.depth() >= t.k2 ? pair.counts2() : point_counts(pair.k2(), t.k2);
  // n -> sum of N1_{k1} N2_{k2} over representations of n
  std::map<BigInt, BigInt> weight_by_norm;
  BigInt a = 1;
  for (unsigned k1 = 1; k1 <= t.k1; ++k1) {
    a *= pair.k1().q();
    BigInt b = 1;
    for (unsigned k2 = 1; k2 <= t.k2; ++k2) {
      b *= pair.k2().q();
      weight_by_norm[a + b] += c1.at(k1) * c2.at(k2);
    }
  }
  CompensatedSum sum;
  for (auto it = weight_by_norm.rbegin(); it != weight_by_norm.rend(); ++it) {
    if (it->second == 0) continue;
    const double sign = it->second < 0 ? -1.0 : 1.0;
    const BigInt weight = it->second < 0 ? BigInt(-it->second) : it->second;
    sum.add(sign * std::exp(cplx(big_log(weight), 0.0) - s * big_log(it->first)));
  }
  return {pair.k1().log_q() * pair.k2().log_q() * sum.value(), t.bound, weight_by_norm.size()};
}

}  // namespace ffgold
