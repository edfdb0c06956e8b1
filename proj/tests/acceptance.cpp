// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

#include "ffgold/continuation.hpp"
#include "ffgold/error.hpp"
#include "ffgold/goldbach.hpp"
#include "ffgold/quadrature.hpp"
#include "ffgold/spectra.hpp"

using namespace ffgold;
using cplx = std::complex<double>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

FieldPair pair_of(std::uint64_t q1, unsigned g1, std::uint64_t q2, unsigned g2) {
  return FieldPair(support::model(q1, g1), support::model(q2, g2));
}

Outcome ac1() {
  const auto t0 = Clock::now();
  std::size_t curves = 0, mismatches = 0;
  for (std::uint64_t q : {2, 3, 4}) {
    const PrimePower pq = PrimePower::from_q(q);
    const auto counts = point_counts(make_rational_field(pq), 6);
    std::vector<std::uint64_t> a(6);
    for (unsigned d = 1; d <= 6; ++d) a[d - 1] = enumerate_irreducibles(pq, d) + (d == 1 ? 1 : 0);
    for (unsigned k = 1; k <= 6; ++k) {
      std::uint64_t n = 0;
      for (unsigned d = 1; d <= k; ++d) {
        if (k % d == 0) n += d * a[d - 1];
      }
      if (counts.at(k) != n) ++mismatches;
    }
    // every nonsingular Weierstrass model over F_q
    for (std::uint64_t code = 0; code < checked_pow(q, 5); ++code) {
      std::uint64_t c = code;
      WeierstrassCurve e;
      for (std::uint32_t* slot : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6}) {
        *slot = static_cast<std::uint32_t>(c % q);
        c /= q;
      }
      if (discriminant(e, pq) == 0) continue;
      ++curves;
      const auto n = point_counts(make_elliptic_field(pq, e), 6);
      for (unsigned k = 1; k <= 6; ++k) {
        if (n.at(k) != enumerate_points(e, pq, k)) ++mismatches;
      }
    }
  }
  const double t = seconds_since(t0);
  return {mismatches == 0 && t < 30.0,
          std::to_string(curves) + " curves + 3 rational fields, " + std::to_string(mismatches) + " mismatches, " +
              fmt(t) + " s"};
}

Outcome ac2() {
  std::size_t bad = 0;
  for (std::uint64_t q : {2, 3, 4}) {
    const PrimePower pq = PrimePower::from_q(q);
    const FunctionFieldSpec spec = make_rational_field(pq);
    std::vector<std::uint64_t> places(8);
    for (unsigned d = 1; d <= 8; ++d) places[d - 1] = enumerate_irreducibles(pq, d) + (d == 1 ? 1 : 0);
    for (unsigned n = 0; n <= 8; ++n) {
      const BigInt b = effective_divisor_count(spec, n);
      if (b != support::rational_divisors_by_enumeration(q, n)) ++bad;
      if (b != count_effective_divisors(places, n)) ++bad;
    }
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    for (unsigned g : {0u, 1u}) {
      const FunctionFieldSpec spec = support::model(q, g);
      for (unsigned n = 0; n <= 20; ++n) {
        const BigInt bound = BigInt(2 * (2 * g + 1)) * BigInt(checked_pow(q, n));
        if (effective_divisor_count(spec, n) > bound) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(bad) + " violations"};
}

Outcome ac3() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (std::uint64_t q1 : {2, 3, 4}) {
    for (std::uint64_t q2 : {2, 3, 4}) {
      for (unsigned g1 : {0u, 1u}) {
        for (unsigned g2 : {0u, 1u}) {
          const FieldPair pair(support::model(q1, g1), support::model(q2, g2), 8);
          const auto a1 = support::places_by_enumeration(q1, g1, 8);
          const auto a2 = support::places_by_enumeration(q2, g2, 8);
          for (std::uint64_t n = 2; n <= 200; ++n) {
            const double brute = support::goldbach_brute_force(n, q1, a1, q2, a2);
            const double got = goldbach_G(pair, n).value;
            worst = std::max(worst, std::abs(got - brute) / std::max(1.0, std::abs(brute)));
          }
        }
      }
    }
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-12 && t < 10.0, "max rel err " + fmt(worst) + ", " + fmt(t) + " s"};
}

Outcome ac4() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (double lambda : {0.1, 1.0, 3.0}) {
    for (cplx s : {cplx(1.0, 0.0), cplx(2.5, 0.0), cplx(1.0, 2.0)}) {
      const cplx got = mellin_barnes_check(lambda, s, s.real() / 2);
      worst = std::max(worst, std::abs(got - std::exp(-s * std::log1p(lambda))));
    }
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-10 && t < 5.0, "max abs err " + fmt(worst) + ", " + fmt(t) + " s"};
}

Outcome ac5() {
  const auto t0 = Clock::now();
  double worst_excess = -1e300, worst_diff = 0.0;
  std::size_t points = 0, violations = 0;
  for (auto [q1, q2] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    for (auto [g1, g2] : {std::pair{0u, 0u}, {0u, 1u}, {1u, 1u}}) {
      const FieldPair pair = pair_of(q1, g1, q2, g2);
      for (double re : {2.2, 2.4666666666666668, 2.7333333333333334, 3.0}) {
        for (double im : {-5.0, -2.5, 0.0, 2.5, 5.0}) {
          const cplx s(re, im);
          const EvalResult d = phi_direct(pair, s);
          const EvalResult c = phi_continued(pair, s);
          const double diff = std::abs(d.value - c.value);
          const double allowed = d.tail_bound + c.tail_bound + 1e-6;
          worst_diff = std::max(worst_diff, diff);
          worst_excess = std::max(worst_excess, diff - allowed);
          if (diff > allowed) ++violations;
          ++points;
        }
      }
    }
  }
  const double t = seconds_since(t0);
  return {violations == 0 && t < 300.0,
          std::to_string(points) + " points, max |direct - continued| " + fmt(worst_diff) + ", " + fmt(t) + " s"};
}

Outcome ac6() {
  std::size_t points = 0, bad = 0;
  double worst = 0.0;
  std::vector<std::string> families = pole_families();
  for (auto [q1, q2] : {std::pair{2, 2}, {2, 4}}) {
    for (auto [g1, g2] : {std::pair{0u, 0u}, {1u, 1u}}) {
      const FieldPair pair = pair_of(q1, g1, q2, g2);
      const DecompositionConfig base;
      const auto poles = enumerate_poles(pair, families, 24, Region{0.0, 2.0, -40.0, 40.0}, base.N);
      for (double re : {1.5, 0.5}) {
        int taken = 0;
        for (int k = 0; taken < 5 && k < 200; ++k) {
          const cplx s(re, 0.37 + 1.13 * k);
          double dist = 1e300;
          for (const auto& p : poles) dist = std::min(dist, std::abs(p.location - s));
          if (dist < 0.1) continue;
          ++taken;
          ++points;
          const ContinuedParts a = phi_continued_parts(pair, s, base);
          DecompositionConfig wide = base;
          wide.M_b = 2 * a.sigma_1.window;
          wide.M_c = 2 * std::max(a.sigma_half.window, a.sigma_1.window);
          wide.M_a = 2 * a.sigma_0.window;
          const EvalResult b = phi_continued(pair, s, wide);
          const double change = std::abs(a.total.value - b.value);
          worst = std::max(worst, change);
          const bool finite = std::isfinite(a.total.value.real()) && std::isfinite(a.total.value.imag());
          if (!finite || !(change < 1e-6)) ++bad;
        }
        if (taken < 5) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(points) + " points, max window-doubling change " + fmt(worst)};
}

Outcome ac7() {
  const FieldPair pair = pair_of(2, 0, 3, 0);
  const std::vector<double> etas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
  Outcome out;
  for (auto [b1, b2] : {std::pair{0L, 0L}, {1L, 0L}, {0L, 1L}}) {
    const ProbeReport r = boundary_probe(pair, b1, b2, etas);
    std::vector<std::string> failed;
    for (const auto& v : r.verdicts) {
      if (!v.pass) failed.push_back(v.criterion);
    }
    double rmin = 1e300, rmax = 0;
    for (const auto& row : r.rows) {
      if (row.label == "abs_remainder") {
        rmin = std::min(rmin, row.observed);
        rmax = std::max(rmax, row.observed);
      }
    }
    out.detail += "(" + std::to_string(b1) + "," + std::to_string(b2) + "): remainder spread " +
                  fmt(100 * (rmax - rmin) / rmax) + "%";
    if (!failed.empty()) {
      out.pass = false;
      out.detail += " [failed:";
      for (const auto& f : failed) out.detail += " '" + f + "'";
      out.detail += "]";
    }
    out.detail += "; ";
  }
  return out;
}

Outcome ac8() {
  bool ok = true;
  std::string detail;
  double gap100 = 0, gap10000 = 0;
  for (long B : {100L, 1000L, 10000L}) {
    const ProbeReport r = density_gap(2, 3, B);
    ok = ok && r.verdict("at most 3 distinct gap lengths").pass;
    if (B == 100) gap100 = r.rows[0].observed;
    if (B == 10000) gap10000 = r.rows[0].observed;
  }
  ok = ok && gap10000 < gap100;
  detail = "gap(1e2) " + fmt(gap100) + ", gap(1e4) " + fmt(gap10000);

  const long B = 10000;
  long double x = std::log(2.0L) / std::log(3.0L);
  long prev = 0, cur = 1;
  std::vector<long> denominators{1};
  x = 1.0L / (x - std::floor(x));
  while (true) {
    const long a = static_cast<long>(std::floor(x));
    const long next = a * cur + prev;
    if (next > B) break;
    if (next != cur) denominators.push_back(next);
    prev = cur;
    cur = next;
    x = 1.0L / (x - a);
  }
  std::vector<long> records;
  for (const auto& row : gelfond_probe(2, 3, B).rows) {
    if (row.label == "record_minimizer") records.push_back(static_cast<long>(row.parameter));
  }
  ok = ok && records == denominators;
  detail += ", " + std::to_string(records.size()) + " record minimizers vs " + std::to_string(denominators.size()) +
            " convergent denominators";
  return {ok, detail};
}

Outcome ac9() {
  const auto t0 = Clock::now();
  std::size_t specs = 0, bad = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    for (long a = -static_cast<long>(q); a <= static_cast<long>(q); ++a) {
      if (static_cast<double>(a * a) > 4.0 * static_cast<double>(q)) continue;
      ++specs;
      const auto spec = make_custom_field(PrimePower::from_q(q), {1, -a, static_cast<std::int64_t>(q)});
      if (!check_w_bound(spec).verdict("min|w| >= q^-2").pass) ++bad;
    }
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    ++specs;
    if (!check_w_bound(make_rational_field(PrimePower::from_q(q))).verdict("min|w| >= q^-2").pass) ++bad;
  }
  const double t = seconds_since(t0);
  return {bad == 0 && t < 10.0, std::to_string(specs) + " specs, " + std::to_string(bad) + " failures, " + fmt(t) + " s"};
}

std::string capture(const std::string& args, const std::string& env, int& code) {
  const std::string cmd = env + " '" FFGOLD_BIN "' " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    code = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome ac10() {
  const std::vector<std::string> commands{
      "spec --rational -q 9",
      "spec --elliptic -q 4 --curve y2+y=x3",
      "spec --custom -q 2 --L 1,-1,2,-2,4",
      "gold --q1 2 --q2 3 --L2 1,1,3 --n-max 300 --dense",
      "eval --q1 2 --q2 3 --grid 2.2,3,-2,2,0.4 --direct",
      "eval --q1 2 --q2 4 --L1 1,0,2 --grid 0.5,1.5,-3,3,1 --continued",
      "eval --q1 3 --q2 3 --s 2.5 --s 2.4-3i --check",
      "eval --q1 2 --q2 3 --s 1.2+0.5i --direct",
      "poles --q1 2 --q2 3 --families b+b,a-n,c-n --bound 6 --L2 1,1,3",
      "poles --q1 2 --q2 3 --families b+b --bound 4 --svg /dev/stdout",
      "density --q1 2 --q2 3 --B 1000",
      "density --q1 2 --q2 3 --B 10000 --gelfond",
      "density --q1 2 --q2 4 --B 100",
      "boundary --q1 2 --q2 3 --b1 1 --b2 0",
      "boundary --q1 2 --q2 4 --b1 0 --b2 0",
      "selftest",
  };
  std::size_t differing = 0;
  std::string which;
  for (const auto& c : commands) {
    int c1 = 0, c2 = 0, c3 = 0;
    const std::string a = capture(c, "FFGOLD_THREADS=1", c1);
    const std::string b = capture(c, "FFGOLD_THREADS=3", c2);
    const std::string d = capture(c, "FFGOLD_THREADS=3", c3);
    if (a != b || b != d || c1 != c2 || c2 != c3 || a.empty()) {
      ++differing;
      which += " '" + c + "'";
    }
  }
  return {differing == 0,
          std::to_string(commands.size()) + " commands x 3 runs, " + std::to_string(differing) + " differ" + which};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"counting oracle equivalence", ac1},
      {"divisor-count equivalence", ac2},
      {"Goldbach oracle", ac3},
      {"Mellin-Barnes kernel", ac4},
      {"continuation identity", ac5},
      {"continuation beyond Re s = 2 for p1 = p2", ac6},
      {"boundary approach for p1 != p2", ac7},
      {"three-distance gaps and record minima", ac8},
      {"zeros of zeta'/zeta inside |w| >= q^-2", ac9},
      {"CLI determinism", ac10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << "AC" << i + 1 << ' ' << (o.pass ? "PASS" : "FAIL") << ' ' << criteria[i].first << " | " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
