#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <tuple>

#include "doctest.h"
#include "support.hpp"

#include "ffgold/error.hpp"
#include "ffgold/spectra.hpp"

using namespace ffgold;
using cplx = std::complex<double>;
using std::numbers::pi;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an ffgold::Error");
  return ErrorKind::InvalidArgument;
}

FieldPair pair_of(std::uint64_t q1, unsigned g1, std::uint64_t q2, unsigned g2) {
  return FieldPair(support::model(q1, g1), support::model(q2, g2));
}

// Lattice points written out from scratch; c uses the inverse roots of L.
cplx lattice(const FunctionFieldSpec& k, char letter, const std::vector<long>& idx, std::size_t& at) {
  const double l = std::log(static_cast<double>(k.q()));
  switch (letter) {
    case 'a':
      return cplx(0.0, 2 * pi * idx[at++] / l);
    case 'b':
      return cplx(1.0, 2 * pi * idx[at++] / l);
    default: {
      const cplx root = k.inverse_roots()[idx[at] - 1];
      const long c = idx[at + 1];
      at += 2;
      return cplx(0.5, (std::arg(root) + 2 * pi * c) / l);
    }
  }
}

cplx expected_location(const FieldPair& pair, const PoleRecord& p) {
  const std::string& f = p.family;
  std::size_t at = 0;
  if (f == "-n") return -static_cast<double>(p.indices[0]);
  if (f.size() == 1) return lattice(pair.k1(), f[0], p.indices, at);
  if (f.size() == 3 && f[1] == '-') {
    const cplx r = lattice(pair.k2(), f[0], p.indices, at);
    return r - static_cast<double>(p.indices[at]);
  }
  if (f.size() == 4) {
    const cplx r = lattice(pair.k1(), f[0], p.indices, at);
    return r - static_cast<double>(p.indices[at]);
  }
  const cplx x = lattice(pair.k1(), f[0], p.indices, at);
  return x + lattice(pair.k2(), f[2], p.indices, at);
}

// Q(u) = L'(u)(1-u)(1-qu) + L(u)(1+q-2qu), integer arithmetic
std::vector<long long> numerator_by_hand(const std::vector<std::int64_t>& L, long long q) {
  std::vector<long long> out(L.size() + 2, 0);
  for (std::size_t j = 1; j < L.size(); ++j) {
    const long long d = static_cast<long long>(j) * L[j];  // coefficient of u^{j-1} in L'
    out[j - 1] += d;
    out[j] -= d * (1 + q);
    out[j + 1] += d * q;
  }
  for (std::size_t j = 0; j < L.size(); ++j) {
    out[j] += L[j] * (1 + q);
    out[j + 1] -= 2 * q * L[j];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

TEST_CASE("pole locations match their defining formulas") {
  for (auto [q1, g1, q2, g2] : {std::tuple{2, 1, 3, 1}, {4, 0, 2, 1}, {3, 1, 3, 0}}) {
    const FieldPair pair = pair_of(q1, g1, q2, g2);
    std::vector<std::string> fams;
    for (const auto& f : pole_families()) {
      if (f != "d") fams.push_back(f);
    }
    const auto poles = enumerate_poles(pair, fams, 3, {}, 3);
    CHECK(!poles.empty());
    for (const PoleRecord& p : poles) {
      CHECK(std::abs(p.location - expected_location(pair, p)) < 1e-12);
      CHECK(std::abs(pole_location(pair, p.family, p.indices) - p.location) < 1e-12);
    }
  }
  CHECK(kind_of([] { enumerate_poles(pair_of(2, 0, 3, 0), {"z+q"}, 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("the b+b lattice") {
  CHECK(enumerate_poles(pair_of(2, 0, 2, 0), {"b+b"}, 2).size() == 9);
  CHECK(enumerate_poles(pair_of(2, 0, 3, 0), {"b+b"}, 10).size() == 441);
  const auto big = enumerate_poles(pair_of(2, 0, 3, 0), {"b+b"}, 50);
  CHECK(big.size() == 101 * 101);
  std::vector<double> im;
  for (const auto& p : big) {
    CHECK(p.location.real() == doctest::Approx(2.0));
    im.push_back(p.location.imag());
  }
  std::sort(im.begin(), im.end());
  double min_step = 1e300;
  for (std::size_t i = 1; i < im.size(); ++i) min_step = std::min(min_step, im[i] - im[i - 1]);
  CHECK(min_step > 1e-9);
  Region window{1.9, 2.1, 0.0, 20.0};
  for (const auto& p : enumerate_poles(pair_of(2, 0, 3, 0), {"b+b"}, 10, window)) CHECK(window.contains(p.location));
}

TEST_CASE("zeros of the logarithmic derivative") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto roots = numerator_roots(support::rational(q));
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] - (1.0 + q) / (2.0 * q)) < 1e-14);
  }
  CHECK(std::abs(numerator_roots(support::rational(2))[0] - 0.75) < 1e-15);
  CHECK(std::abs(numerator_roots(support::rational(3))[0] - 2.0 / 3.0) < 1e-15);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const FunctionFieldSpec spec = support::elliptic(q);
    const auto coeffs = numerator_by_hand(spec.l_coeffs(), static_cast<long long>(q));
    CHECK(std::vector<std::int64_t>(coeffs.begin(), coeffs.end()) == ZetaLogDeriv(spec).numerator_coeffs());
    for (cplx w : numerator_roots(spec)) {
      cplx value = 0;
      for (std::size_t j = coeffs.size(); j-- > 0;) value = value * w + static_cast<double>(coeffs[j]);
      CHECK(std::abs(value) < 1e-9);
    }
  }
}

TEST_CASE("zeros of the logarithmic derivative stay inside |w| >= q^-2") {
  for (std::uint64_t q : {2, 3, 5, 7}) {
    const long bound = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(q))));
    for (long a = -bound; a <= bound; ++a) {
      const FunctionFieldSpec spec = make_custom_field(PrimePower::from_q(q), {1, -a, static_cast<std::int64_t>(q)});
      const ProbeReport r = check_w_bound(spec);
      CHECK(r.verdict("min|w| >= q^-2").pass);
      // quadratic formula on the hand-built numerator
      const auto c = numerator_by_hand(spec.l_coeffs(), static_cast<long long>(q));
      double oracle = 1e300;
      if (c.size() == 3) {
        const cplx disc = std::sqrt(cplx(static_cast<double>(c[1] * c[1] - 4 * c[2] * c[0])));
        oracle = std::min(std::abs((-static_cast<double>(c[1]) + disc) / (2.0 * c[2])),
                          std::abs((-static_cast<double>(c[1]) - disc) / (2.0 * c[2])));
      } else if (c.size() == 2) {
        oracle = std::abs(static_cast<double>(c[0]) / static_cast<double>(c[1]));
      }
      const auto row = std::find_if(r.rows.begin(), r.rows.end(), [](const ProbeRow& x) { return x.label == "min_abs_w"; });
      REQUIRE(row != r.rows.end());
      CHECK(row->observed == doctest::Approx(oracle).epsilon(1e-12));
    }
  }
}

TEST_CASE("three-distance gaps of b log q1 / log q2") {
  for (auto [q1, q2] : {std::pair{2, 3}, {3, 2}, {2, 5}, {4, 27}}) {
    const ProbeReport r = density_gap(q1, q2, 100);
    CHECK(r.all_pass());
    // double-precision oracle for the largest circle gap at B = 100
    const double theta = std::log(static_cast<double>(q1)) / std::log(static_cast<double>(q2));
    std::vector<double> x;
    for (long b = -100; b <= 100; ++b) x.push_back(b * theta - std::floor(b * theta));
    std::sort(x.begin(), x.end());
    double gap = 1.0 - x.back() + x.front();
    for (std::size_t i = 1; i < x.size(); ++i) gap = std::max(gap, x[i] - x[i - 1]);
    CHECK(r.rows[0].label == "max_gap");
    CHECK(r.rows[0].observed == doctest::Approx(gap).epsilon(1e-9));
  }
  CHECK(kind_of([] { density_gap(2, 4, 100); }) == ErrorKind::DegenerateRatio);
  CHECK(kind_of([] { density_gap(9, 3, 100); }) == ErrorKind::DegenerateRatio);
  CHECK(kind_of([] { density_gap(2, 3, 5); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("record minima are continued-fraction denominators") {
  const long B = 10000;
  const ProbeReport r = gelfond_probe(2, 3, B);
  CHECK(r.all_pass());
  std::vector<long> records;
  for (const auto& row : r.rows) {
    if (row.label == "record_minimizer") records.push_back(static_cast<long>(row.parameter));
  }
  CHECK(records == std::vector<long>{1, 2, 3, 8, 19, 65, 84, 485, 1054});

  // independent expansion of log 2 / log 3 in long double
  long double x = std::log(2.0L) / std::log(3.0L);
  long prev = 0, cur = 1;  // q_{-1}, q_0
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
  CHECK(records == denominators);
  CHECK(kind_of([] { gelfond_probe(4, 8, 100); }) == ErrorKind::DegenerateRatio);
}

TEST_CASE("boundary probe near rho(b1) + rho(b2)") {
  const std::vector<double> etas{1e-2, 1e-3, 1e-4, 1e-5};
  const ProbeReport r = boundary_probe(pair_of(2, 0, 3, 0), 0, 1, etas);
  CHECK(r.probe == "boundary");
  CHECK(r.verdict("eta*dominant -> Beta(rho1, rho2)").pass);
  CHECK(r.verdict("eta*|sigma_1| converges (10%)").pass);
  CHECK(r.verdict("blow-up factor >= 1e3").pass);
  CHECK(r.verdict("other components regular").pass);

  const ProbeReport c = boundary_probe(pair_of(2, 0, 4, 0), 0, 0, etas);
  CHECK(c.probe == "boundary_control");
  CHECK(c.all_pass());
  CHECK(kind_of([&] { boundary_probe(pair_of(2, 0, 3, 0), 0, 0, {1e-3, 1e-2}); }) == ErrorKind::InvalidArgument);
}
