#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "ffgold/continuation.hpp"
#include "ffgold/error.hpp"
#include "ffgold/goldbach.hpp"
#include "ffgold/io.hpp"
#include "ffgold/quadrature.hpp"
#include "ffgold/spectra.hpp"

using namespace ffgold;
using cplx = std::complex<double>;

namespace {

struct FieldArgs {
  std::string spec_path;
  std::uint64_t q = 0;
  std::string l_coeffs;
  std::string curve;
};

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw Error(ErrorKind::InvalidArgument, "bad integer '" + item + "' in list '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty integer list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0' || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidArgument, "bad number '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

// "2.5", "2.5+1i", "0.5-3.7i", "2i"
cplx parse_complex(const std::string& text) {
  const std::string t = text;
  if (t.empty()) throw Error(ErrorKind::InvalidArgument, "empty complex number");
  if (t.back() != 'i') {
    const auto v = parse_double_list(t);
    if (v.size() != 1) throw Error(ErrorKind::InvalidArgument, "bad complex number '" + text + "'");
    return {v[0], 0.0};
  }
  const std::string body = t.substr(0, t.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto number = [&](const std::string& s) {
    if (s == "+" || s.empty()) return 1.0;
    if (s == "-") return -1.0;
    const auto v = parse_double_list(s);
    if (v.size() != 1) throw Error(ErrorKind::InvalidArgument, "bad complex number '" + text + "'");
    return v[0];
  };
  if (split == std::string::npos) return {0.0, number(body)};
  return {number(body.substr(0, split)), number(body.substr(split))};
}

FunctionFieldSpec build_field(const FieldArgs& a, const std::string& which) {
  if (!a.spec_path.empty()) {
    std::ifstream in(a.spec_path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + a.spec_path);
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::InvalidSpec, a.spec_path + ": " + e.what());
    }
    return spec_from_json(j);
  }
  if (a.q == 0) throw Error(ErrorKind::InvalidArgument, "missing --" + which + " or --q" + which.substr(1));
  const PrimePower q = PrimePower::from_q(a.q);
  if (!a.curve.empty()) return make_elliptic_field(q, parse_curve(a.curve, q));
  if (!a.l_coeffs.empty()) return make_custom_field(q, parse_int_list(a.l_coeffs));
  return make_rational_field(q);
}

void add_field_options(CLI::App* app, FieldArgs& k1, FieldArgs& k2) {
  app->add_option("--k1", k1.spec_path, "Spec JSON file for K1");
  app->add_option("--k2", k2.spec_path, "Spec JSON file for K2");
  app->add_option("--q1", k1.q, "Field size of K1 (rational unless --L1/--curve1)")->check(CLI::PositiveNumber);
  app->add_option("--q2", k2.q, "Field size of K2")->check(CLI::PositiveNumber);
  app->add_option("--L1", k1.l_coeffs, "L-polynomial coefficients of K1, e.g. 1,0,2");
  app->add_option("--L2", k2.l_coeffs, "L-polynomial coefficients of K2");
  app->add_option("--curve1", k1.curve, "Weierstrass curve for K1, e.g. y2+y=x3");
  app->add_option("--curve2", k2.curve, "Weierstrass curve for K2");
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}
  void write(const std::string& text) const {
    if (path_.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path_);
    out << text;
  }

 private:
  std::string path_;
};

unsigned thread_count() {
  const char* env = std::getenv("FFGOLD_THREADS");
  if (env == nullptr || *env == '\0') return std::max(1u, std::thread::hardware_concurrency());
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) {
    throw Error(ErrorKind::InvalidArgument, std::string("FFGOLD_THREADS must be an integer in [1, 1024], got '") + env + "'");
  }
  return static_cast<unsigned>(v);
}

// Runs job(i) for i < n on a pool; each job fills its own slot.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& job) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) job(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::string na() { return "nan"; }

// ---- spec

struct SpecArgs {
  bool rational = false, elliptic = false, custom = false;
  std::uint64_t q = 0;
  std::string curve, l_coeffs, out;
};

int cmd_spec(const SpecArgs& a) {
  if (static_cast<int>(a.rational) + a.elliptic + a.custom != 1) {
    throw Error(ErrorKind::InvalidArgument, "choose exactly one of --rational, --elliptic, --custom");
  }
  const PrimePower q = PrimePower::from_q(a.q);
  std::optional<FunctionFieldSpec> spec;
  if (a.rational) spec.emplace(make_rational_field(q));
  if (a.elliptic) {
    if (a.curve.empty()) throw Error(ErrorKind::InvalidArgument, "--elliptic needs --curve");
    spec.emplace(make_elliptic_field(q, parse_curve(a.curve, q)));
  }
  if (a.custom) {
    if (a.l_coeffs.empty()) throw Error(ErrorKind::InvalidArgument, "--custom needs --L");
    spec.emplace(make_custom_field(q, parse_int_list(a.l_coeffs)));
  }
  const Json j = spec_to_json(*spec);
  if (!a.out.empty()) Output(a.out).write(j.dump(2) + "\n");
  std::string text = "L_coeffs";
  for (std::size_t i = 0; i < spec->l_coeffs().size(); ++i) {
    text += (i ? "," : " ") + std::to_string(spec->l_coeffs()[i]);
  }
  text += "\ngenus " + std::to_string(spec->genus()) + "\n";
  const PointCounts n = point_counts(*spec, 8);
  text += "k,N_k\n";
  for (unsigned k = 1; k <= 8; ++k) text += std::to_string(k) + "," + n.at(k).str() + "\n";
  if (a.out.empty()) text += j.dump() + "\n";
  std::cout << text;
  return 0;
}

// ---- gold

int cmd_gold(const FieldArgs& f1, const FieldArgs& f2, std::uint64_t n_max, bool dense, const std::string& out) {
  if (n_max < 2) throw Error(ErrorKind::InvalidArgument, "--n-max must be at least 2");
  if (n_max > 100'000'000) throw Error(ErrorKind::InvalidArgument, "--n-max must be at most 1e8");
  const unsigned depth = static_cast<unsigned>(std::floor(std::log2(static_cast<double>(n_max)))) + 1;
  const FieldPair pair(build_field(f1, "k1"), build_field(f2, "k2"), depth);
  CsvTable t({"n", "reps_count", "value"});
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const GoldbachValue g = goldbach_G(pair, n);
    if (g.reps.empty() && !dense) continue;
    t.add_row({std::to_string(n), std::to_string(g.reps.size()), format_double(g.value)});
  }
  Output(out).write(t.str());
  return 0;
}

// ---- eval

struct EvalArgs {
  bool direct = false, continued = false, check = false;
  std::vector<std::string> points;
  std::string grid;
  double target_tail = 1e-10;
  DecompositionConfig config;
  std::string out;
};

std::vector<cplx> eval_points(const EvalArgs& a) {
  std::vector<cplx> pts;
  for (const auto& p : a.points) pts.push_back(parse_complex(p));
  if (!a.grid.empty()) {
    const auto g = parse_double_list(a.grid);
    if (g.size() != 5 || !(g[4] > 0.0) || g[1] < g[0] || g[3] < g[2]) {
      throw Error(ErrorKind::InvalidArgument, "--grid is re_min,re_max,im_min,im_max,step with step > 0");
    }
    const long nr = std::lround(std::floor((g[1] - g[0]) / g[4] + 1e-9)) + 1;
    const long ni = std::lround(std::floor((g[3] - g[2]) / g[4] + 1e-9)) + 1;
    if (nr * ni > 100'000) throw Error(ErrorKind::InvalidArgument, "--grid has more than 1e5 points");
    for (long i = 0; i < ni; ++i) {
      for (long r = 0; r < nr; ++r) pts.emplace_back(g[0] + r * g[4], g[2] + i * g[4]);
    }
  }
  if (pts.empty()) throw Error(ErrorKind::InvalidArgument, "give at least one --s or a --grid");
  return pts;
}

int cmd_eval(const FieldArgs& f1, const FieldArgs& f2, const EvalArgs& a) {
  if (static_cast<int>(a.direct) + a.continued + a.check != 1) {
    throw Error(ErrorKind::InvalidArgument, "choose exactly one of --direct, --continued, --check");
  }
  if (!(a.target_tail > 0.0)) throw Error(ErrorKind::InvalidArgument, "--tail must be positive");
  a.config.validate();
  const std::vector<cplx> pts = eval_points(a);
  const FieldPair pair(build_field(f1, "k1"), build_field(f2, "k2"));

  std::vector<std::string> header;
  if (a.direct) header = {"re_s", "im_s", "re_value", "im_value", "tail_bound", "status"};
  if (a.continued) {
    header = {"re_s", "im_s", "re_value", "im_value", "tail_bound", "N", "M_b", "M_c", "M_a", "T", "status"};
  }
  if (a.check) {
    header = {"re_s",     "im_s",        "re_direct",      "im_direct", "re_continued",
              "im_continued", "abs_diff", "tail_direct", "tail_continued", "status"};
  }
  std::vector<std::vector<std::string>> rows(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const cplx s = pts[i];
    std::vector<std::string> row{format_double(s.real()), format_double(s.imag())};
    try {
      if (a.direct) {
        const EvalResult r = phi_direct(pair, s, a.target_tail);
        row.insert(row.end(), {format_double(r.value.real()), format_double(r.value.imag()),
                               format_double(r.tail_bound), "ok"});
      } else if (a.continued) {
        const ContinuedParts c = phi_continued_parts(pair, s, a.config);
        row.insert(row.end(), {format_double(c.total.value.real()), format_double(c.total.value.imag()),
                               format_double(c.total.tail_bound), std::to_string(a.config.N),
                               std::to_string(c.sigma_1.window), std::to_string(c.sigma_half.window),
                               std::to_string(c.sigma_0.window), format_double(c.T), "ok"});
      } else {
        const EvalResult d = phi_direct(pair, s, a.target_tail);
        const EvalResult c = phi_continued(pair, s, a.config);
        row.insert(row.end(), {format_double(d.value.real()), format_double(d.value.imag()),
                               format_double(c.value.real()), format_double(c.value.imag()),
                               format_double(std::abs(d.value - c.value)), format_double(d.tail_bound),
                               format_double(c.tail_bound), "ok"});
      }
    } catch (const Error& e) {
      row.resize(2);
      while (row.size() + 1 < header.size()) row.push_back(na());
      row.push_back(to_string(e.kind()));
    }
    rows[i] = std::move(row);
  });
  CsvTable t(header);
  for (auto& r : rows) t.add_row(std::move(r));
  Output(a.out).write(t.str());
  return 0;
}

// ---- poles

struct PolesArgs {
  std::string families;
  int bound = 10;
  std::string region;
  unsigned N = 2;
  std::string json_out, svg_out;
};

int cmd_poles(const FieldArgs& f1, const FieldArgs& f2, const PolesArgs& a) {
  std::vector<std::string> families = pole_families();
  if (!a.families.empty()) {
    families.clear();
    std::stringstream in(a.families);
    std::string item;
    while (std::getline(in, item, ',')) families.push_back(item);
  }
  Region region;
  if (!a.region.empty()) {
    const auto r = parse_double_list(a.region);
    if (r.size() != 4 || r[1] < r[0] || r[3] < r[2]) {
      throw Error(ErrorKind::InvalidArgument, "--region is re_min,re_max,im_min,im_max");
    }
    region = {r[0], r[1], r[2], r[3]};
  }
  const FieldPair pair(build_field(f1, "k1"), build_field(f2, "k2"));
  const auto poles = enumerate_poles(pair, families, a.bound, region, a.N);
  const std::string json = poles_to_json(poles).dump(2) + "\n";
  if (!a.json_out.empty() || a.svg_out.empty()) Output(a.json_out).write(json);
  if (!a.svg_out.empty()) Output(a.svg_out).write(poles_to_svg(poles, !pair.same_characteristic()));
  return 0;
}

// ---- selftest

int cmd_selftest() {
  int failures = 0;
  auto line = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };
  for (double lambda : {0.1, 1.0, 3.0}) {
    for (cplx s : {cplx(1.0, 0.0), cplx(2.5, 0.0), cplx(1.0, 2.0)}) {
      bool ok = false;
      try {
        ok = std::abs(mellin_barnes_check(lambda, s, 0.5 * s.real()) - std::pow(1.0 + lambda, -s)) <= 1e-10;
      } catch (const Error&) {
      }
      char buf[96];
      std::snprintf(buf, sizeof buf, "mellin_barnes lambda=%g s=%g%+gi", lambda, s.real(), s.imag());
      line(ok, buf);
    }
  }
  for (std::uint64_t qv : {2, 3, 4}) {
    const PrimePower q = PrimePower::from_q(qv);
    const PointCounts n = point_counts(make_rational_field(q), 5);
    bool ok = true;
    for (unsigned k = 1; k <= 5; ++k) {
      std::uint64_t expect = 0;
      for (unsigned d : {1u, 2u, 3u, 4u, 5u}) {
        if (k % d == 0) expect += d * enumerate_irreducibles(q, d);
      }
      ok = ok && n.at(k) == expect + 1;
    }
    line(ok, "rational point counts vs irreducible sieve, q=" + std::to_string(qv));
  }
  {
    const PrimePower q = PrimePower::from_q(2);
    const WeierstrassCurve c = parse_curve("y2+y=x3", q);
    const PointCounts n = point_counts(make_elliptic_field(q, c), 4);
    bool ok = true;
    for (unsigned k = 1; k <= 4; ++k) ok = ok && n.at(k) == enumerate_points(c, q, k);
    line(ok, "elliptic point counts vs exhaustion, y2+y=x3 over F_2");
  }
  {
    const FieldPair pair(make_rational_field(PrimePower::from_q(2)), make_rational_field(PrimePower::from_q(3)));
    const EvalResult d = phi_direct(pair, 2.5);
    const EvalResult c = phi_continued(pair, 2.5);
    line(std::abs(d.value - c.value) <= d.tail_bound + c.tail_bound + 1e-8, "continuation identity at s=2.5, q=(2,3)");
  }
  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Function-field Goldbach series: counts, direct and continued evaluation, pole atlas, probes"};
  app.require_subcommand(1);

  SpecArgs spec_args;
  auto* spec = app.add_subcommand("spec", "Build and validate a function field");
  spec->add_flag("--rational", spec_args.rational, "Genus 0");
  spec->add_flag("--elliptic", spec_args.elliptic, "Genus 1 from a Weierstrass curve");
  spec->add_flag("--custom", spec_args.custom, "User-supplied L-polynomial");
  spec->add_option("-q", spec_args.q, "Field size")->required()->check(CLI::PositiveNumber);
  spec->add_option("--curve", spec_args.curve, "Curve, e.g. y2+y=x3 or a1,a2,a3,a4,a6");
  spec->add_option("--L", spec_args.l_coeffs, "Coefficients c_0,...,c_2g");
  spec->add_option("-o,--out", spec_args.out, "Write the spec JSON here");

  FieldArgs k1, k2;
  std::uint64_t n_max = 0;
  bool dense = false;
  std::string gold_out;
  auto* gold = app.add_subcommand("gold", "Tabulate G_2(n)");
  add_field_options(gold, k1, k2);
  gold->add_option("--n-max", n_max, "Largest n")->required();
  gold->add_flag("--dense", dense, "Also emit rows with no representation");
  gold->add_option("-o,--out", gold_out, "CSV output file");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate Phi_2(s) on points or a grid");
  add_field_options(eval, k1, k2);
  eval->add_flag("--direct", eval_args.direct, "Direct summation (Re s > 2.1)");
  eval->add_flag("--continued", eval_args.continued, "Residue decomposition");
  eval->add_flag("--check", eval_args.check, "Both, with their difference");
  eval->add_option("--s", eval_args.points, "Point such as 2.5+1i (repeatable)");
  eval->add_option("--grid", eval_args.grid, "re_min,re_max,im_min,im_max,step");
  eval->add_option("--tail", eval_args.target_tail, "Target tail for direct summation");
  eval->add_option("--N", eval_args.config.N, "Contour shift depth");
  eval->add_option("--eps", eval_args.config.eps, "Contour offset");
  eval->add_option("--M-b", eval_args.config.M_b, "Sigma_1 window (0 = auto)");
  eval->add_option("--M-c", eval_args.config.M_c, "Sigma_half window (0 = auto)");
  eval->add_option("--M-a", eval_args.config.M_a, "Sigma_0 window (0 = auto)");
  eval->add_option("--T", eval_args.config.T, "Quadrature height (0 = auto)");
  eval->add_option("--quad-points", eval_args.config.quad_points, "Gauss-Legendre points per panel");
  eval->add_option("-o,--out", eval_args.out, "CSV output file");

  PolesArgs poles_args;
  auto* poles = app.add_subcommand("poles", "List possible poles of the continuation");
  add_field_options(poles, k1, k2);
  poles->add_option("--families", poles_args.families, "Comma-separated family tags (default all)");
  poles->add_option("--bound", poles_args.bound, "Index bound")->check(CLI::Range(1, 10000));
  poles->add_option("--region", poles_args.region, "re_min,re_max,im_min,im_max");
  poles->add_option("--N", poles_args.N, "Shift depth for the a1-n, b1-n, c1-n families")->check(CLI::Range(1, 50));
  poles->add_option("--json", poles_args.json_out, "JSON output file");
  poles->add_option("--svg", poles_args.svg_out, "SVG output file");

  std::uint64_t dq1 = 0, dq2 = 0;
  long B = 100;
  bool gelfond = false;
  std::string density_out;
  auto* density = app.add_subcommand("density", "Gap statistics of b log q1 / log q2 mod 1");
  density->add_option("--q1", dq1, "First field size")->required();
  density->add_option("--q2", dq2, "Second field size")->required();
  density->add_option("--B", B, "Index bound")->check(CLI::Range(1L, 10'000'000L));
  density->add_flag("--gelfond", gelfond, "Record minima and fitted exponent instead of gaps");
  density->add_option("-o,--out", density_out, "CSV output file");

  long b1 = 0, b2 = 0;
  std::string etas = "1e-1,1e-2,1e-3,1e-4,1e-5";
  std::string boundary_out;
  auto* boundary = app.add_subcommand("boundary", "Sigma_1 approaching rho(b1) + rho(b2) from the right");
  add_field_options(boundary, k1, k2);
  boundary->add_option("--b1", b1, "Index b1");
  boundary->add_option("--b2", b2, "Index b2");
  boundary->add_option("--eta", etas, "Decreasing offsets");
  boundary->add_option("-o,--out", boundary_out, "CSV output file");

  auto* selftest = app.add_subcommand("selftest", "Quadrature and oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (spec->parsed()) return cmd_spec(spec_args);
    if (gold->parsed()) return cmd_gold(k1, k2, n_max, dense, gold_out);
    if (eval->parsed()) return cmd_eval(k1, k2, eval_args);
    if (poles->parsed()) return cmd_poles(k1, k2, poles_args);
    if (density->parsed()) {
      if (B < 10 && !gelfond) throw Error(ErrorKind::InvalidArgument, "--B must be at least 10");
      const ProbeReport r = gelfond ? gelfond_probe(dq1, dq2, B) : density_gap(dq1, dq2, B);
      Output(density_out).write(report_to_csv(r));
      return 0;
    }
    if (boundary->parsed()) {
      const FieldPair pair(build_field(k1, "k1"), build_field(k2, "k2"));
      const ProbeReport r = boundary_probe(pair, b1, b2, parse_double_list(etas));
      Output(boundary_out).write(report_to_csv(r));
      return 0;
    }
    if (selftest->parsed()) return cmd_selftest();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_numerical_failure(e.kind()) ? 3 : 2;
  }
  return 2;
}
