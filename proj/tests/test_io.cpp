#include <cmath>
#include <functional>
#include <limits>

#include "doctest.h"
#include "support.hpp"

#include "ffgold/error.hpp"
#include "ffgold/io.hpp"

using namespace ffgold;

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

}  // namespace

TEST_CASE("spec JSON round trip") {
  std::vector<FunctionFieldSpec> specs{support::rational(2), support::rational(9), support::elliptic(2),
                                       support::elliptic(3), support::elliptic(4), support::elliptic(5),
                                       make_custom_field(PrimePower::from_q(2), {1, 0, 2}),
                                       make_custom_field(PrimePower::from_q(2), {1, -1, 2, -2, 4})};
  for (const auto& spec : specs) {
    const Json j = spec_to_json(spec);
    const FunctionFieldSpec back = spec_from_json(Json::parse(j.dump()));
    CHECK(back.q() == spec.q());
    CHECK(back.genus() == spec.genus());
    CHECK(back.l_coeffs() == spec.l_coeffs());
    CHECK(back.source() == spec.source());
    CHECK(spec_to_json(back).dump() == j.dump());
  }
  CHECK(spec_to_json(support::rational(4)).dump() ==
        R"({"p":2,"r":2,"genus":0,"L_coeffs":[1],"source":"rational"})");
}

TEST_CASE("malformed spec JSON") {
  CHECK(kind_of([] { spec_from_json(Json::parse(R"({"p":2})")); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { spec_from_json(Json::parse(R"({"p":2,"r":1,"L_coeffs":[1,0],"source":"custom"})")); }) ==
        ErrorKind::InvalidSpec);
  CHECK(kind_of([] {
          spec_from_json(Json::parse(R"({"p":2,"r":1,"genus":1,"L_coeffs":[1],"source":"custom"})"));
        }) == ErrorKind::InvalidSpec);
  // Weil bound violated
  CHECK(kind_of([] { spec_from_json(Json::parse(R"({"p":2,"r":1,"L_coeffs":[1,5,2],"source":"custom"})")); }) ==
        ErrorKind::WeilViolation);
  // curve disagrees with the stated L
  CHECK(kind_of([] {
          spec_from_json(Json::parse(
              R"({"p":2,"r":1,"L_coeffs":[1,1,2],"source":"elliptic","curve":"y2+y=x3"})"));
        }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { spec_from_json(Json::parse(R"({"p":2,"r":1,"L_coeffs":[1],"source":"magic"})")); }) ==
        ErrorKind::InvalidSpec);
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-1.5e-300) == "-1.5000000000000001e-300");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-17}) CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("CSV tables") {
  CsvTable t({"a", "b"});
  t.add_row({"1", "x,y"});
  t.add_row({"say \"hi\"", ""});
  CHECK(t.str() == "a,b\n1,\"x,y\"\n\"say \"\"hi\"\"\",\n");
  CHECK(kind_of([&] { t.add_row({"only one"}); }) == ErrorKind::InvalidArgument);

  ProbeReport r;
  r.probe = "demo";
  r.rows.push_back({"gap", 10.0, 0.25, 0.5, 0.0});
  r.verdicts.push_back({"ok", true});
  r.verdicts.push_back({"not ok", false});
  CHECK(report_to_csv(r) ==
        "record,label,parameter,observed,predicted,bound\n"
        "row,gap,10,0.25,0.5,0\n"
        "verdict,ok,,1,,\n"
        "verdict,not ok,,0,,\n");
}

TEST_CASE("pole export") {
  std::vector<PoleRecord> poles{{"b+b", {1, -2}, {2.0, 3.5}, 1}, {"-n", {3}, {-3.0, 0.0}, 1}};
  const Json j = poles_to_json(poles);
  CHECK(j.dump() ==
        R"([{"family":"b+b","indices":[1,-2],"location":{"re":2.0,"im":3.5},"order":1},)"
        R"({"family":"-n","indices":[3],"location":{"re":-3.0,"im":0.0},"order":1}])");
  const std::string svg = poles_to_svg(poles, true);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(poles_to_svg({}, false).find("</svg>") != std::string::npos);
}
