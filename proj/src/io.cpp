#include "ffgold/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "ffgold/error.hpp"

namespace ffgold {

Json spec_to_json(const FunctionFieldSpec& spec) {
  Json j;
  j["p"] = spec.p();
  j["r"] = spec.prime_power().r();
  j["genus"] = spec.genus();
  j["L_coeffs"] = spec.l_coeffs();
  j["source"] = to_string(spec.source());
  if (spec.curve()) j["curve"] = to_string(*spec.curve());
  return j;
}

FunctionFieldSpec spec_from_json(const Json& j) {
  try {
    const PrimePower q(j.at("p").get<std::uint64_t>(), j.at("r").get<unsigned>());
    const auto coeffs = j.at("L_coeffs").get<std::vector<std::int64_t>>();
    const std::string source = j.at("source").get<std::string>();
    if (j.contains("genus") && 2 * j.at("genus").get<std::size_t>() + 1 != coeffs.size()) {
      throw Error(ErrorKind::InvalidSpec, "genus does not match the number of L coefficients");
    }
    if (source == "rational") {
      if (coeffs != std::vector<std::int64_t>{1}) throw Error(ErrorKind::InvalidSpec, "rational field needs L = (1)");
      return make_rational_field(q);
    }
    if (source == "elliptic" && j.contains("curve")) {
      FunctionFieldSpec spec = make_elliptic_field(q, parse_curve(j.at("curve").get<std::string>(), q));
      if (spec.l_coeffs() != coeffs) throw Error(ErrorKind::InvalidSpec, "L_coeffs disagree with the curve");
      return spec;
    }
    if (source == "elliptic" || source == "custom") {
      return FunctionFieldSpec(q, coeffs, source == "elliptic" ? FieldSource::elliptic : FieldSource::custom);
    }
    throw Error(ErrorKind::InvalidSpec, "unknown source '" + source + "'");
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, std::string("malformed spec JSON: ") + e.what());
  }
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw Error(ErrorKind::InvalidArgument, "CSV row width mismatch");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      const bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
      if (!quote) {
        out += cells[i];
        continue;
      }
      out += '"';
      for (char c : cells[i]) {
        if (c == '"') out += '"';
        out += c;
      }
      out += '"';
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

std::string report_to_csv(const ProbeReport& report) {
  CsvTable t({"record", "label", "parameter", "observed", "predicted", "bound"});
  for (const auto& r : report.rows) {
    t.add_row({"row", r.label, format_double(r.parameter), format_double(r.observed), format_double(r.predicted),
               format_double(r.bound)});
  }
  for (const auto& v : report.verdicts) t.add_row({"verdict", v.criterion, "", v.pass ? "1" : "0", "", ""});
  return t.str();
}

Json poles_to_json(const std::vector<PoleRecord>& poles) {
  Json arr = Json::array();
  for (const auto& p : poles) {
    Json j;
    j["family"] = p.family;
    j["indices"] = p.indices;
    j["location"] = Json{{"re", p.location.real()}, {"im", p.location.imag()}};
    j["order"] = p.order;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string poles_to_svg(const std::vector<PoleRecord>& poles, bool boundary_line) {
  constexpr double kWidth = 640, kHeight = 640, kMargin = 60;
  double re_lo = boundary_line ? 2.0 : 0.0, re_hi = re_lo, im_lo = 0.0, im_hi = 0.0;
  for (const auto& p : poles) {
    re_lo = std::min(re_lo, p.location.real());
    re_hi = std::max(re_hi, p.location.real());
    im_lo = std::min(im_lo, p.location.imag());
    im_hi = std::max(im_hi, p.location.imag());
  }
  re_lo -= 0.5, re_hi += 0.5, im_lo -= 0.5, im_hi += 0.5;
  auto sx = [&](double re) { return kMargin + (re - re_lo) / (re_hi - re_lo) * (kWidth - 2 * kMargin); };
  auto sy = [&](double im) { return kHeight - kMargin - (im - im_lo) / (im_hi - im_lo) * (kHeight - 2 * kMargin); };
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return std::string(buf);
  };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::map<std::string, std::size_t> color_of;
  for (const auto& p : poles) color_of.emplace(p.family, 0);
  std::size_t k = 0;
  for (auto& [family, c] : color_of) c = k++;

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
                    num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double x0 = kMargin, x1 = kWidth - kMargin, y0 = kHeight - kMargin, y1 = kMargin;
  svg += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y0) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(y1) +
         "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double re = re_lo + (re_hi - re_lo) * i / 5.0, im = im_lo + (im_hi - im_lo) * i / 5.0;
    svg += "<text x=\"" + num(sx(re)) + "\" y=\"" + num(y0 + 16) + "\" text-anchor=\"middle\">" + num(re) + "</text>\n";
    svg += "<text x=\"" + num(x0 - 6) + "\" y=\"" + num(sy(im) + 4) + "\" text-anchor=\"end\">" + num(im) + "</text>\n";
  }
  svg += "<text x=\"" + num(0.5 * (x0 + x1)) + "\" y=\"" + num(kHeight - 16) + "\" text-anchor=\"middle\">Re s</text>\n";
  svg += "<text x=\"16\" y=\"" + num(0.5 * (y0 + y1)) + "\" transform=\"rotate(-90 16 " + num(0.5 * (y0 + y1)) +
         ")\" text-anchor=\"middle\">Im s</text>\n";
  if (boundary_line) {
    svg += "<line x1=\"" + num(sx(2.0)) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(sx(2.0)) + "\" y2=\"" + num(y1) +
           "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (const auto& p : poles) {
    svg += "<circle cx=\"" + num(sx(p.location.real())) + "\" cy=\"" + num(sy(p.location.imag())) +
           "\" r=\"2.5\" fill=\"" + palette[color_of[p.family] % 10] + "\"/>\n";
  }
  double ly = y1;
  for (const auto& [family, c] : color_of) {
    svg += "<circle cx=\"" + num(x1 + 10) + "\" cy=\"" + num(ly) + "\" r=\"3\" fill=\"" + palette[c % 10] + "\"/>\n";
    svg += "<text x=\"" + num(x1 + 16) + "\" y=\"" + num(ly + 4) + "\">" + family + "</text>\n";
    ly += 14;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace ffgold
