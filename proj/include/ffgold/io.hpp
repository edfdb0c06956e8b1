#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ffgold/function_field.hpp"
#include "ffgold/spectra.hpp"

namespace ffgold {

using Json = nlohmann::ordered_json;

/// {p, r, genus, L_coeffs, source[, curve]}
Json spec_to_json(const FunctionFieldSpec& spec);
/// Rebuilds and revalidates a spec. Elliptic specs carrying a curve are
/// recounted and must reproduce their L_coeffs. Throws InvalidSpec on bad shape.
FunctionFieldSpec spec_from_json(const Json& j);

/// %.17g, with nan / inf / -inf spelled out.
std::string format_double(double x);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> cells);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Columns record,label,parameter,observed,predicted,bound. Verdicts follow
/// the data rows as record = verdict, observed = 1 or 0.
std::string report_to_csv(const ProbeReport& report);

Json poles_to_json(const std::vector<PoleRecord>& poles);

/// Scatter of pole locations in the s-plane with one marker per family.
/// Draws Re s = 2 when boundary_line is set.
std::string poles_to_svg(const std::vector<PoleRecord>& poles, bool boundary_line);

}  // namespace ffgold
