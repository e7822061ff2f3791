#include "nps7/end_conditions.hpp"

#include "nps7/error.hpp"

#include <algorithm>
#include <string>

namespace nps7 {

namespace {

std::vector<RationalCoeff> to_rationals(const std::vector<IndexedCoeff>& coeffs) {
  std::vector<RationalCoeff> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back({c.index, ExactRational::parse(c.value)});
  return out;
}

std::vector<EndRow> corrected_improved_rows() {
  std::vector<EndRow> rows = materialize(published_end_rows(EndConditionMode::Improved));

  // Row 4: the trailing unit coefficient multiplies U_8. With U_7 the row is
  // exact only through degree 7; with U_8 it is exact through degree 12.
  auto& row4 = rows[3];
  auto last = std::find_if(row4.u.begin(), row4.u.end(),
                           [](const RationalCoeff& c) { return c.index == 7; });
  last->index = 8;

  // Row 6: the y_11 term is missing from the printed row. Its coefficient is
  // the unique value making the row exact through degree 11 (it then holds
  // through degree 12 as well).
  rows[5].y.push_back(
      {11, ExactRational::parse("46086303519365307328116630/2757576831668386393741153")});
  return rows;
}

}  // namespace

std::string_view to_string(EndConditionMode mode) {
  return mode == EndConditionMode::Standard ? "standard" : "improved";
}

EndConditionMode parse_mode(std::string_view text) {
  if (text == "standard") return EndConditionMode::Standard;
  if (text == "improved") return EndConditionMode::Improved;
  throw ValidationError("unknown end-condition mode '" + std::string(text) +
                        "' (expected standard or improved)");
}

int EndRow::max_knot() const {
  int out = 0;
  for (const auto& c : u) out = std::max(out, c.index);
  for (const auto& c : y) out = std::max(out, c.index);
  return out;
}

std::vector<EndRow> materialize(const std::vector<EndRowSpec>& specs) {
  std::vector<EndRow> rows;
  rows.reserve(specs.size());
  for (const auto& spec : specs) {
    rows.push_back({spec.row, to_rationals(spec.u), to_rationals(spec.y), to_rationals(spec.d)});
  }
  return rows;
}

const std::vector<EndRow>& end_rows(EndConditionMode mode) {
  static const std::vector<EndRow> standard = materialize(published_end_rows(EndConditionMode::Standard));
  static const std::vector<EndRow> improved = corrected_improved_rows();
  return mode == EndConditionMode::Standard ? standard : improved;
}

int min_intervals(EndConditionMode mode) {
  int out = 7;
  for (const auto& row : end_rows(mode)) out = std::max(out, row.max_knot());
  return out;
}

}  // namespace nps7
