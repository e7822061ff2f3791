#pragma once

#include "nps7/rational.hpp"

#include <string_view>
#include <vector>

namespace nps7 {

enum class EndConditionMode { Standard, Improved };

std::string_view to_string(EndConditionMode mode);
/// "standard" | "improved"; throws ValidationError otherwise.
EndConditionMode parse_mode(std::string_view text);

/// One coefficient attached to a knot index (for U_j, y_j) or a derivative
/// order (for h^m y0^(m)), kept as the literal text of an exact rational.
struct IndexedCoeff {
  int index;
  std::string_view value;
};

/// One end-condition row:
///   sum_j u[j] U_j = (1/h^7) (sum_j y[j] y_j + sum_m d[m] h^m y0^(m)).
struct EndRowSpec {
  int row;  // knot row 1..6
  std::vector<IndexedCoeff> u;
  std::vector<IndexedCoeff> y;
  std::vector<IndexedCoeff> d;
};

/// The rows exactly as published.
const std::vector<EndRowSpec>& published_end_rows(EndConditionMode mode);

struct RationalCoeff {
  int index;
  ExactRational value;
};

/// An end-condition row with its coefficients materialized as rationals.
struct EndRow {
  int row;
  std::vector<RationalCoeff> u;
  std::vector<RationalCoeff> y;
  std::vector<RationalCoeff> d;

  /// Highest knot index referenced by a U or y coefficient.
  int max_knot() const;
};

/// The rows the solver uses. Standard rows are the published ones. Improved
/// rows 4 and 6 carry two corrections that restore polynomial exactness
/// through degree 12: the last U index of row 4 is 8 (printed as 7), and
/// row 6 has a y_11 term (absent from the printed row).
const std::vector<EndRow>& end_rows(EndConditionMode mode);

/// Rationals for the published rows, with no corrections applied.
std::vector<EndRow> materialize(const std::vector<EndRowSpec>& specs);

/// Smallest n for which every row of the mode fits on the grid.
int min_intervals(EndConditionMode mode);

}  // namespace nps7
