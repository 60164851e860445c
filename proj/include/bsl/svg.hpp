#pragma once

#include <string>
#include <vector>

#include "bsl/report.hpp"

namespace bsl {

struct PlotSpec {
  std::string x_col;
  std::vector<std::string> y_cols;
  bool logx = false;
  bool logy = false;
  std::string title;
};

// Self-contained SVG line/scatter plot of the selected columns: 960x600
// viewBox, 60px margins, axis ticks and a legend. No external renderer
// involved; output bytes depend only on the table and the spec.
std::string emit_plot(const Table& table, const PlotSpec& spec);

}  // namespace bsl
