#include "bsl/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bsl {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 60.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Axis {
  double lo = 0, hi = 1;
  bool log = false;

  double place(double v, double px_lo, double px_hi) const {
    double a = log ? std::log10(v) : v;
    double l = log ? std::log10(lo) : lo;
    double h = log ? std::log10(hi) : hi;
    double t = h > l ? (a - l) / (h - l) : 0.5;
    return px_lo + t * (px_hi - px_lo);
  }

  std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      int k_lo = static_cast<int>(std::floor(std::log10(lo)));
      int k_hi = static_cast<int>(std::ceil(std::log10(hi)));
      for (int k = k_lo; k <= k_hi; ++k) {
        for (double m : {1.0, 2.0, 5.0}) {
          double v = m * std::pow(10.0, k);
          if (v >= lo * (1 - 1e-12) && v <= hi * (1 + 1e-12)) {
            out.push_back(v);
          }
        }
      }
      if (out.size() > 7) {  // keep decade ticks only
        std::vector<double> decades;
        for (double v : out) {
          double l10 = std::log10(v);
          if (std::abs(l10 - std::round(l10)) < 1e-9) {
            decades.push_back(v);
          }
        }
        if (decades.size() >= 2) {
          out = decades;
        }
      }
    } else {
      double span = hi - lo;
      double raw = span / 5.0;
      double mag = std::pow(10.0, std::floor(std::log10(raw)));
      double step = mag;
      for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) {
          step = m * mag;
          break;
        }
      }
      double first = std::ceil(lo / step) * step;
      for (double v = first; v <= hi + 1e-9 * span; v += step) {
        out.push_back(std::abs(v) < 1e-12 * span ? 0.0 : v);
      }
    }
    return out;
  }
};

Axis fit_axis(const std::vector<double>& values, bool log_scale,
              const std::string& name) {
  Axis ax;
  ax.log = log_scale;
  double lo = values.front(), hi = values.front();
  for (double v : values) {
    if (log_scale && v <= 0.0) {
      throw std::invalid_argument("log axis needs positive values in column '" +
                                  name + "'");
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (log_scale) {
    ax.lo = lo;
    ax.hi = hi > lo ? hi : lo * 10.0;
  } else {
    double pad = (hi - lo) * 0.05;
    if (pad == 0.0) {
      pad = std::abs(hi) > 0 ? std::abs(hi) * 0.05 : 1.0;
    }
    ax.lo = lo - pad;
    ax.hi = hi + pad;
  }
  return ax;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string emit_plot(const Table& table, const PlotSpec& spec) {
  if (table.rows.empty()) {
    throw std::invalid_argument("emit_plot: no rows to plot");
  }
  if (spec.y_cols.empty()) {
    throw std::invalid_argument("emit_plot: no y columns selected");
  }
  std::size_t xi = table.column_index(spec.x_col);
  std::vector<double> xs;
  xs.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    xs.push_back(cell_to_double(row[xi]));
  }
  std::vector<std::vector<double>> series;
  for (const std::string& yc : spec.y_cols) {
    std::size_t yi = table.column_index(yc);
    std::vector<double> ys;
    ys.reserve(table.rows.size());
    for (const auto& row : table.rows) {
      ys.push_back(cell_to_double(row[yi]));
    }
    series.push_back(std::move(ys));
  }

  Axis xa = fit_axis(xs, spec.logx, spec.x_col);
  std::vector<double> all_y;
  for (const auto& s : series) {
    all_y.insert(all_y.end(), s.begin(), s.end());
  }
  Axis ya = fit_axis(all_y, spec.logy, "y");

  const double x0 = kMargin, x1 = kWidth - kMargin;
  const double y0 = kHeight - kMargin, y1 = kMargin;  // svg y grows downward

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 600\" "
         "font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"960\" height=\"600\" fill=\"white\"/>\n";
  if (!spec.title.empty()) {
    svg += "<text x=\"480\" y=\"30\" text-anchor=\"middle\" font-size=\"16\">" +
           escape_xml(spec.title) + "</text>\n";
  }

  // Axes.
  svg += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) +
         "\" y2=\"" + num(y0) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) +
         "\" y2=\"" + num(y1) + "\" stroke=\"black\"/>\n";

  for (double t : xa.ticks()) {
    double px = xa.place(t, x0, x1);
    svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(y0) + "\" x2=\"" +
           num(px) + "\" y2=\"" + num(y0 + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(y0 + 18) +
           "\" text-anchor=\"middle\">" + tick_label(t) + "</text>\n";
  }
  for (double t : ya.ticks()) {
    double py = ya.place(t, y0, y1);
    svg += "<line x1=\"" + num(x0 - 5) + "\" y1=\"" + num(py) + "\" x2=\"" +
           num(x0) + "\" y2=\"" + num(py) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(x0 - 8) + "\" y=\"" + num(py + 4) +
           "\" text-anchor=\"end\">" + tick_label(t) + "</text>\n";
  }

  // Axis labels.
  svg += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kHeight - 15) +
         "\" text-anchor=\"middle\">" + escape_xml(spec.x_col) + "</text>\n";
  std::string ylabel;
  for (std::size_t i = 0; i < spec.y_cols.size(); ++i) {
    if (i) {
      ylabel += ", ";
    }
    ylabel += spec.y_cols[i];
  }
  svg += "<text x=\"18\" y=\"" + num((y0 + y1) / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         num((y0 + y1) / 2) + ")\">" + escape_xml(ylabel) + "</text>\n";

  // Series: polyline in x-sorted order plus markers.
  std::vector<std::size_t> order(xs.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % 6];
    std::string points;
    for (std::size_t idx : order) {
      if (!points.empty()) {
        points += ' ';
      }
      points += num(xa.place(xs[idx], x0, x1)) + "," +
                num(ya.place(series[s][idx], y0, y1));
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    for (std::size_t idx : order) {
      svg += "<circle cx=\"" + num(xa.place(xs[idx], x0, x1)) + "\" cy=\"" +
             num(ya.place(series[s][idx], y0, y1)) + "\" r=\"2.5\" fill=\"";
      svg += color;
      svg += "\"/>\n";
    }
  }

  // Legend.
  double ly = y1 + 10.0;
  for (std::size_t s = 0; s < spec.y_cols.size(); ++s) {
    const char* color = kPalette[s % 6];
    svg += "<rect x=\"" + num(x1 - 150) + "\" y=\"" + num(ly - 9) +
           "\" width=\"12\" height=\"12\" fill=\"";
    svg += color;
    svg += "\"/>\n";
    svg += "<text x=\"" + num(x1 - 132) + "\" y=\"" + num(ly + 1) + "\">" +
           escape_xml(spec.y_cols[s]) + "</text>\n";
    ly += 18.0;
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace bsl
