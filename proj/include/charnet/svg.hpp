#pragma once

// Self-contained SVG scatter plots (no external renderer).

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "charnet/format.hpp"

namespace charnet {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
  bool connect = false;  // draw as a polyline instead of markers
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline void write_svg_scatter(std::ostream& out, const PlotSpec& spec, const std::vector<PlotSeries>& series) {
  constexpr double W = 480, H = 360, L = 60, R = 20, T = 40, B = 50;
  auto tx = [&](double v) { return spec.log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return spec.log_y ? std::log10(v) : v; };
  auto usable = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!spec.log_x || x > 0) && (!spec.log_y || y > 0);
  };

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series)
    for (auto [x, y] : s.points) {
      if (!usable(x, y)) continue;
      x0 = std::min(x0, tx(x)), x1 = std::max(x1, tx(x));
      y0 = std::min(y0, ty(y)), y1 = std::max(y1, ty(y));
    }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 == x0) x0 -= 0.5, x1 += 0.5;
  if (y1 == y0) y0 -= 0.5, y1 += 0.5;
  auto px = [&](double x) { return L + (tx(x) - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (ty(y) - y0) / (y1 - y0) * (H - T - B); };
  auto f = [](double v) { return format_real(v, 5); };
  auto tick = [](double v, bool log) { return format_real(log ? std::pow(10.0, v) : v, 3); };

  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 "
      << W << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">"
      << detail::xml_escape(spec.title) << "</text>\n";
  out << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << L << "\" y=\"" << H - B + 14 << "\" text-anchor=\"middle\">" << tick(x0, spec.log_x)
      << "</text>\n";
  out << "<text x=\"" << W - R << "\" y=\"" << H - B + 14 << "\" text-anchor=\"middle\">" << tick(x1, spec.log_x)
      << "</text>\n";
  out << "<text x=\"" << L - 4 << "\" y=\"" << H - B << "\" text-anchor=\"end\">" << tick(y0, spec.log_y)
      << "</text>\n";
  out << "<text x=\"" << L - 4 << "\" y=\"" << T + 4 << "\" text-anchor=\"end\">" << tick(y1, spec.log_y)
      << "</text>\n";
  out << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">"
      << detail::xml_escape(spec.x_label) << "</text>\n";
  out << "<text x=\"14\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << (T + H - B) / 2 << ")\">" << detail::xml_escape(spec.y_label) << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto* color = kColors[s % std::size(kColors)];
    const auto& pts = series[s].points;
    if (series[s].connect) {
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
      bool first = true;
      for (auto [x, y] : pts) {
        if (!usable(x, y)) continue;
        out << (first ? "" : " ") << f(px(x)) << ',' << f(py(y));
        first = false;
      }
      out << "\"/>\n";
    } else {
      for (auto [x, y] : pts) {
        if (!usable(x, y)) continue;
        out << "<circle cx=\"" << f(px(x)) << "\" cy=\"" << f(py(y)) << "\" r=\"2.5\" fill=\"" << color
            << "\" fill-opacity=\"0.7\"/>\n";
      }
    }
    out << "<text x=\"" << W - R - 4 << "\" y=\"" << T + 12 * (s + 1) << "\" text-anchor=\"end\" fill=\"" << color
        << "\">" << detail::xml_escape(series[s].label) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace charnet
