#pragma once

// Deterministic SVG plots of Lorenz curves on a fixed 800x600 canvas.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "majlat/core.hpp"

namespace majlat {

struct PlotCurve {
  std::string label;
  std::vector<double> sums;  // S_0..S_d
};

struct SvgLayout {
  static constexpr int width = 800;
  static constexpr int height = 600;
  static constexpr int left = 70;
  static constexpr int right = 180;
  static constexpr int top = 30;
  static constexpr int bottom = 60;

  // Pixel coordinates of the data point (omega, s) for a plot of dimension d.
  static double x_pixel(double omega, std::size_t d);
  static double y_pixel(double s);
};

// Formats a pixel coordinate the way the plot does ("%.2f").
std::string format_coord(double v);

// One polyline per curve, in input order, plus axes and a legend.
// Errors: DimensionMismatch, EmptyInput.
std::string emit_lorenz_svg(const std::vector<PlotCurve>& curves);

template <class T>
std::string emit_lorenz_svg(const std::vector<std::pair<std::string, LorenzCurve<T>>>& curves) {
  std::vector<PlotCurve> plot;
  plot.reserve(curves.size());
  for (const auto& [label, curve] : curves) {
    PlotCurve c{label, {}};
    for (const T& s : curve.sums()) c.sums.push_back(to_double(s));
    plot.push_back(std::move(c));
  }
  return emit_lorenz_svg(plot);
}

}  // namespace majlat
