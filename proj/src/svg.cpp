#include "majlat/svg.hpp"

#include <array>
#include <cstdio>
#include <sstream>

namespace majlat {

namespace {

constexpr std::array<const char*, 10> kPalette = {
    "#000000", "#888888", "#d62728", "#1f77b4", "#2ca02c",
    "#17becf", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2",
};

std::string escape_xml(const std::string& s) {
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

}  // namespace

double SvgLayout::x_pixel(double omega, std::size_t d) {
  const double span = width - left - right;
  return left + span * omega / static_cast<double>(d);
}

double SvgLayout::y_pixel(double s) {
  const double span = height - top - bottom;
  return height - bottom - span * s;
}

std::string format_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string out(buf);
  return out == "-0.00" ? "0.00" : out;
}

std::string emit_lorenz_svg(const std::vector<PlotCurve>& curves) {
  if (curves.empty()) throw Error(ErrorCode::EmptyInput, "nothing to plot");
  const std::size_t n_points = curves.front().sums.size();
  if (n_points < 2) throw Error(ErrorCode::BadEndpoints, "a curve needs at least two points");
  for (const auto& c : curves) require_same_dim(n_points - 1, c.sums.size() - 1, "plot curve");
  const std::size_t d = n_points - 1;
  using L = SvgLayout;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << L::width << "\" height=\"" << L::height
      << "\" viewBox=\"0 0 " << L::width << ' ' << L::height << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << L::width << "\" height=\"" << L::height << "\" fill=\"#ffffff\"/>\n";

  const std::string x0 = format_coord(L::x_pixel(0, d));
  const std::string x1 = format_coord(L::x_pixel(static_cast<double>(d), d));
  const std::string y0 = format_coord(L::y_pixel(0));
  const std::string y1 = format_coord(L::y_pixel(1));
  svg << "  <g id=\"axes\" stroke=\"#000000\" stroke-width=\"1\">\n";
  svg << "    <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0 << "\"/>\n";
  svg << "    <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1 << "\"/>\n";
  svg << "  </g>\n";

  svg << "  <g id=\"ticks\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
  for (std::size_t k = 0; k <= d; ++k) {
    const std::string x = format_coord(L::x_pixel(static_cast<double>(k), d));
    svg << "    <text x=\"" << x << "\" y=\"" << format_coord(L::y_pixel(0) + 18) << "\" text-anchor=\"middle\">" << k
        << "</text>\n";
  }
  for (int q = 0; q <= 4; ++q) {
    const double s = q / 4.0;
    char label[16];
    std::snprintf(label, sizeof label, "%.2f", s);
    svg << "    <text x=\"" << format_coord(L::x_pixel(0, d) - 8) << "\" y=\"" << format_coord(L::y_pixel(s) + 4)
        << "\" text-anchor=\"end\">" << label << "</text>\n";
  }
  svg << "    <text x=\"" << format_coord((L::x_pixel(0, d) + L::x_pixel(static_cast<double>(d), d)) / 2) << "\" y=\""
      << format_coord(L::height - 15.0) << "\" text-anchor=\"middle\">&#969;</text>\n";
  svg << "  </g>\n";

  svg << "  <g id=\"curves\" fill=\"none\" stroke-width=\"2\">\n";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    svg << "    <polyline stroke=\"" << kPalette[i % kPalette.size()] << "\" points=\"";
    for (std::size_t k = 0; k <= d; ++k) {
      if (k) svg << ' ';
      svg << format_coord(L::x_pixel(static_cast<double>(k), d)) << ','
          << format_coord(L::y_pixel(curves[i].sums[k]));
    }
    svg << "\"><title>" << escape_xml(curves[i].label) << "</title></polyline>\n";
  }
  svg << "  </g>\n";

  svg << "  <g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  const double legend_x = L::width - L::right + 20;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const double y = L::top + 10 + 20.0 * static_cast<double>(i);
    svg << "    <line x1=\"" << format_coord(legend_x) << "\" y1=\"" << format_coord(y) << "\" x2=\""
        << format_coord(legend_x + 24) << "\" y2=\"" << format_coord(y) << "\" stroke=\""
        << kPalette[i % kPalette.size()] << "\" stroke-width=\"2\"/>\n";
    svg << "    <text x=\"" << format_coord(legend_x + 30) << "\" y=\"" << format_coord(y + 4) << "\">"
        << escape_xml(curves[i].label) << "</text>\n";
  }
  svg << "  </g>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace majlat
