#include "sections/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "sections/errors.hpp"

namespace sections {

namespace {

constexpr double kViewport = 800.0;
constexpr double kMargin = 0.05;

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

std::string render_curve_svg(std::span<const Complex> points, const std::string& title) {
  if (points.size() < 2) {
    throw DomainError("curve needs at least two points");
  }
  // The origin is kept in the frame so both axes are visible.
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  for (const auto& p : points) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double scale = kViewport * (1.0 - 2.0 * kMargin) / span;
  const double cx = 0.5 * (xmin + xmax);
  const double cy = 0.5 * (ymin + ymax);
  const auto px = [&](double x) { return kViewport / 2.0 + (x - cx) * scale; };
  const auto py = [&](double y) { return kViewport / 2.0 - (y - cy) * scale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n"
     << "  <title>" << title << "</title>\n"
     << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n"
     << "  <line x1=\"0\" y1=\"" << fixed(py(0.0)) << "\" x2=\"800\" y2=\"" << fixed(py(0.0))
     << "\" stroke=\"gray\" stroke-width=\"1\"/>\n"
     << "  <line x1=\"" << fixed(px(0.0)) << "\" y1=\"0\" x2=\"" << fixed(px(0.0))
     << "\" y2=\"800\" stroke=\"gray\" stroke-width=\"1\"/>\n"
     << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k != 0) {
      os << ' ';
    }
    os << fixed(px(points[k].real())) << ',' << fixed(py(points[k].imag()));
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace sections
