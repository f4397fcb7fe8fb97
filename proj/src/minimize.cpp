#include "sections/minimize.hpp"

#include <cmath>
#include <numbers>

#include "sections/errors.hpp"

namespace sections {

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                                      double tol) {
  if (!(b > a)) {
    throw DomainError("golden-section bracket must satisfy a < b");
  }
  constexpr double inv_phi = 0.6180339887498949;  // 1/golden ratio
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    // Bracket can no longer shrink in floating point.
    if (c >= d) {
      break;
    }
  }
  return fc <= fd ? ScalarMinimum{c, fc} : ScalarMinimum{d, fd};
}

double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) {
    t += two_pi;
  }
  if (t >= two_pi) {
    t = 0.0;
  }
  return t;
}

PeriodicMinimum minimize_periodic(const std::function<double(double)>& f, std::size_t grid_size,
                                  double theta_tol) {
  if (grid_size < 3) {
    throw DomainError("periodic grid needs at least 3 nodes");
  }
  const double step = 2.0 * std::numbers::pi / static_cast<double>(grid_size);
  std::size_t best = 0;
  double best_value = f(0.0);
  for (std::size_t k = 1; k < grid_size; ++k) {
    const double v = f(step * static_cast<double>(k));
    // Strict comparison keeps the smallest theta on ties.
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  PeriodicMinimum out;
  out.grid_index = best;
  out.theta = step * static_cast<double>(best);
  out.value = best_value;

  const double center = step * static_cast<double>(best);
  const ScalarMinimum local = golden_section_minimize(f, center - step, center + step, theta_tol);
  if (local.value < best_value) {
    out.theta = wrap_angle(local.x);
    out.value = local.value;
    out.refined = true;
  }
  return out;
}

}  // namespace sections
