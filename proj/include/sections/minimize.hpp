#pragma once

#include <cstddef>
#include <functional>

namespace sections {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a local minimum of f on [a, b], stopping when the
/// bracket is narrower than `tol`. Evaluations are deterministic and serial.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                                      double tol);

struct PeriodicMinimum {
  double theta = 0.0;       // in [0, 2*pi)
  double value = 0.0;
  std::size_t grid_index = 0;
  bool refined = false;     // golden-section improved on the grid value
};

/// Minimum of a 2*pi-periodic function: uniform grid of `grid_size` nodes,
/// the smallest (value, theta) pair seeds a golden-section refinement on the
/// two adjacent cells.
PeriodicMinimum minimize_periodic(const std::function<double(double)>& f, std::size_t grid_size,
                                  double theta_tol = 1e-12);

/// Wraps theta into [0, 2*pi).
double wrap_angle(double theta);

}  // namespace sections
