#pragma once

#include <cstddef>
#include <string_view>

#include "sections/series.hpp"

namespace sections {

/// Geometric condition tested on a disk |z| < r.
enum class Criterion {
  ReDeriv,          // Re s'(z) > 0
  Convexity,        // Re(1 + z s''/s') > 0
  Starlikeness,     // Re(z s'/s) > 0
  LocalUnivalence,  // s'(z) != 0
};

std::string_view to_string(Criterion c);

inline constexpr std::size_t kDefaultGridSize = 2048;
inline constexpr double kDefaultRadiusTol = 1e-9;
inline constexpr double kRadiusCap = 1.0 - 1e-6;

struct BoundaryScan {
  double r = 0.0;
  std::size_t grid_size = 0;
  double min_value = 0.0;
  double argmin_theta = 0.0;
  bool refined = false;
};

struct RadiusResult {
  double radius = 0.0;
  BoundaryScan witness;
  int iterations = 0;
  double tol = 0.0;
  bool clamped = false;  // the criterion held all the way to kRadiusCap
};

/// Real part of the criterion's defining expression at z (|s'(z)| for
/// LocalUnivalence). Starlikeness at z = 0 is the removable value 1.
/// Throws PoleProximityError when a denominator has modulus below 1e-300.
double criterion_value(const TruncatedSeries& s, Criterion c, Complex z);

/// Minimum of the criterion over |z| = r: uniform theta grid, then
/// golden-section refinement of the best cell to a theta tolerance of 1e-12.
BoundaryScan boundary_min(const TruncatedSeries& s, Criterion c, double r,
                          std::size_t grid_size = kDefaultGridSize);

/// Largest r <= kRadiusCap such that the criterion is positive on |z| < r,
/// bracketed to within `tol`. For quotient criteria the denominator is
/// checked free of zeros in |z| <= r via count_zeros before a radius is accepted.
RadiusResult criterion_radius(const TruncatedSeries& s, Criterion c, double tol = kDefaultRadiusTol,
                              std::size_t grid_size = kDefaultGridSize);

/// Number of zeros of the polynomial s inside |z| < r by the argument principle.
/// Throws ZeroOnCircleError if min |s| on the circle is below 1e-9, or if the
/// winding estimate has not settled by 2^22 samples (a zero hugging the circle).
int count_zeros(const TruncatedSeries& s, double r);

}  // namespace sections
