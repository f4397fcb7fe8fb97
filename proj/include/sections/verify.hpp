#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sections/radius.hpp"
#include "sections/series.hpp"

namespace sections {

struct Witness {
  double r = 0.0;
  double theta = 0.0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// One named check. `pass` is derived: true when there is no expected value,
/// otherwise |computed - expected| <= tolerance.
struct VerificationItem {
  std::string name;
  std::optional<double> expected;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::optional<Witness> witness;

  static VerificationItem check(std::string name, double expected, double computed,
                                double tolerance, std::optional<Witness> witness = std::nullopt);
  static VerificationItem info(std::string name, double computed,
                               std::optional<Witness> witness = std::nullopt);

  friend bool operator==(const VerificationItem&, const VerificationItem&) = default;
};

struct VerificationReport {
  std::vector<VerificationItem> items;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> parameters;
  std::string generator_name;

  bool passed() const;
  /// Item by name; nullptr if absent.
  const VerificationItem* find(const std::string& name) const;
  void append(const VerificationReport& other);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Scan outcome: the report plus whether any case fell below its threshold.
struct ScanResult {
  VerificationReport report;
  std::size_t candidates = 0;
};

// g(theta) = 1 + cos(theta) + cos(2 theta)/2
double g_function(double theta);
// T(theta, phi) = g(theta) + cos(phi)/6
double T_function(double theta, double phi);

VerificationItem min_g();
VerificationItem min_T();

/// Minimum of Re (1-z)^{-3} on |z| = r computed two ways.
struct CubeKernelMinimum {
  double boundary = 0.0;  // refined boundary sampling of the closed form
  double theta = 0.0;
  double cubic = 0.0;     // cubic in x = cos(theta) minimized exactly on [-1, 1]
  double cubic_x = 0.0;
};
CubeKernelMinimum cube_kernel_minimum(double r);

/// Item for the boundary path; expected 27/64 at r = 1/3, otherwise the
/// cubic path value (so the item checks agreement at 1e-9).
VerificationItem min_re_cube_kernel(double r);

VerificationItem n4_margin();

std::vector<VerificationItem> sharpness_witnesses(double tol = kDefaultRadiusTol);

struct SuiteOptions {
  std::size_t count = 200;
  std::size_t atom_count = 3;
  int n_min = 2;
  int n_max = 20;
  std::uint64_t seed = 7;
  double tol = kDefaultRadiusTol;
  unsigned threads = 1;
};

/// Re s_n' on |z| = 1/3 - 1e-6 over f0 plus `count` sampled members of F.
VerificationReport theorem1_suite(const SuiteOptions& opt);

/// Coefficient, derivative-envelope and tail bounds over the same sample.
VerificationReport lemma1_suite(const SuiteOptions& opt);

/// Starlikeness radii of s_n(f); reports, never asserts. A candidate is a
/// radius below 1/3 - 1e-6.
ScanResult conjecture2_scan(const SuiteOptions& opt);

/// Starlikeness radii of Koebe sections against 1 - (3/n) log n, n >= 5.
ScanResult classical_radius_scan(int n_min, int n_max, double tol = kDefaultRadiusTol,
                                 unsigned threads = 1);

/// Closed boundary curve of H(|z| < r), H(z) = (1-z)^{-3}:
/// w_k = (1 + r e^{i t_k})^3 / (1 - r^2)^3, t_k = 2 pi k / (samples - 1).
std::vector<Complex> figure1_curves(double r, std::size_t samples);

struct CurveMinimum {
  double min_real = 0.0;
  double theta = 0.0;
};
/// Minimum real part along the curve: best sample, then golden-section on its neighbours.
CurveMinimum figure1_min_real(double r, std::size_t samples);

/// All items of the verify command, in a fixed order.
VerificationReport full_verification(const SuiteOptions& opt);

}  // namespace sections
