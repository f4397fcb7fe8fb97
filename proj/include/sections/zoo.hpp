#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sections/series.hpp"

namespace sections {

/// Order used when synthesizing members of F unless a caller asks otherwise.
inline constexpr std::size_t kDefaultSynthesisOrder = 64;

/// Name of the generator behind sample_specs, recorded in reports.
inline constexpr std::string_view kGeneratorName = "mt19937_64/splitmix64-per-spec";

struct HerglotzAtom {
  double weight = 1.0;
  Complex point{1.0, 0.0};
};

/// Finite atomic probability measure on the unit circle. It defines
/// p(z) = sum_k w_k (1 + x_k z) / (1 - x_k z), a Caratheodory-class function
/// with p(0) = 1 and coefficients p_j = 2 sum_k w_k x_k^j.
struct HerglotzSpec {
  std::vector<HerglotzAtom> atoms;
  std::optional<std::uint64_t> seed;

  /// Throws ValidationError unless weights lie in (0,1], sum to 1 and every
  /// point is unimodular (both within 1e-12).
  void validate() const;

  /// p_1..p_order; index 0 holds p_0 = 1.
  std::vector<Complex> caratheodory_coefficients(std::size_t order) const;

  /// p(z) evaluated from the Mobius kernels.
  Complex evaluate(Complex z) const;

  /// One atom of unit weight at `point`.
  static HerglotzSpec single(Complex point);
  /// `count` equally spaced atoms of equal weight: p_j = 0 for 0 < j < count.
  static HerglotzSpec uniform(std::size_t count);
};

/// z/(1-z)^2, a_n = n.
TruncatedSeries koebe(std::size_t order);
/// z/(1-z), a_n = 1.
TruncatedSeries half_plane(std::size_t order);
/// The extremal function (z - z^2/2)/(1-z)^2, a_n = (n+1)/2.
TruncatedSeries f0(std::size_t order);
/// 1/(1-z)^3, coefficient (m+1)(m+2)/2.
TruncatedSeries cube_kernel(std::size_t order);

/// Member of F with 1 + (2/3) z f''/f' = p, p given by `spec`; order N.
TruncatedSeries synthesize_F(const HerglotzSpec& spec, std::size_t order = kDefaultSynthesisOrder);

/// conj(mu) f(mu z): a_n -> mu^{n-1} a_n. Throws ValidationError if |mu| != 1.
TruncatedSeries rotation(const TruncatedSeries& f, Complex mu);

/// Per-spec seed for index `index` of a batch drawn with `batch_seed`.
/// Values fit in 53 bits so they survive a round trip through a double.
std::uint64_t derive_spec_seed(std::uint64_t batch_seed, std::size_t index);

/// One spec drawn from its own seed: Dirichlet(1) weights, uniform points.
HerglotzSpec sample_spec(std::size_t atom_count, std::uint64_t spec_seed);

/// `count` specs, spec i drawn from derive_spec_seed(rng_seed, i).
std::vector<HerglotzSpec> sample_specs(std::size_t count, std::size_t atom_count,
                                       std::uint64_t rng_seed);

}  // namespace sections
