#include "sections/zoo.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "sections/errors.hpp"

namespace sections {

namespace {

constexpr double kInvariantTol = 1e-12;

template <typename Coefficient>
TruncatedSeries normalized_from(std::size_t order, Coefficient a) {
  if (order < 1) {
    throw DomainError("normalized series need order >= 1");
  }
  std::vector<Complex> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = a(static_cast<double>(n));
  }
  return TruncatedSeries(std::move(c));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform in the open interval (0, 1), independent of the standard library's
// distribution implementations.
double open_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

void HerglotzSpec::validate() const {
  if (atoms.empty()) {
    throw ValidationError("Herglotz spec has no atoms");
  }
  double total = 0.0;
  for (const auto& atom : atoms) {
    if (!(atom.weight > 0.0) || atom.weight > 1.0 + kInvariantTol) {
      throw ValidationError("atom weight must lie in (0, 1]");
    }
    if (!(std::abs(std::abs(atom.point) - 1.0) <= kInvariantTol)) {
      throw ValidationError("atom point must be unimodular");
    }
    total += atom.weight;
  }
  if (!(std::abs(total - 1.0) <= kInvariantTol)) {
    throw ValidationError("atom weights must sum to 1");
  }
}

std::vector<Complex> HerglotzSpec::caratheodory_coefficients(std::size_t order) const {
  std::vector<Complex> p(order + 1);
  p[0] = 1.0;
  for (const auto& atom : atoms) {
    Complex power = 1.0;
    for (std::size_t j = 1; j <= order; ++j) {
      power *= atom.point;
      p[j] += 2.0 * atom.weight * power;
    }
  }
  return p;
}

Complex HerglotzSpec::evaluate(Complex z) const {
  Complex acc{};
  for (const auto& atom : atoms) {
    acc += atom.weight * (1.0 + atom.point * z) / (1.0 - atom.point * z);
  }
  return acc;
}

HerglotzSpec HerglotzSpec::single(Complex point) {
  return HerglotzSpec{{HerglotzAtom{1.0, point}}, std::nullopt};
}

HerglotzSpec HerglotzSpec::uniform(std::size_t count) {
  if (count == 0) {
    throw DomainError("uniform Herglotz spec needs at least one atom");
  }
  HerglotzSpec spec;
  const double w = 1.0 / static_cast<double>(count);
  for (std::size_t k = 0; k < count; ++k) {
    spec.atoms.push_back({w, std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                                   static_cast<double>(count))});
  }
  return spec;
}

TruncatedSeries koebe(std::size_t order) {
  return normalized_from(order, [](double n) { return n; });
}

TruncatedSeries half_plane(std::size_t order) {
  return normalized_from(order, [](double) { return 1.0; });
}

TruncatedSeries f0(std::size_t order) {
  return normalized_from(order, [](double n) { return (n + 1.0) / 2.0; });
}

TruncatedSeries cube_kernel(std::size_t order) {
  std::vector<Complex> c(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    const double x = static_cast<double>(m);
    c[m] = (x + 1.0) * (x + 2.0) / 2.0;
  }
  return TruncatedSeries(std::move(c));
}

// z g' = (3/2)(p - 1) g for g = f', matched coefficient by coefficient.
TruncatedSeries synthesize_F(const HerglotzSpec& spec, std::size_t order) {
  spec.validate();
  if (order < 1) {
    throw DomainError("synthesis order must be >= 1");
  }
  const auto p = spec.caratheodory_coefficients(order);
  std::vector<Complex> g(order);
  g[0] = 1.0;
  for (std::size_t m = 1; m < order; ++m) {
    Complex acc{};
    for (std::size_t j = 1; j <= m; ++j) {
      acc += p[j] * g[m - j];
    }
    g[m] = 1.5 / static_cast<double>(m) * acc;
  }
  std::vector<Complex> a(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    a[n] = g[n - 1] / static_cast<double>(n);
  }
  return TruncatedSeries(std::move(a));
}

TruncatedSeries rotation(const TruncatedSeries& f, Complex mu) {
  if (!(std::abs(std::abs(mu) - 1.0) <= kInvariantTol)) {
    throw ValidationError("rotation factor must be unimodular");
  }
  const auto c = f.coeffs();
  std::vector<Complex> out(c.size());
  // c_0 picks up conj(mu) = mu^{-1}.
  out[0] = std::conj(mu) * c[0];
  Complex power = 1.0;
  for (std::size_t n = 1; n < c.size(); ++n) {
    out[n] = power * c[n];
    power *= mu;
  }
  return TruncatedSeries(std::move(out));
}

std::uint64_t derive_spec_seed(std::uint64_t batch_seed, std::size_t index) {
  return splitmix64(splitmix64(batch_seed) + static_cast<std::uint64_t>(index)) >> 11;
}

HerglotzSpec sample_spec(std::size_t atom_count, std::uint64_t spec_seed) {
  if (atom_count == 0) {
    throw DomainError("atom_count must be >= 1");
  }
  std::mt19937_64 rng(spec_seed);
  HerglotzSpec spec;
  spec.seed = spec_seed;
  double total = 0.0;
  for (std::size_t k = 0; k < atom_count; ++k) {
    const double w = -std::log(open_unit(rng));
    const double theta = 2.0 * std::numbers::pi * open_unit(rng);
    spec.atoms.push_back({w, std::polar(1.0, theta)});
    total += w;
  }
  for (auto& atom : spec.atoms) {
    atom.weight /= total;
  }
  return spec;
}

std::vector<HerglotzSpec> sample_specs(std::size_t count, std::size_t atom_count,
                                       std::uint64_t rng_seed) {
  if (count == 0) {
    throw DomainError("count must be >= 1");
  }
  std::vector<HerglotzSpec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(sample_spec(atom_count, derive_spec_seed(rng_seed, i)));
  }
  return out;
}

}  // namespace sections
