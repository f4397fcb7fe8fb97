#include "sections/radius.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <vector>
#include <optional>

#include "sections/errors.hpp"
#include "sections/minimize.hpp"

namespace sections {

namespace {

constexpr double kPoleModulus = 1e-300;
constexpr double kZeroOnCircleModulus = 1e-9;
constexpr double kThetaTol = 1e-12;
constexpr std::size_t kWindingStartSamples = 4096;
// Enough to resolve a zero about 1e-6 * r away from the circle.
constexpr std::size_t kWindingMaxSamples = std::size_t{1} << 22;

struct Jet {
  Complex value;
  Complex d1;
  Complex d2;
};

Jet evaluate_jet(const TruncatedSeries& s, Complex z) {
  const auto c = s.coeffs();
  const double zr = z.real();
  const double zi = z.imag();
  double vr = 0.0, vi = 0.0, ar = 0.0, ai = 0.0, br = 0.0, bi = 0.0;
  for (std::size_t m = c.size(); m-- > 0;) {
    // b accumulates s''/2, a accumulates s'.
    const double nbr = br * zr - bi * zi + ar;
    const double nbi = br * zi + bi * zr + ai;
    br = nbr;
    bi = nbi;
    const double nar = ar * zr - ai * zi + vr;
    const double nai = ar * zi + ai * zr + vi;
    ar = nar;
    ai = nai;
    const double nvr = vr * zr - vi * zi + c[m].real();
    const double nvi = vr * zi + vi * zr + c[m].imag();
    vr = nvr;
    vi = nvi;
  }
  return {{vr, vi}, {ar, ai}, {2.0 * br, 2.0 * bi}};
}

Complex on_circle(double r, double theta) { return std::polar(r, theta); }

// Re(z * a / b) without the Annex G division path.
double re_z_ratio(Complex z, Complex a, Complex b) {
  const double nr = z.real() * a.real() - z.imag() * a.imag();
  const double ni = z.real() * a.imag() + z.imag() * a.real();
  return (nr * b.real() + ni * b.imag()) / std::norm(b);
}

void check_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("boundary scan radius must lie in (0, 1)");
  }
}

// cos/sin of 2 pi k / M, cached per thread and grid size.
struct UnitCircle {
  std::vector<double> cos;
  std::vector<double> sin;
};

const UnitCircle& unit_circle(std::size_t nodes) {
  thread_local std::map<std::size_t, UnitCircle> cache;
  auto [it, inserted] = cache.try_emplace(nodes);
  if (inserted) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(nodes);
    it->second.cos.resize(nodes);
    it->second.sin.resize(nodes);
    for (std::size_t k = 0; k < nodes; ++k) {
      it->second.cos[k] = std::cos(step * static_cast<double>(k));
      it->second.sin[k] = std::sin(step * static_cast<double>(k));
    }
  }
  return it->second;
}

constexpr std::size_t kBlock = 256;

// Value and derivatives of s at a contiguous block of grid nodes, laid out as
// separate real/imaginary arrays so the Horner loop vectorizes across nodes.
struct BlockJet {
  std::array<double, kBlock> zr, zi, vr, vi, ar, ai, br, bi;
  std::size_t size = 0;
};

// Grids larger than this are evaluated without a cached table.
constexpr std::size_t kMaxCachedNodes = std::size_t{1} << 16;

// Nodes r e^{2 pi i k / nodes} for k in [first, first + count); `unit` may be
// null, in which case the nodes are computed directly.
void evaluate_block(const TruncatedSeries& s, double r, const UnitCircle* unit, std::size_t nodes,
                    std::size_t first, std::size_t count, int derivatives, BlockJet& out) {
  out.size = count;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(nodes);
  for (std::size_t k = 0; k < count; ++k) {
    if (unit != nullptr) {
      out.zr[k] = r * unit->cos[first + k];
      out.zi[k] = r * unit->sin[first + k];
    } else {
      const double t = step * static_cast<double>(first + k);
      out.zr[k] = r * std::cos(t);
      out.zi[k] = r * std::sin(t);
    }
    out.vr[k] = out.vi[k] = out.ar[k] = out.ai[k] = out.br[k] = out.bi[k] = 0.0;
  }
  const auto c = s.coeffs();
  for (std::size_t m = c.size(); m-- > 0;) {
    const double cr = c[m].real();
    const double ci = c[m].imag();
    if (derivatives >= 2) {
      for (std::size_t k = 0; k < count; ++k) {
        const double nbr = out.br[k] * out.zr[k] - out.bi[k] * out.zi[k] + out.ar[k];
        const double nbi = out.br[k] * out.zi[k] + out.bi[k] * out.zr[k] + out.ai[k];
        out.br[k] = nbr;
        out.bi[k] = nbi;
      }
    }
    if (derivatives >= 1) {
      for (std::size_t k = 0; k < count; ++k) {
        const double nar = out.ar[k] * out.zr[k] - out.ai[k] * out.zi[k] + out.vr[k];
        const double nai = out.ar[k] * out.zi[k] + out.ai[k] * out.zr[k] + out.vi[k];
        out.ar[k] = nar;
        out.ai[k] = nai;
      }
    }
    for (std::size_t k = 0; k < count; ++k) {
      const double nvr = out.vr[k] * out.zr[k] - out.vi[k] * out.zi[k] + cr;
      const double nvi = out.vr[k] * out.zi[k] + out.vi[k] * out.zr[k] + ci;
      out.vr[k] = nvr;
      out.vi[k] = nvi;
    }
  }
}

int derivatives_needed(Criterion c) {
  switch (c) {
    case Criterion::Convexity:
      return 2;
    default:
      return 1;
  }
}

// Same arithmetic as criterion_value, on block entry k.
double block_criterion(const BlockJet& b, std::size_t k, Criterion c) {
  switch (c) {
    case Criterion::ReDeriv:
      return b.ar[k];
    case Criterion::LocalUnivalence:
      return std::abs(Complex{b.ar[k], b.ai[k]});
    case Criterion::Starlikeness: {
      const Complex z{b.zr[k], b.zi[k]};
      const Complex v{b.vr[k], b.vi[k]};
      if (std::abs(v) < kPoleModulus) {
        throw PoleProximityError(z);
      }
      return re_z_ratio(z, Complex{b.ar[k], b.ai[k]}, v);
    }
    case Criterion::Convexity: {
      const Complex z{b.zr[k], b.zi[k]};
      const Complex d1{b.ar[k], b.ai[k]};
      if (std::abs(d1) < kPoleModulus) {
        throw PoleProximityError(z);
      }
      return 1.0 + re_z_ratio(z, Complex{2.0 * b.br[k], 2.0 * b.bi[k]}, d1);
    }
  }
  return 0.0;
}

struct GridMinimum {
  std::size_t index = 0;
  double value = 0.0;
  double sum = 0.0;  // over all visited nodes
  bool all_positive = true;
  std::size_t first_nonpositive = 0;
};

// Criterion on every node of the uniform grid, visited in blocks starting with
// the block that holds `start`. With stop_at_nonpositive the scan ends at the
// first block holding a value <= 0; otherwise the smallest (value, index) wins.
GridMinimum scan_grid(const TruncatedSeries& s, Criterion c, double r, std::size_t grid_size,
                      std::size_t start, bool stop_at_nonpositive) {
  const UnitCircle& unit = unit_circle(grid_size);
  const int derivs = derivatives_needed(c);
  const std::size_t blocks = (grid_size + kBlock - 1) / kBlock;
  const std::size_t first_block = (start % grid_size) / kBlock;
  thread_local BlockJet jet;
  GridMinimum out;
  bool have = false;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t block = (first_block + b) % blocks;
    const std::size_t first = block * kBlock;
    const std::size_t count = std::min(kBlock, grid_size - first);
    evaluate_block(s, r, &unit, grid_size, first, count, derivs, jet);
    for (std::size_t k = 0; k < count; ++k) {
      const double v = block_criterion(jet, k, c);
      const std::size_t index = first + k;
      out.sum += v;
      if (!(v > 0.0) && out.all_positive) {
        out.all_positive = false;
        out.first_nonpositive = index;
      }
      if (!have || v < out.value || (v == out.value && index < out.index)) {
        out.value = v;
        out.index = index;
        have = true;
      }
    }
    if (stop_at_nonpositive && !out.all_positive) {
      return out;
    }
  }
  return out;
}

ScalarMinimum refine_cell(const TruncatedSeries& s, Criterion c, double r, std::size_t grid_size,
                          std::size_t index) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(grid_size);
  const double center = step * static_cast<double>(index);
  return golden_section_minimize([&](double t) { return criterion_value(s, c, on_circle(r, t)); },
                                 center - step, center + step, kThetaTol);
}

// Sign-only variant of boundary_min. `hint` carries the last failing grid
// index between calls so a failing radius is usually rejected in one block.
bool boundary_positive(const TruncatedSeries& s, Criterion c, double r, std::size_t grid_size,
                       std::size_t& hint) {
  const auto grid = scan_grid(s, c, r, grid_size, hint, true);
  if (!grid.all_positive) {
    hint = grid.first_nonpositive;
    return false;
  }
  hint = grid.index;
  return refine_cell(s, c, r, grid_size, grid.index).value > 0.0;
}

struct Bracket {
  double lo;
  double hi;
  int steps;
};

// lo satisfies pred, hi does not; shrink until hi - lo <= tol.
template <typename Predicate>
Bracket bisect(Predicate&& pred, double lo, double hi, double tol) {
  int steps = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++steps;
  }
  return {lo, hi, steps};
}

// Newton iteration on p started at z. Returns the zero if it converges.
std::optional<Complex> newton_zero(const TruncatedSeries& p, Complex z) {
  for (int it = 0; it < 60; ++it) {
    const auto vs = evaluate_with_derivative(p, z);
    if (vs.slope == Complex{}) {
      return std::nullopt;
    }
    const Complex step = vs.value / vs.slope;
    z -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) {
      return z;
    }
  }
  return std::nullopt;
}

// Same certificate as bisect for a continuous score whose sign is the
// predicate (score > 0 holds): Brent's zero finder, which mixes inverse
// quadratic interpolation, secant and bisection steps and stops once the
// sign-change bracket is no wider than tol. Non-finite scores (poles) force
// bisection steps.
template <typename Score>
Bracket brent_bracket(Score&& score, double lo, double f_lo, double hi, double f_hi, double tol) {
  const auto holds = [](double f) { return f > 0.0; };
  double a = lo, fa = f_lo;
  double b = hi, fb = f_hi;
  double c = a, fc = fa;
  double d = b - a;
  double e = d;
  int steps = 0;
  const double tol1 = 0.5 * tol;
  for (;;) {
    if (holds(fb) == holds(fc)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1) {
      break;
    }
    const bool finite = std::isfinite(fa) && std::isfinite(fb) && std::isfinite(fc);
    if (finite && std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double sr = fb / fa;
      if (a == c) {
        p = 2.0 * xm * sr;
        q = 1.0 - sr;
      } else {
        const double qa = fa / fc;
        const double rb = fb / fc;
        p = sr * (2.0 * xm * qa * (qa - rb) - (b - a) * (rb - 1.0));
        q = (qa - 1.0) * (rb - 1.0) * (sr - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      }
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : std::copysign(tol1, xm);
    fb = score(b);
    ++steps;
  }
  const double ok = holds(fb) ? b : c;
  const double bad = holds(fb) ? c : b;
  return {ok, bad, steps};
}

}  // namespace

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::ReDeriv:
      return "re-deriv";
    case Criterion::Convexity:
      return "convex";
    case Criterion::Starlikeness:
      return "starlike";
    case Criterion::LocalUnivalence:
      return "local-univalence";
  }
  return "unknown";
}

double criterion_value(const TruncatedSeries& s, Criterion c, Complex z) {
  switch (c) {
    case Criterion::ReDeriv:
      return evaluate_with_derivative(s, z).slope.real();
    case Criterion::LocalUnivalence:
      return std::abs(evaluate_with_derivative(s, z).slope);
    case Criterion::Starlikeness: {
      if (z == Complex{}) {
        return 1.0;
      }
      const auto [value, slope] = evaluate_with_derivative(s, z);
      if (std::abs(value) < kPoleModulus) {
        throw PoleProximityError(z);
      }
      return re_z_ratio(z, slope, value);
    }
    case Criterion::Convexity: {
      const Jet j = evaluate_jet(s, z);
      if (std::abs(j.d1) < kPoleModulus) {
        throw PoleProximityError(z);
      }
      return 1.0 + re_z_ratio(z, j.d2, j.d1);
    }
  }
  return 0.0;
}

namespace {

struct ScanWithMean {
  BoundaryScan scan;
  double mean = 0.0;
};

ScanWithMean full_scan(const TruncatedSeries& s, Criterion c, double r, std::size_t grid_size) {
  const auto grid = scan_grid(s, c, r, grid_size, 0, false);
  ScanWithMean out{{r, grid_size, grid.value,
                    2.0 * std::numbers::pi * static_cast<double>(grid.index) /
                        static_cast<double>(grid_size),
                    false},
                   grid.sum / static_cast<double>(grid_size)};
  const auto local = refine_cell(s, c, r, grid_size, grid.index);
  if (local.value < out.scan.min_value) {
    out.scan.min_value = local.value;
    out.scan.argmin_theta = wrap_angle(local.x);
    out.scan.refined = true;
  }
  return out;
}

}  // namespace

BoundaryScan boundary_min(const TruncatedSeries& s, Criterion c, double r, std::size_t grid_size) {
  check_radius(r);
  if (grid_size < 16) {
    throw DomainError("boundary scan needs grid_size >= 16");
  }
  return full_scan(s, c, r, grid_size).scan;
}

int count_zeros(const TruncatedSeries& s, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("zero counting needs a positive finite radius");
  }
  bool all_zero = true;
  for (const auto& c : s.coeffs()) {
    all_zero = all_zero && c == Complex{};
  }
  if (all_zero) {
    throw DegenerateInputError("cannot count zeros of the zero polynomial");
  }

  // Closest approach of s to zero on the circle: grid, then golden refinement.
  thread_local BlockJet jet;
  const UnitCircle& start_unit = unit_circle(kWindingStartSamples);
  std::size_t closest_index = 0;
  double closest = std::numeric_limits<double>::infinity();
  for (std::size_t first = 0; first < kWindingStartSamples; first += kBlock) {
    evaluate_block(s, r, &start_unit, kWindingStartSamples, first, kBlock, 0, jet);
    for (std::size_t k = 0; k < kBlock; ++k) {
      const double mod = std::abs(Complex{jet.vr[k], jet.vi[k]});
      if (mod < closest) {
        closest = mod;
        closest_index = first + k;
      }
    }
  }
  const double step0 = 2.0 * std::numbers::pi / static_cast<double>(kWindingStartSamples);
  const double center = step0 * static_cast<double>(closest_index);
  closest = std::min(closest, golden_section_minimize(
                                  [&](double t) { return std::abs(evaluate(s, on_circle(r, t))); },
                                  center - step0, center + step0, kThetaTol)
                                  .value);
  if (closest < kZeroOnCircleModulus) {
    throw ZeroOnCircleError(r, closest);
  }

  // Trapezoidal rule for (1/2 pi i) \oint s'/s dz = mean of z s'(z)/s(z).
  std::optional<long> previous;
  for (std::size_t samples = kWindingStartSamples; samples <= kWindingMaxSamples; samples *= 2) {
    const UnitCircle* unit = samples <= kMaxCachedNodes ? &unit_circle(samples) : nullptr;
    double acc = 0.0;
    for (std::size_t first = 0; first < samples; first += kBlock) {
      evaluate_block(s, r, unit, samples, first, kBlock, 1, jet);
      for (std::size_t k = 0; k < kBlock; ++k) {
        const Complex z{jet.zr[k], jet.zi[k]};
        acc += re_z_ratio(z, Complex{jet.ar[k], jet.ai[k]}, Complex{jet.vr[k], jet.vi[k]});
      }
    }
    const double winding = acc / static_cast<double>(samples);
    const long rounded = std::lround(winding);
    if (previous && *previous == rounded && std::abs(winding - static_cast<double>(rounded)) < 0.25) {
      return static_cast<int>(rounded);
    }
    previous = rounded;
  }
  throw ZeroOnCircleError(r, closest);
}

RadiusResult criterion_radius(const TruncatedSeries& s, Criterion c, double tol,
                              std::size_t grid_size) {
  if (!s.is_normalized()) {
    throw ValidationError("criterion_radius needs a normalized series (c_0 = 0, c_1 = 1)");
  }
  if (!(tol >= 1e-12)) {
    throw DomainError("radius tolerance must be >= 1e-12");
  }

  // Denominator free of zeros in |z| <= r; monotone in r.
  std::optional<TruncatedSeries> slope;
  if (c == Criterion::Convexity || c == Criterion::LocalUnivalence) {
    slope = derivative(s);
  }
  const auto denominator_ok = [&](double r) {
    try {
      switch (c) {
        case Criterion::ReDeriv:
          return true;
        case Criterion::Starlikeness:
          return count_zeros(s, r) == 1;
        case Criterion::Convexity:
        case Criterion::LocalUnivalence:
          return count_zeros(*slope, r) == 0;
      }
    } catch (const ZeroOnCircleError&) {
      return false;
    }
    return false;
  };
  std::size_t hint = 0;
  const auto boundary_ok = [&](double r) {
    if (c == Criterion::LocalUnivalence) {
      return denominator_ok(r);
    }
    try {
      return boundary_positive(s, c, r, grid_size, hint);
    } catch (const PoleProximityError&) {
      return false;
    }
  };
  const auto witness_at = [&](double r, double fallback) {
    try {
      return boundary_min(s, c, r, grid_size);
    } catch (const PoleProximityError&) {
      return boundary_min(s, c, fallback, grid_size);
    }
  };

  RadiusResult out;
  out.tol = tol;
  out.iterations = 1;
  if (boundary_ok(kRadiusCap) && denominator_ok(kRadiusCap)) {
    out.radius = kRadiusCap;
    out.clamped = true;
    out.witness = witness_at(kRadiusCap, kRadiusCap);
    return out;
  }

  Bracket bracket{};
  if (c == Criterion::LocalUnivalence) {
    bracket = bisect(boundary_ok, 0.0, kRadiusCap, tol);
    // Zero counting gives up within about 1e-7 of the circle, so the bracket
    // stops short of the zero of s'. Polish on the zero itself, found from
    // the smallest |s'| on the failing circle.
    const auto near = boundary_min(s, c, bracket.hi, grid_size);
    if (const auto zeta = newton_zero(*slope, std::polar(bracket.hi, near.argmin_theta))) {
      const double rho = std::abs(*zeta);
      if (rho >= bracket.lo && rho - bracket.hi < 1e-5) {
        bracket = {rho - 0.5 * tol, rho + 0.5 * tol, bracket.steps};
      }
    }
  } else {
    // For the quotient criteria the grid mean of the criterion is the
    // trapezoidal winding estimate: 1 + (zeros of s' inside) for Convexity,
    // (zeros of s inside) for Starlikeness. Any other value means a zero of
    // the denominator is already inside and the criterion fails.
    const auto score = [&](double r) {
      try {
        const auto scan = full_scan(s, c, r, grid_size);
        if (c != Criterion::ReDeriv && std::lround(scan.mean) != 1) {
          return -std::numeric_limits<double>::infinity();
        }
        return scan.scan.min_value;
      } catch (const PoleProximityError&) {
        return -std::numeric_limits<double>::infinity();
      }
    };
    // The criterion equals 1 at z = 0 for every normalized series.
    bracket = brent_bracket(score, 0.0, 1.0, kRadiusCap, score(kRadiusCap), tol);
    if (!(bracket.lo < bracket.hi)) {
      // Holding above a failing radius: the score is not monotone here.
      bracket = bisect(boundary_ok, 0.0, kRadiusCap, tol);
    }
  }
  out.iterations += bracket.steps;
  if ((c == Criterion::Convexity || c == Criterion::Starlikeness) && bracket.lo > 0.0 &&
      !denominator_ok(bracket.lo)) {
    // A zero of the denominator entered the disk, so the boundary test alone
    // was not monotone on [0, cap]. The combined test is; the boundary test
    // runs first so zeros are never counted close to the circle.
    const auto combined = [&](double r) { return boundary_ok(r) && denominator_ok(r); };
    bracket = bisect(combined, 0.0, bracket.lo, tol);
    out.iterations += bracket.steps;
  }
  out.radius = 0.5 * (bracket.lo + bracket.hi);
  out.witness = witness_at(out.radius, bracket.lo > 0.0 ? bracket.lo : out.radius);
  return out;
}

}  // namespace sections
