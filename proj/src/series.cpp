#include "sections/series.hpp"

#include <algorithm>
#include <string>

#include "sections/errors.hpp"

namespace sections {

TruncatedSeries::TruncatedSeries() : coeffs_(1, Complex{}) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw ValidationError("a truncated series needs at least the constant coefficient");
  }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<Complex>(order + 1));
}

TruncatedSeries TruncatedSeries::constant(Complex value, std::size_t order) {
  std::vector<Complex> c(order + 1);
  c[0] = value;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  std::vector<Complex> c(std::max<std::size_t>(order, 1) + 1);
  c[1] = 1.0;
  return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::is_normalized() const noexcept {
  return coeffs_.size() >= 2 && coeffs_[0] == Complex{} && coeffs_[1] == Complex{1.0, 0.0};
}

// Horner loops are written on real/imaginary parts: std::complex multiplication
// goes through the Annex G slow path without -fcx-limited-range.
Complex evaluate(const TruncatedSeries& s, Complex z) {
  const auto c = s.coeffs();
  const double zr = z.real();
  const double zi = z.imag();
  double vr = 0.0;
  double vi = 0.0;
  for (std::size_t m = c.size(); m-- > 0;) {
    const double tr = vr * zr - vi * zi + c[m].real();
    const double ti = vr * zi + vi * zr + c[m].imag();
    vr = tr;
    vi = ti;
  }
  return {vr, vi};
}

ValueAndSlope evaluate_with_derivative(const TruncatedSeries& s, Complex z) {
  const auto c = s.coeffs();
  const double zr = z.real();
  const double zi = z.imag();
  double vr = 0.0, vi = 0.0;
  double dr = 0.0, di = 0.0;
  for (std::size_t m = c.size(); m-- > 0;) {
    const double ndr = dr * zr - di * zi + vr;
    const double ndi = dr * zi + di * zr + vi;
    dr = ndr;
    di = ndi;
    const double nvr = vr * zr - vi * zi + c[m].real();
    const double nvi = vr * zi + vi * zr + c[m].imag();
    vr = nvr;
    vi = nvi;
  }
  return {{vr, vi}, {dr, di}};
}

TruncatedSeries derivative(const TruncatedSeries& s) {
  if (s.order() == 0) {
    throw DegenerateInputError("derivative of an order-0 series");
  }
  const auto c = s.coeffs();
  std::vector<Complex> d(s.order());
  for (std::size_t m = 0; m < d.size(); ++m) {
    d[m] = static_cast<double>(m + 1) * c[m + 1];
  }
  return TruncatedSeries(std::move(d));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  std::vector<Complex> out(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    Complex acc{};
    for (std::size_t j = 0; j <= m; ++j) {
      acc += ca[j] * cb[m - j];
    }
    out[m] = acc;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  const auto cb = b.coeffs();
  if (cb[0] == Complex{}) {
    throw DegenerateInputError("series division needs a nonzero constant term in the divisor");
  }
  const std::size_t order = std::min(a.order(), b.order());
  const auto ca = a.coeffs();
  std::vector<Complex> q(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    Complex acc = ca[m];
    for (std::size_t j = 1; j <= m; ++j) {
      acc -= cb[j] * q[m - j];
    }
    q[m] = acc / cb[0];
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries times_z(const TruncatedSeries& s) {
  const auto c = s.coeffs();
  std::vector<Complex> out(c.size() + 1);
  std::copy(c.begin(), c.end(), out.begin() + 1);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries deflate(const TruncatedSeries& s) {
  const auto c = s.coeffs();
  if (c[0] != Complex{}) {
    throw DegenerateInputError("deflate needs a zero constant term");
  }
  if (s.order() == 0) {
    return TruncatedSeries();
  }
  return TruncatedSeries(std::vector<Complex>(c.begin() + 1, c.end()));
}

namespace {

template <typename Op>
TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, Op op) {
  const std::size_t order = std::max(a.order(), b.order());
  std::vector<Complex> out(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    const Complex x = m <= a.order() ? a[m] : Complex{};
    const Complex y = m <= b.order() ? b[m] : Complex{};
    out[m] = op(x, y);
  }
  return TruncatedSeries(std::move(out));
}

void check_section_index(const TruncatedSeries& s, std::size_t n) {
  if (n == 0) {
    throw DomainError("section index must be positive");
  }
  if (n > s.order()) {
    throw InsufficientOrderError("section index " + std::to_string(n) +
                                 " exceeds series order " + std::to_string(s.order()));
  }
}

}  // namespace

// Sums are only meaningful where both operands are known; the shorter operand
// is padded with zeros, which is exact for polynomials.
TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return combine(a, b, [](Complex x, Complex y) { return x + y; });
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return combine(a, b, [](Complex x, Complex y) { return x - y; });
}

TruncatedSeries operator*(Complex k, const TruncatedSeries& s) {
  std::vector<Complex> out(s.coeffs().begin(), s.coeffs().end());
  for (auto& c : out) {
    c *= k;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries section(const TruncatedSeries& s, std::size_t n) {
  check_section_index(s, n);
  const auto c = s.coeffs();
  return TruncatedSeries(std::vector<Complex>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n) + 1));
}

TruncatedSeries tail(const TruncatedSeries& s, std::size_t n) {
  check_section_index(s, n);
  std::vector<Complex> out(s.coeffs().begin(), s.coeffs().end());
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(n) + 1, Complex{});
  return TruncatedSeries(std::move(out));
}

}  // namespace sections
