#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace sections {

using Complex = std::complex<double>;

/// Power series c_0 + c_1 z + ... + c_N z^N with complex coefficients,
/// truncated at order N. Immutable after construction.
class TruncatedSeries {
public:
  /// Order-0 zero series.
  TruncatedSeries();
  /// Takes ownership of c_0..c_N; an empty vector is rejected.
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries constant(Complex value, std::size_t order = 0);
  /// The series z (c_1 = 1) truncated at `order` >= 1.
  static TruncatedSeries identity(std::size_t order = 1);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t m) const { return coeffs_.at(m); }

  /// c_0 == 0 and c_1 == 1 exactly (members of the normalized class A).
  bool is_normalized() const noexcept;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  std::vector<Complex> coeffs_;
};

/// Horner evaluation of the truncated polynomial.
Complex evaluate(const TruncatedSeries& s, Complex z);

/// Value and first derivative in one Horner pass.
struct ValueAndSlope {
  Complex value;
  Complex slope;
};
ValueAndSlope evaluate_with_derivative(const TruncatedSeries& s, Complex z);

/// Term-by-term derivative, order N-1. Throws DegenerateInputError for N = 0.
TruncatedSeries derivative(const TruncatedSeries& s);

/// Cauchy product truncated at min(order_a, order_b).
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Quotient a/b by forward recurrence, truncated at min order; needs b.c_0 != 0.
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplication by z, which is exact: the order grows by one.
TruncatedSeries times_z(const TruncatedSeries& s);

/// Division by z for series with c_0 == 0; the order drops by one.
TruncatedSeries deflate(const TruncatedSeries& s);

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(Complex k, const TruncatedSeries& s);

/// s_n: coefficients 0..n, order n. Throws InsufficientOrderError if n > N.
TruncatedSeries section(const TruncatedSeries& s, std::size_t n);

/// sigma_n = s - s_n, kept at order N with c_0..c_n zeroed.
TruncatedSeries tail(const TruncatedSeries& s, std::size_t n);

}  // namespace sections
