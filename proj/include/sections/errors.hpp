#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace sections {

/// Argument outside the mathematical domain of a formula (r >= 1, n < 2, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Input that violates a type invariant (weights, unimodularity, normalization).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Operation needs a higher-order series than the one supplied.
class InsufficientOrderError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Degenerate input such as differentiating a constant-order series.
class DegenerateInputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A quotient criterion hit a denominator of (numerically) zero modulus.
class PoleProximityError : public std::runtime_error {
public:
  explicit PoleProximityError(std::complex<double> z);
  std::complex<double> where() const noexcept { return z_; }

private:
  std::complex<double> z_;
};

/// The argument principle was asked to count zeros on a circle that passes through one.
class ZeroOnCircleError : public std::runtime_error {
public:
  ZeroOnCircleError(double r, double min_modulus);
  double radius() const noexcept { return r_; }
  double min_modulus() const noexcept { return min_modulus_; }

private:
  double r_;
  double min_modulus_;
};

}  // namespace sections
