#include "sections/bounds.hpp"

#include <cmath>

#include "sections/errors.hpp"

namespace sections {

void TailBoundInput::validate() const {
  if (n < 1) {
    throw DomainError("tail bound needs n >= 1");
  }
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("tail bound needs 0 < r < 1");
  }
}

double coeff_bound(int n) {
  if (n < 2) {
    throw DomainError("coefficient bound is stated for n >= 2");
  }
  return (n + 1) / 2.0;
}

DerivEnvelope deriv_envelope(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("derivative envelope needs 0 <= r < 1");
  }
  const double lo = 1.0 + r;
  const double hi = 1.0 - r;
  return {1.0 / (lo * lo * lo), 1.0 / (hi * hi * hi)};
}

double tail_derivative_bound(const TailBoundInput& in) {
  in.validate();
  const double n = in.n;
  const double r = in.r;
  const double rn = std::pow(r, in.n);
  const double numerator =
      n * (n + 1.0) * rn * r * r - 2.0 * n * (n + 2.0) * rn * r + (n + 1.0) * (n + 2.0) * rn;
  const double q = 1.0 - r;
  return numerator / (2.0 * q * q * q);
}

double tail_derivative_bound(int n, double r) {
  return tail_derivative_bound(TailBoundInput{n, r});
}

double k_tail(int n) {
  if (n < 1) {
    throw DomainError("k(n) needs n >= 1");
  }
  const double x = n;
  return -(2.0 * x * x + 8.0 * x + 9.0) / (8.0 * std::pow(3.0, n - 1));
}

}  // namespace sections
