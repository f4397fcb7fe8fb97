#pragma once

// Closed-form coefficient, derivative and tail estimates for the class F.

namespace sections {

struct TailBoundInput {
  int n = 1;       // section index, >= 1
  double r = 0.0;  // radius in (0, 1)

  /// Throws DomainError when n < 1 or r is outside (0, 1).
  void validate() const;
};

struct DerivEnvelope {
  double lower = 1.0;
  double upper = 1.0;
};

/// Sharp coefficient bound |a_n| <= (n+1)/2, n >= 2.
double coeff_bound(int n);

/// 1/(1+r)^3 <= |f'(z)| <= 1/(1-r)^3 on |z| = r, 0 <= r < 1.
DerivEnvelope deriv_envelope(double r);

/// Upper bound on |sigma_n'(z)| for |z| = r, sigma_n the tail after the n-th section:
/// [n(n+1) r^{n+2} - 2n(n+2) r^{n+1} + (n+1)(n+2) r^n] / (2 (1-r)^3).
double tail_derivative_bound(int n, double r);
double tail_derivative_bound(const TailBoundInput& in);

/// The r = 1/3 specialization with its sign flipped: -(2n^2 + 8n + 9) / (8 * 3^{n-1}).
double k_tail(int n);

}  // namespace sections
