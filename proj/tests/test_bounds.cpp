#include "doctest.h"

#include "oracles.hpp"
#include "sections/bounds.hpp"
#include "sections/errors.hpp"
#include "sections/zoo.hpp"

#include <cmath>
#include <numbers>

using namespace sections;

TEST_CASE("coefficient bound") {
  CHECK(coeff_bound(2) == doctest::Approx(1.5));
  CHECK(coeff_bound(9) == doctest::Approx(5.0));
  CHECK_THROWS_AS(coeff_bound(1), DomainError);
}

TEST_CASE("derivative envelope") {
  const auto e = deriv_envelope(0.5);
  CHECK(e.lower == doctest::Approx(1.0 / 3.375));
  CHECK(e.upper == doctest::Approx(8.0));
  const auto z = deriv_envelope(0.0);
  CHECK(z.lower == 1.0);
  CHECK(z.upper == 1.0);
  CHECK_THROWS_AS(deriv_envelope(1.0), DomainError);
  CHECK_THROWS_AS(deriv_envelope(-0.1), DomainError);
}

TEST_CASE("tail bound closed forms") {
  CHECK(std::abs(tail_derivative_bound(4, 1.0 / 3.0) - 73.0 / 216.0) < 1e-13);
  CHECK(std::abs(k_tail(4) + 73.0 / 216.0) < 1e-13);
  for (int n = 1; n <= 30; ++n) {
    CHECK(std::abs(k_tail(n) + tail_derivative_bound(n, 1.0 / 3.0)) < 1e-13);
  }
  for (int n = 4; n < 60; ++n) {
    CHECK(k_tail(n) < k_tail(n + 1));
  }
  CHECK_THROWS_AS(tail_derivative_bound(0, 0.5), DomainError);
  CHECK_THROWS_AS(tail_derivative_bound(3, 1.0), DomainError);
  CHECK_THROWS_AS((TailBoundInput{2, 0.0}.validate()), DomainError);
}

TEST_CASE("tail bound equals the f0 tail series") {
  for (int n : {1, 2, 4, 7, 15}) {
    for (double r : {0.1, 0.2, 1.0 / 3.0, 0.5, 0.7}) {
      const double expect = oracle::f0_tail_derivative_series(n, r);
      CHECK(std::abs(tail_derivative_bound(n, r) - expect) <= 1e-12 * expect);
    }
  }
}

TEST_CASE("tail bound dominates a sampled member") {
  const auto f = synthesize_F(sample_spec(3, 31), 200);
  for (int n = 2; n <= 10; ++n) {
    const auto sigma = derivative(tail(f, static_cast<std::size_t>(n)));
    for (int k = 0; k < 32; ++k) {
      const Complex z = std::polar(0.4, 2.0 * std::numbers::pi * k / 32.0);
      CHECK(std::abs(evaluate(sigma, z)) <= tail_derivative_bound(n, 0.4) * (1 + 1e-12));
    }
  }
}
