#include "doctest.h"

#include "sections/errors.hpp"
#include "sections/series.hpp"

#include <cmath>
#include <random>

using namespace sections;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(order + 1);
  for (auto& x : c) {
    x = {u(rng), u(rng)};
  }
  return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("construction and accessors") {
  CHECK_THROWS_AS(TruncatedSeries(std::vector<Complex>{}), ValidationError);
  const auto id = TruncatedSeries::identity(5);
  CHECK(id.order() == 5);
  CHECK(id.is_normalized());
  CHECK(id[1] == Complex{1.0, 0.0});
  CHECK_THROWS(id[6]);
  CHECK_FALSE(TruncatedSeries::constant({2.0, 0.0}, 3).is_normalized());
  CHECK(TruncatedSeries::zero(4).coeffs().size() == 5);
}

TEST_CASE("evaluate matches direct power sum") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto s = random_series(rng, 9);
    const Complex z{0.3, -0.45};
    Complex direct{};
    Complex zk{1.0, 0.0};
    for (std::size_t m = 0; m <= s.order(); ++m) {
      direct += s[m] * zk;
      zk *= z;
    }
    CHECK(std::abs(evaluate(s, z) - direct) < 1e-14);
  }
}

TEST_CASE("derivative agrees with central differences") {
  std::mt19937_64 rng(2);
  const auto s = random_series(rng, 12);
  const auto d = derivative(s);
  CHECK(d.order() == 11);
  const Complex z{0.2, 0.35};
  const double h = 1e-6;
  const Complex fd = (evaluate(s, z + h) - evaluate(s, z - h)) / (2.0 * h);
  CHECK(std::abs(evaluate(d, z) - fd) < 1e-8);
  const auto vs = evaluate_with_derivative(s, z);
  CHECK(std::abs(vs.value - evaluate(s, z)) < 1e-14);
  CHECK(std::abs(vs.slope - evaluate(d, z)) < 1e-13);
  CHECK_THROWS_AS(derivative(TruncatedSeries::constant({1.0, 0.0})), DegenerateInputError);
}

TEST_CASE("linearity of evaluation") {
  std::mt19937_64 rng(3);
  const auto a = random_series(rng, 7);
  const auto b = random_series(rng, 4);
  const Complex k{0.7, -1.1};
  const Complex z{-0.5, 0.25};
  CHECK(std::abs(evaluate(a + b, z) - (evaluate(a, z) + evaluate(b, z))) < 1e-14);
  CHECK(std::abs(evaluate(a - b, z) - (evaluate(a, z) - evaluate(b, z))) < 1e-14);
  CHECK(std::abs(evaluate(k * a, z) - k * evaluate(a, z)) < 1e-14);
  CHECK((a + b).order() == 7);
}

TEST_CASE("multiply and divide") {
  std::mt19937_64 rng(4);
  const auto a = random_series(rng, 6);
  const auto b = random_series(rng, 6);
  const auto p = multiply(a, b);
  CHECK(p.order() == 6);
  for (std::size_t m = 0; m <= 6; ++m) {
    Complex c{};
    for (std::size_t j = 0; j <= m; ++j) {
      c += a[j] * b[m - j];
    }
    CHECK(std::abs(p[m] - c) < 1e-14);
  }
  // The dropped terms are O(|z|^7) on a small circle.
  const Complex z{0.01, 0.02};
  CHECK(std::abs(evaluate(p, z) - evaluate(a, z) * evaluate(b, z)) < 1e-10);

  const auto q = divide(p, b);
  for (std::size_t m = 0; m <= 6; ++m) {
    CHECK(std::abs(q[m] - a[m]) < 1e-9);
  }
  CHECK_THROWS_AS(divide(a, TruncatedSeries::identity(6)), DegenerateInputError);
}

TEST_CASE("times_z and deflate are inverse") {
  std::mt19937_64 rng(5);
  const auto a = random_series(rng, 5);
  const auto za = times_z(a);
  CHECK(za.order() == 6);
  CHECK(za[0] == Complex{});
  CHECK(deflate(za) == a);
  CHECK_THROWS(deflate(a));
}

TEST_CASE("section and tail partition the series") {
  std::mt19937_64 rng(6);
  const auto s = random_series(rng, 10);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto sn = section(s, n);
    const auto tn = tail(s, n);
    CHECK(sn.order() == n);
    CHECK(tn.order() == 10);
    CHECK((sn + tn) == s);
  }
  CHECK_THROWS_AS(section(s, 0), DomainError);
  CHECK_THROWS_AS(section(s, 11), InsufficientOrderError);
}
