#include "doctest.h"

#include "sections/errors.hpp"
#include "sections/zoo.hpp"

#include <cmath>
#include <numbers>

using namespace sections;

TEST_CASE("canonical coefficients") {
  const auto k = koebe(10);
  const auto h = half_plane(10);
  const auto f = f0(10);
  const auto c = cube_kernel(10);
  CHECK(k.is_normalized());
  CHECK(h.is_normalized());
  CHECK(f.is_normalized());
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(k[n] == Complex(static_cast<double>(n), 0.0));
    CHECK(h[n] == Complex(1.0, 0.0));
    CHECK(f[n] == Complex((n + 1.0) / 2.0, 0.0));
  }
  for (std::size_t m = 0; m <= 10; ++m) {
    CHECK(c[m] == Complex((m + 1.0) * (m + 2.0) / 2.0, 0.0));
  }
  const Complex z{0.2, -0.1};
  CHECK(std::abs(evaluate(f0(200), z) - (z - z * z / 2.0) / ((1.0 - z) * (1.0 - z))) < 1e-14);
  CHECK_THROWS_AS(koebe(0), DomainError);
}

TEST_CASE("Herglotz spec validation") {
  HerglotzSpec s;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s.atoms = {{0.5, {1.0, 0.0}}, {0.4, {0.0, 1.0}}};
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s.atoms = {{0.5, {1.0, 0.0}}, {0.5, {0.0, 1.1}}};
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s.atoms = {{1.5, {1.0, 0.0}}, {-0.5, {0.0, 1.0}}};
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s.atoms = {{0.5, {1.0, 0.0}}, {0.5, {0.0, 1.0}}};
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("Caratheodory coefficients") {
  const auto s = sample_spec(3, 42);
  const auto p = s.caratheodory_coefficients(12);
  CHECK(p[0] == Complex(1.0, 0.0));
  for (std::size_t j = 1; j <= 12; ++j) {
    CHECK(std::abs(p[j]) <= 2.0 + 1e-12);
  }
  // series against the Mobius-kernel closed form
  const Complex z{0.1, 0.15};
  Complex sum{};
  Complex zj{1.0, 0.0};
  const auto q = s.caratheodory_coefficients(80);
  for (const auto& c : q) {
    sum += c * zj;
    zj *= z;
  }
  CHECK(std::abs(sum - s.evaluate(z)) < 1e-13);
  CHECK(s.evaluate(z).real() > 0.0);

  const auto u = HerglotzSpec::uniform(7).caratheodory_coefficients(7);
  for (std::size_t j = 1; j < 7; ++j) {
    CHECK(std::abs(u[j]) < 1e-12);
  }
  CHECK(std::abs(u[7] - Complex(2.0, 0.0)) < 1e-12);
}

TEST_CASE("synthesis reproduces the extremal and its own defining quotient") {
  const auto f = synthesize_F(HerglotzSpec::single({1.0, 0.0}), 30);
  const auto ref = f0(30);
  for (std::size_t n = 0; n <= 30; ++n) {
    CHECK(std::abs(f[n] - ref[n]) < 1e-12 * (n + 1));
  }

  const auto spec = sample_spec(4, 9);
  const std::size_t order = 40;
  const auto g = synthesize_F(spec, order);
  CHECK(g.is_normalized());
  const auto d1 = derivative(g);
  const auto q = divide(times_z(derivative(d1)), d1);  // z g''/g'
  const auto p = spec.caratheodory_coefficients(order);
  for (std::size_t j = 1; j < q.order(); ++j) {
    CHECK(std::abs(2.0 / 3.0 * q[j] - p[j]) < 1e-10);
  }
  for (std::size_t n = 2; n <= order; ++n) {
    CHECK(std::abs(g[n]) <= (n + 1.0) / 2.0 + 1e-9);
  }
}

TEST_CASE("synthesized members satisfy the class condition inside the disk") {
  const auto g = synthesize_F(sample_spec(3, 77), 128);
  const auto d1 = derivative(g);
  const auto d2 = derivative(d1);
  for (int k = 0; k < 64; ++k) {
    const Complex z = std::polar(0.6, 2.0 * std::numbers::pi * k / 64.0);
    const Complex w = 1.0 + z * evaluate(d2, z) / evaluate(d1, z);
    CHECK(w.real() > -0.5);
  }
}

TEST_CASE("rotation covariance") {
  const Complex mu = std::polar(1.0, 0.9);
  auto spec = sample_spec(2, 5);
  const auto f = synthesize_F(spec, 24);
  for (auto& a : spec.atoms) {
    a.point *= mu;
  }
  const auto rotated = synthesize_F(spec, 24);
  const auto direct = rotation(f, mu);
  for (std::size_t n = 0; n <= 24; ++n) {
    CHECK(std::abs(rotated[n] - direct[n]) < 1e-10 * (n + 1));
  }
  const Complex z{0.3, 0.2};
  CHECK(std::abs(evaluate(direct, z) - std::conj(mu) * evaluate(f, mu * z)) < 1e-13);
  CHECK_THROWS_AS(rotation(f, {1.1, 0.0}), ValidationError);
}

TEST_CASE("seeded sampling") {
  const auto a = sample_specs(5, 3, 123);
  const auto b = sample_specs(5, 3, 123);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK_NOTHROW(a[i].validate());
    CHECK(a[i].atoms.size() == 3);
    REQUIRE(a[i].seed.has_value());
    CHECK(*a[i].seed == derive_spec_seed(123, i));
    CHECK(*a[i].seed < (std::uint64_t{1} << 53));
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(a[i].atoms[k].weight == b[i].atoms[k].weight);
      CHECK(a[i].atoms[k].point == b[i].atoms[k].point);
    }
  }
  CHECK(derive_spec_seed(123, 0) != derive_spec_seed(124, 0));
  CHECK_THROWS_AS(sample_specs(0, 3, 1), DomainError);
  CHECK_THROWS_AS(sample_spec(0, 1), DomainError);
}
