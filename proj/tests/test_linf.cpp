#include <doctest.h>

#include <algorithm>
#include <random>

#include <rhosym/error.hpp>
#include <rhosym/linf.hpp>

#include "oracles.hpp"

using namespace rhosym;

namespace {

// Example A: T(1,1) = (1,1/2), T(1,-1) = (1,-1/2); A(1,1) = (1/2,0), A(1,-1) = (-1,0).
LinfOperator example_a_t() { return LinfOperator::from_rows({{1.0, 0.0}, {0.0, 0.5}}); }
LinfOperator example_a_a() { return LinfOperator::from_rows({{-0.25, 0.75}, {0.0, 0.0}}); }

// Example B: T(1,1) = (1,0), T(-1,1) = (1/2,1); A(1,1) = (1,0), A(-1,1) = (0,-1).
LinfOperator example_b_t() { return LinfOperator::from_rows({{0.25, 0.75}, {-0.5, 0.5}}); }
LinfOperator example_b_a() { return LinfOperator::from_rows({{0.5, 0.5}, {0.5, -0.5}}); }

LinfOperator random_linf(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<double> e(n * n);
  for (double& v : e) v = g(rng);
  return LinfOperator(n, n, e);
}

LinfOperator shifted(const LinfOperator& t, const LinfOperator& a, double c) {
  std::vector<double> e(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= c * t.entries()[i];
  return LinfOperator(a.rows(), a.cols(), e);
}

}  // namespace

TEST_SUITE("linf") {

TEST_CASE("extreme support functionals") {
  using F = SupportFunctional;
  CHECK(ext_support_functionals(LinfVector{1.0, 0.5}) == std::vector<F>{{0, 1}});
  CHECK(ext_support_functionals(LinfVector{1.0, -1.0}) == std::vector<F>{{0, 1}, {1, -1}});
  CHECK(ext_support_functionals(LinfVector{-1.0, -1.0, 0.3}) == std::vector<F>{{0, -1}, {1, -1}});
}

TEST_CASE("vector derivatives") {
  const auto single = rho_pm_linf_vec(LinfVector{1.0, 0.5}, LinfVector{0.5, 7.0});
  CHECK(single.rho_plus == 0.5);
  CHECK(single.rho_minus == 0.5);
  const auto two = rho_pm_linf_vec(LinfVector{1.0, -1.0}, LinfVector{1.0, 1.0});
  CHECK(two.rho_plus == 1.0);
  CHECK(two.rho_minus == -1.0);
  const auto corner = rho_pm_linf_vec(LinfVector{1.0, 1.0}, LinfVector{0.3, -2.0});
  CHECK(corner.rho_plus == 0.3);
  CHECK(corner.rho_minus == -2.0);
}

TEST_CASE("vector derivatives match one-sided differences of the sup norm") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> tie(0, 2);
  for (int rep = 0; rep < 1000; ++rep) {
    LinfVector x(4);
    LinfVector y(4);
    for (auto& v : x) v = g(rng);
    for (auto& v : y) v = g(rng);
    // Force a tie between two maximal coordinates in a third of the cases.
    if (tie(rng) == 0) {
      x[0] = linf_norm(x);
      x[1] = -x[0];
    }
    const auto r = rho_pm_linf_vec(x, y);
    const double scale = linf_norm(x) * linf_norm(y);
    CHECK(std::abs(r.rho_plus - oracle::linf_finite_difference(x, y, 1e-7)) <= 1e-5 * scale);
    CHECK(std::abs(r.rho_minus - oracle::linf_finite_difference(x, y, -1e-7)) <= 1e-5 * scale);
  }
}

TEST_CASE("attainment corners") {
  CHECK(mt_ext(example_a_t()).size() == 4);
  CHECK(mt_ext(LinfOperator::from_rows({{1.0, 0.0}, {0.0, 1.0}})).size() == 4);
  // Every corner of example B is norming, but no face midpoint is.
  CHECK(mt_ext(example_b_t()).size() == 4);
  CHECK(linf_norm(example_b_t().apply(LinfVector{1.0, 0.0})) < 1.0);
  CHECK(linf_norm(example_b_t().apply(LinfVector{0.0, 1.0})) < 1.0);
  CHECK_THROWS_AS((void)mt_ext(LinfOperator(2, 2, {0.0, 0.0, 0.0, 0.0})), Error);
}

TEST_CASE("example A is not rho-orthogonal") {
  const auto r = rho_pm_linf_op(example_a_t(), example_a_a());
  CHECK(r.rho_plus == 0.5);
  CHECK(r.rho_minus == -1.0);
  CHECK_FALSE(linf_verdict(example_a_t(), example_a_a()).rho_orthogonal);
  const auto x0 = pointwise_witness_scan(example_a_t(), example_a_a());
  REQUIRE(x0.has_value());
  CHECK((*x0)[0] == 1.0);
  CHECK((*x0)[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(linf_norm(example_a_a().apply(*x0)) <= 1e-12);
}

TEST_CASE("example B is rho-orthogonal but not pointwise at (1,1)") {
  const auto r = rho_pm_linf_op(example_b_t(), example_b_a());
  CHECK(r.rho_plus == 1.0);
  CHECK(r.rho_minus == -1.0);
  CHECK(linf_verdict(example_b_t(), example_b_a()).rho_orthogonal);
  const LinfVector corner{1.0, 1.0};
  CHECK(rho_pm_linf_vec(example_b_t().apply(corner), example_b_a().apply(corner)).rho == 1.0);
  const LinfVector other{-1.0, 1.0};
  CHECK(rho_pm_linf_vec(example_b_t().apply(other), example_b_a().apply(other)).rho == -1.0);
  // M_T meets the square only at its corners, so no face carries a zero.
  CHECK_FALSE(pointwise_witness_scan(example_b_t(), example_b_a()).has_value());
}

TEST_CASE("operators rebuilt from corner images match the examples") {
  const std::vector<LinfVector> pts{{1.0, 1.0}, {1.0, -1.0}};
  const std::vector<LinfVector> imgs{{1.0, 0.5}, {1.0, -0.5}};
  CHECK(LinfOperator::from_extreme_images(pts, imgs) == example_a_t());
  const std::vector<LinfVector> pts_b{{1.0, 1.0}, {-1.0, 1.0}};
  const std::vector<LinfVector> a_imgs{{1.0, 0.0}, {0.0, -1.0}};
  CHECK(LinfOperator::from_extreme_images(pts_b, a_imgs) == example_b_a());
}

TEST_CASE("zero direction and self direction") {
  const LinfOperator zero(2, 2, {0.0, 0.0, 0.0, 0.0});
  const auto r = rho_pm_linf_op(example_a_t(), zero);
  CHECK(r.rho_plus == 0.0);
  CHECK(r.rho_minus == 0.0);
  CHECK_FALSE(pointwise_witness_scan(example_a_t(), example_a_t()).has_value());
}

TEST_CASE("orthogonal pairs have face points of both signs") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 200; ++rep) {
    const LinfOperator t = random_linf(rng, 2);
    const LinfOperator a0 = random_linf(rng, 2);
    const auto r0 = rho_pm_linf_op(t, a0);
    const LinfOperator a = shifted(t, a0, (r0.rho_plus + r0.rho_minus) / (2.0 * t.norm() * t.norm()));
    REQUIRE(linf_verdict(t, a).rho_orthogonal);
    const double tol = 1e-9 * t.norm() * a.norm();
    double hi = -1e300;
    double lo = 1e300;
    for (const auto& c : mt_ext(t)) {
      const auto v = rho_pm_linf_vec(t.apply(c), a.apply(c));
      hi = std::max(hi, v.rho);
      lo = std::min(lo, v.rho);
    }
    CHECK(hi >= -tol);
    CHECK(lo <= tol);
  }
}

TEST_CASE("pointwise orthogonality everywhere on M_T gives operator orthogonality") {
  // T = diag(1, 1/2) attains its norm at every corner; A vanishes on e₁.
  const LinfOperator t = LinfOperator::from_rows({{1.0, 0.0}, {0.0, 0.5}});
  const LinfOperator a = LinfOperator::from_rows({{0.0, 0.0}, {0.0, 3.0}});
  for (const auto& c : mt_ext(t)) CHECK(rho_pm_linf_vec(t.apply(c), a.apply(c)).rho == 0.0);
  CHECK(linf_verdict(t, a).rho_orthogonal);
}

TEST_CASE("face scan only handles the plane") {
  const LinfOperator t(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK_THROWS_AS((void)pointwise_witness_scan(t, t), Error);
}

}  // TEST_SUITE
