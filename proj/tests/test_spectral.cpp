#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include <rhosym/error.hpp>
#include <rhosym/random.hpp>
#include <rhosym/spectral.hpp>

#include "oracles.hpp"

using namespace rhosym;

TEST_SUITE("spectral") {

TEST_CASE("attainment subspace of diag(1,1,1/2)") {
  const auto h = norm_attainment_subspace(Matrix::diagonal({1.0, 1.0, 0.5}));
  CHECK(h.dim() == 2);
  CHECK(h.sigma_max == doctest::Approx(1.0));
  CHECK_FALSE(h.full_space);
  for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(h.basis(2, j)) <= 1e-14);
}

TEST_CASE("isometries attain their norm everywhere") {
  Rng rng(21);
  const auto h = norm_attainment_subspace(random_unitary(rng, 4, Field::complex) * Scalar(2.0));
  CHECK(h.full_space);
  CHECK(h.dim() == 4);
  CHECK(h.sigma_max == doctest::Approx(2.0));
}

TEST_CASE("distinct singular values give the top singular vector") {
  Rng rng(22);
  const Matrix t = random_matrix(rng, 4, 4, Field::real);
  const auto h = norm_attainment_subspace(t);
  REQUIRE(h.dim() == 1);
  const double attained = norm2(t * h.basis.column(0));
  double sampled = 0.0;
  for (int k = 0; k < 100000; ++k) sampled = std::max(sampled, norm2(t * random_unit_vector(rng, 4, Field::real)));
  CHECK(attained >= sampled);
  CHECK(attained == doctest::Approx(oracle::norm(t)).epsilon(1e-12));
}

TEST_CASE("zero operator has no attainment set") {
  try {
    (void)norm_attainment_subspace(Matrix::zeros(3, 3));
    FAIL("expected ZeroOperator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::zero_operator);
  }
}

TEST_CASE("numerical range of diag(1,-1) is the segment [-1,1]") {
  const auto r = numerical_range(Matrix::diagonal({1.0, -1.0}), 64);
  for (const Scalar& z : r.boundary_points) {
    CHECK(std::abs(z.imag()) <= 1e-14);
    CHECK(std::abs(z.real()) <= 1.0 + 1e-14);
  }
  const auto e = real_extent(r);
  CHECK(e.lo == doctest::Approx(-1.0));
  CHECK(e.hi == doctest::Approx(1.0));
}

TEST_CASE("numerical range of the identity is the point 1") {
  const auto r = numerical_range(Matrix::identity(3), 32);
  for (const Scalar& z : r.boundary_points) CHECK(std::abs(z - Scalar(1.0)) <= 1e-14);
}

TEST_CASE("nilpotent [[0,2],[0,0]] has the unit disc as numerical range") {
  const Matrix a = Matrix::from_rows({{0.0, 2.0}, {0.0, 0.0}});
  const auto r = numerical_range(a, 256);
  double radius = 0.0;
  for (const Scalar& z : r.boundary_points) radius = std::max(radius, std::abs(z));
  CHECK(radius == doctest::Approx(1.0).epsilon(1e-6));
  Rng rng(23);
  const double sampled = oracle::sampled_numerical_radius(a, rng, 100000);
  CHECK(sampled <= radius + 1e-12);
  CHECK(sampled >= radius - 1e-2);
}

TEST_CASE("sample counts are even and at least eight") {
  CHECK(numerical_range(Matrix::identity(2), 9).size() == 10);
  CHECK_THROWS_AS((void)numerical_range(Matrix::identity(2), 4), Error);
  const auto r = numerical_range(Matrix::identity(2), 16);
  CHECK(r.thetas[8] == doctest::Approx(std::numbers::pi));
  CHECK(grid_phase(4, 16) == Scalar(0.0, 1.0));
  CHECK(grid_phase(8, 16) == Scalar(-1.0, 0.0));
}

TEST_CASE("maximal numerical range with a singleton attainment set") {
  const Matrix t = Matrix::diagonal({1.0, 0.5});
  const auto r = maximal_numerical_range(t, Matrix::diagonal({2.0, 0.0}));
  CHECK(r.kind == RangeKind::maximal_numerical_range);
  for (const Scalar& z : r.boundary_points) CHECK(std::abs(z - Scalar(2.0)) <= 1e-12);
  const auto grid = oracle::angle_grid_rho_extent(t, Matrix::diagonal({2.0, 0.0}));
  CHECK(grid.lo == doctest::Approx(2.0));
  CHECK(grid.hi == doctest::Approx(2.0));

  const Matrix nil = Matrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  const auto z = maximal_numerical_range(t, nil);
  for (const Scalar& p : z.boundary_points) CHECK(std::abs(p) <= 1e-14);
  const auto zg = oracle::angle_grid_rho_extent(t, nil);
  CHECK(std::abs(zg.lo) <= 1e-12);
  CHECK(std::abs(zg.hi) <= 1e-12);
}

TEST_CASE("for T = I the maximal range is W(A*)") {
  Rng rng(24);
  const Matrix a = random_matrix(rng, 3, 3, Field::complex);
  const auto w = numerical_range(a.adjoint(), 128);
  const auto m = maximal_numerical_range(Matrix::identity(3), a, {}, 128);
  for (std::size_t k = 0; k < w.size(); ++k) CHECK(m.support_values[k] == doctest::Approx(w.support_values[k]));
  const auto wa = numerical_range(a, 128);
  // W(A*) is the mirror image of W(A) in the real axis.
  CHECK(real_extent(wa).lo == doctest::Approx(real_extent(m).lo));
  CHECK(real_extent(wa).hi == doctest::Approx(real_extent(m).hi));
}

TEST_CASE("real extent of a segment and a point") {
  const auto seg = real_extent(numerical_range(Matrix::diagonal({-1.0, 1.0}), 16));
  CHECK(seg.lo == doctest::Approx(-1.0));
  CHECK(seg.hi == doctest::Approx(1.0));
  const auto pt = real_extent(numerical_range(Matrix::identity(2) * Scalar(2.0), 16));
  CHECK(pt.lo == doctest::Approx(2.0));
  CHECK(pt.hi == doctest::Approx(2.0));
}

TEST_CASE("real extent matches sampling over the unit sphere") {
  Rng rng(25);
  for (int rep = 0; rep < 5; ++rep) {
    const Matrix a = random_matrix(rng, 3, 3, Field::complex);
    const auto e = real_extent(numerical_range(a));
    const auto s = oracle::sampled_numerical_range_extent(a, rng, 100000);
    CHECK(s.lo >= e.lo - 1e-12);
    CHECK(s.hi <= e.hi + 1e-12);
    CHECK(std::abs(s.lo - e.lo) <= 1e-2 * oracle::norm(a));
    CHECK(std::abs(s.hi - e.hi) <= 1e-2 * oracle::norm(a));
  }
}

TEST_CASE("hermitian extent agrees with the full sweep") {
  Rng rng(26);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix k = random_matrix(rng, 4, 4, Field::complex);
    const auto fast = hermitian_extent(k);
    const auto slow = real_extent(numerical_range(k));
    CHECK(fast.lo == doctest::Approx(slow.lo).epsilon(1e-12));
    CHECK(fast.hi == doctest::Approx(slow.hi).epsilon(1e-12));
  }
}

TEST_CASE("projection onto the line through e^{iθ}") {
  const Scalar p = project_theta(Scalar(1.0, 1.0), std::numbers::pi / 2);
  CHECK(std::abs(p - Scalar(0.0, 1.0)) <= 1e-15);
  CHECK(project_theta(Scalar(3.0, -4.0), 0.0) == Scalar(3.0, 0.0));
  const double theta = 0.83;
  const Scalar on_line = std::polar(2.5, theta);
  CHECK(std::abs(project_theta(on_line, theta) - on_line) <= 1e-15);
  const Scalar once = project_theta(Scalar(-0.4, 1.7), theta);
  CHECK(std::abs(project_theta(once, theta) - once) <= 1e-15);
}

TEST_CASE("extent symmetry decisions") {
  CHECK(is_extent_symmetric({-1.0, 1.0}, 1.0));
  CHECK_FALSE(is_extent_symmetric({0.0, 1.0}, 1.0));
  CHECK(is_extent_symmetric({-2.0 + 1e-12, 2.0}, 4.0));
}

TEST_CASE("csv export has the documented header and one row per sample") {
  std::ostringstream out;
  write_csv(numerical_range(Matrix::diagonal({1.0, -1.0}), 8), out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,re,im,support");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 8);
}

}  // TEST_SUITE
