#include <doctest.h>

#include <cmath>
#include <numbers>

#include <rhosym/error.hpp>
#include <rhosym/random.hpp>
#include <rhosym/spectral.hpp>
#include <rhosym/symmetry.hpp>

#include "oracles.hpp"

using namespace rhosym;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Matrix rotation(double phi) {
  return Matrix::from_rows({{std::cos(phi), -std::sin(phi)}, {std::sin(phi), std::cos(phi)}});
}

// Real extent of W_T(A*T), computed with Eigen from scratch.
oracle::Extent eigen_extent(const Matrix& t, const Matrix& a) {
  const oracle::EMatrix b = oracle::to_eigen(oracle::top_right_singular_basis(t));
  const oracle::EMatrix k = b.adjoint() * oracle::to_eigen(a).adjoint() * oracle::to_eigen(t) * b;
  const oracle::EMatrix h = (k + k.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<oracle::EMatrix> eig(h);
  oracle::Extent e;
  e.add(eig.eigenvalues().minCoeff());
  e.add(eig.eigenvalues().maxCoeff());
  return e;
}

bool oracle_orthogonal(const Matrix& t, const Matrix& a) {
  const auto e = eigen_extent(t, a);
  return std::abs(e.lo + e.hi) <= 1e-8 * oracle::norm(t) * oracle::norm(a);
}

// Checks a witness against the Eigen oracle, independently of `verified`.
void check_witness(const WitnessResult& w) {
  CHECK(w.verified);
  CHECK(w.forward_verdict.rho_orthogonal);
  CHECK_FALSE(w.reverse_verdict.rho_orthogonal);
  const Matrix& t = w.op;
  const Matrix& a = w.witness;
  if (w.direction == WitnessDirection::left) {
    CHECK(oracle_orthogonal(t, a));
    CHECK_FALSE(oracle_orthogonal(a, t));
  } else {
    CHECK(oracle_orthogonal(a, t));
    CHECK_FALSE(oracle_orthogonal(t, a));
  }
}

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("left witness for the identity on C^3") {
  const auto w = left_witness(Matrix::identity(3));
  REQUIRE(w.has_value());
  CHECK(w->construction_tag == "left-isometry-case-I");
  check_witness(*w);
  const auto fwd = real_extent(maximal_numerical_range(w->op, w->witness));
  CHECK(fwd.lo == doctest::Approx(-kInvSqrt2).epsilon(1e-6));
  CHECK(fwd.hi == doctest::Approx(kInvSqrt2).epsilon(1e-6));
  const auto on_ma = real_extent(maximal_numerical_range(w->witness, w->op));
  CHECK(on_ma.lo == doctest::Approx(kInvSqrt2).epsilon(1e-6));
  CHECK(on_ma.hi == doctest::Approx(kInvSqrt2).epsilon(1e-6));
}

TEST_CASE("left witness for scaled unitaries uses the isometry construction") {
  Rng rng(51);
  for (std::size_t n : {3u, 4u, 5u}) {
    for (Field field : {Field::real, Field::complex}) {
      const Scalar c = field == Field::real ? Scalar(-1.7) : Scalar(0.4, 1.1);
      const Matrix t = random_unitary(rng, n, field) * c;
      const auto w = left_witness(t);
      REQUIRE(w.has_value());
      CHECK(w->construction_tag == "left-isometry-case-I");
      check_witness(*w);
      const auto e = eigen_extent(t, w->witness);
      const double c2 = std::norm(c);
      CHECK(e.lo == doctest::Approx(-kInvSqrt2 * c2).epsilon(1e-6));
      CHECK(e.hi == doctest::Approx(kInvSqrt2 * c2).epsilon(1e-6));
    }
  }
}

TEST_CASE("left witness when T kills the complement of its attainment space") {
  const Matrix t = Matrix::diagonal({1.0, 1.0, 0.0});
  const auto w = left_witness(t);
  REQUIRE(w.has_value());
  check_witness(*w);
}

TEST_CASE("plane rotations are symmetric on both sides") {
  for (double phi : {0.0, 0.7, 2.1}) {
    const Matrix t = rotation(phi) * Scalar(1.3);
    CHECK_FALSE(left_witness(t).has_value());
    CHECK_FALSE(right_witness(t).has_value());
  }
  CHECK_FALSE(left_witness(Matrix::zeros(3, 3)).has_value());
}

TEST_CASE("right witness for diag(1,1,1/2)") {
  const Matrix d = Matrix::diagonal({1.0, 1.0, 0.5});
  const auto w = right_witness(d);
  REQUIRE(w.has_value());
  CHECK(w->construction_tag == "lemma-diagonal-case-I");
  check_witness(*w);
  const auto rev = eigen_extent(d, w->witness);
  CHECK(std::abs(rev.lo) <= 1e-9);
  CHECK(rev.hi == doctest::Approx(0.5 * kInvSqrt2).epsilon(1e-9));
  const auto fwd = eigen_extent(w->witness, d);
  CHECK(std::abs(fwd.lo) <= 1e-12);
  CHECK(std::abs(fwd.hi) <= 1e-12);
}

TEST_CASE("right witness for the identity on C^3") {
  const auto w = right_witness(Matrix::identity(3));
  REQUIRE(w.has_value());
  check_witness(*w);
  // Re⟨Tz, Az⟩ is nonnegative on the sphere and positive somewhere.
  const auto e = eigen_extent(Matrix::identity(3), w->witness);
  CHECK(e.lo >= -1e-12);
  CHECK(e.hi > 1e-3);
}

TEST_CASE("diagonal witness in the purely imaginary-ratio case") {
  const std::vector<Scalar> lambdas{Scalar(1.0), Scalar(0.0, 1.0), Scalar(0.0, 0.5)};
  const auto w = diagonal_right_witness(lambdas);
  REQUIRE(w.has_value());
  check_witness(*w);
}

TEST_CASE("right witness verdicts survive unitary conjugation") {
  Rng rng(52);
  for (int rep = 0; rep < 5; ++rep) {
    const Matrix t = random_matrix(rng, 4, 4, Field::complex);
    const Matrix u = random_unitary(rng, 4, Field::complex);
    const auto w1 = right_witness(t);
    const auto w2 = right_witness(u.adjoint() * t * u);
    REQUIRE(w1.has_value());
    REQUIRE(w2.has_value());
    CHECK(w1->forward_verdict.rho_orthogonal == w2->forward_verdict.rho_orthogonal);
    CHECK(w1->reverse_verdict.rho_orthogonal == w2->reverse_verdict.rho_orthogonal);
  }
}

TEST_CASE("random real 2x2 non-isometries have witnesses on both sides") {
  Rng rng(53);
  for (int rep = 0; rep < 50; ++rep) {
    const Matrix t = random_matrix(rng, 2, 2, Field::real);
    const auto left = left_witness(t);
    const auto right = right_witness(t);
    REQUIRE(left.has_value());
    REQUIRE(right.has_value());
    check_witness(*left);
    check_witness(*right);
  }
}

TEST_CASE("random operators in dimension three and up have witnesses") {
  Rng rng(54);
  for (std::size_t n = 3; n <= 6; ++n) {
    for (Field field : {Field::real, Field::complex}) {
      for (int rep = 0; rep < 3; ++rep) {
        const Matrix t = random_matrix(rng, n, n, field);
        const auto left = left_witness(t);
        const auto right = right_witness(t);
        REQUIRE(left.has_value());
        REQUIRE(right.has_value());
        check_witness(*left);
        check_witness(*right);
      }
    }
  }
}

TEST_CASE("left probe") {
  ProbeOptions opts;
  opts.trials = 200;
  opts.seed = 3;
  CHECK(probe_left_symmetry(rotation(0.9), opts).failures == 0);

  ProbeOptions self_adjoint = opts;
  self_adjoint.partner = PartnerKind::self_adjoint;
  CHECK(probe_left_symmetry(Matrix::identity(2), self_adjoint).failures == 0);

  const auto found = probe_left_symmetry(Matrix::diagonal({1.0, 0.5}), opts);
  CHECK(found.failures >= 1);
  REQUIRE(found.first_counterexample.has_value());
  const Matrix t = Matrix::diagonal({1.0, 0.5});
  CHECK(oracle_orthogonal(t, *found.first_counterexample));
  CHECK_FALSE(oracle_orthogonal(*found.first_counterexample, t));
}

TEST_CASE("right probe") {
  ProbeOptions opts;
  opts.trials = 200;
  CHECK(probe_right_symmetry(rotation(0.3), opts).failures == 0);

  ProbeOptions injected = opts;
  injected.trials = 20;
  injected.injected.push_back(right_witness(Matrix::identity(3))->witness);
  CHECK(probe_right_symmetry(Matrix::identity(3), injected).failures >= 1);

  CHECK(probe_right_symmetry(Matrix::diagonal({1.0, 0.5, 0.0}), opts).failures >= 1);
}

TEST_CASE("probes are deterministic in the seed") {
  ProbeOptions opts;
  opts.trials = 50;
  opts.seed = 99;
  const Matrix t = Matrix::diagonal({1.0, 0.5});
  const auto a = probe_left_symmetry(t, opts);
  const auto b = probe_left_symmetry(t, opts);
  CHECK(a.failures == b.failures);
  CHECK(a.first_counterexample == b.first_counterexample);
}

TEST_CASE("right partner shift lands on a rho-orthogonal partner") {
  Rng rng(55);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix t = random_matrix(rng, 3, 3, Field::complex);
    const Matrix a = right_partner_shift(t, random_matrix(rng, 3, 3, Field::complex));
    CHECK(oracle_orthogonal(a, t));
  }
}

TEST_CASE("numerical range symmetry against orthogonality to rotated identities") {
  const auto sym = w_symmetry_equivalence(Matrix::diagonal({1.0, -1.0}));
  CHECK(sym.w_symmetric);
  CHECK(sym.all_theta_orthogonal);

  Rng rng(56);
  const Matrix b = random_matrix(rng, 2, 2, Field::complex);
  Matrix block = Matrix::zeros(4, 4, Field::complex);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      block(i, j) = b(i, j);
      block(i + 2, j + 2) = -b(i, j);
    }
  }
  const auto blk = w_symmetry_equivalence(block);
  CHECK(blk.w_symmetric);
  CHECK(blk.all_theta_orthogonal);

  const auto asym = w_symmetry_equivalence(Matrix::diagonal({1.0, -2.0}));
  CHECK_FALSE(asym.w_symmetric);
  CHECK_FALSE(asym.all_theta_orthogonal);
  REQUIRE(asym.first_failing_theta.has_value());
  CHECK(*asym.first_failing_theta == 0.0);
}

TEST_CASE("identity membership in S") {
  CHECK(identity_membership_in_S(Matrix::diagonal({1.0, -1.0})));
  Rng rng(57);
  for (int rep = 0; rep < 50; ++rep) CHECK(identity_membership_in_S(random_matrix(rng, 2, 2, Field::real)));
  // The right witness for I₃ satisfies A ⊥_ρ I but not I ⊥_ρ A.
  CHECK_FALSE(identity_membership_in_S(right_witness(Matrix::identity(3))->witness));
}

TEST_CASE("diagonal truncation study") {
  const std::vector<std::size_t> sizes{50, 200, 1000, 2000};
  const auto lambda = [](std::size_t k) { return Scalar(1.0 - 1.0 / static_cast<double>(k + 1)); };
  const auto rows = diagonal_truncation_study(lambda, sizes);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].band_value < rows[i - 1].band_value);
  CHECK(rows.back().band_value <= 1e-3);
  for (const auto& r : rows) CHECK(r.reverse_value == 0.25);

  // Direct evaluation: max over the band of λ_k²/k.
  const std::size_t n = 2000;
  const double top = std::pow(1.0 - 1.0 / static_cast<double>(n + 1), 2);
  double expected = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double l = 1.0 - 1.0 / static_cast<double>(k + 1);
    if (l * l >= top - 1e-3) expected = std::max(expected, l * l / static_cast<double>(k));
  }
  CHECK(rows.back().band_value == doctest::Approx(expected).epsilon(1e-14));

  TruncationOptions literal;
  literal.metric = BandMetric::modulus;
  const auto lit = diagonal_truncation_study(lambda, sizes, literal);
  CHECK(lit.back().band_value > 1e-3);

  try {
    (void)diagonal_truncation_study([](std::size_t) { return Scalar(0.5); }, sizes);
    FAIL("expected BadSequence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::bad_sequence);
  }
}

}  // TEST_SUITE
