#pragma once

// Reference computations that share no code with the library's eigen/SVD
// path: Eigen's SVD, brute-force sampling over unit spheres, angle grids,
// and finite differences of the operator norm.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <rhosym/matrix.hpp>
#include <rhosym/random.hpp>

namespace oracle {

using rhosym::Matrix;
using rhosym::Scalar;
using rhosym::Vector;
using EMatrix = Eigen::MatrixXcd;

inline EMatrix to_eigen(const Matrix& m) {
  EMatrix e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  }
  return e;
}

inline double norm(const Matrix& m) {
  if (m.empty()) return 0.0;
  Eigen::JacobiSVD<EMatrix> svd(to_eigen(m));
  return svd.singularValues()(0);
}

inline std::vector<double> singular_values(const Matrix& m) {
  Eigen::JacobiSVD<EMatrix> svd(to_eigen(m));
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

struct Extent {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

/// Orthonormal basis of the top singular subspace, from Eigen.
inline Matrix top_right_singular_basis(const Matrix& t, double rel_gap = 1e-8) {
  Eigen::JacobiSVD<EMatrix> svd(to_eigen(t), Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  std::size_t k = 1;
  while (k < static_cast<std::size_t>(s.size()) && s(k) >= s(0) * (1.0 - rel_gap)) ++k;
  Matrix basis(t.cols(), k, rhosym::Field::complex);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < t.cols(); ++i) basis(i, j) = svd.matrixV()(i, j);
  }
  return basis;
}

/// min/max of Re⟨Tx, Ax⟩ over random unit x in the top singular subspace of T.
inline Extent sampled_rho_extent(const Matrix& t, const Matrix& a, rhosym::Rng& rng, std::size_t draws) {
  const Matrix basis = top_right_singular_basis(t);
  Extent e;
  for (std::size_t k = 0; k < draws; ++k) {
    const Vector x = rhosym::random_unit_vector_in(rng, basis);
    e.add(rhosym::inner(t * x, a * x).real());
  }
  return e;
}

/// min/max of Re⟨Ax, x⟩ over random unit x.
inline Extent sampled_numerical_range_extent(const Matrix& a, rhosym::Rng& rng, std::size_t draws) {
  Extent e;
  for (std::size_t k = 0; k < draws; ++k) {
    const Vector x = rhosym::random_unit_vector(rng, a.cols(), rhosym::Field::complex);
    e.add(rhosym::inner(a * x, x).real());
  }
  return e;
}

/// max |⟨Ax, x⟩| over random unit x.
inline double sampled_numerical_radius(const Matrix& a, rhosym::Rng& rng, std::size_t draws) {
  double r = 0.0;
  for (std::size_t k = 0; k < draws; ++k) {
    const Vector x = rhosym::random_unit_vector(rng, a.cols(), rhosym::Field::complex);
    r = std::max(r, std::abs(rhosym::inner(a * x, x)));
  }
  return r;
}

/// Re⟨Tx, Ax⟩ over x = (cos φ, sin φ) for a real 2×2 pair, restricted to the
/// grid points where ‖Tx‖ is within rel_tol of its grid maximum.
inline Extent angle_grid_rho_extent(const Matrix& t, const Matrix& a, std::size_t steps = 20000,
                                    double rel_tol = 1e-9) {
  std::vector<double> norms(steps);
  std::vector<double> values(steps);
  double best = 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double phi = std::numbers::pi * static_cast<double>(k) / static_cast<double>(steps);
    const Vector x{std::cos(phi), std::sin(phi)};
    const Vector tx = t * x;
    norms[k] = rhosym::norm2(tx);
    values[k] = rhosym::inner(tx, a * x).real();
    best = std::max(best, norms[k]);
  }
  Extent e;
  for (std::size_t k = 0; k < steps; ++k) {
    if (norms[k] >= best * (1.0 - rel_tol)) e.add(values[k]);
  }
  return e;
}

/// ‖T‖(‖T + sA‖ − ‖T‖)/s with Eigen norms; s > 0 estimates ρ'₊, s < 0 ρ'₋.
inline double finite_difference(const Matrix& t, const Matrix& a, double s) {
  const double base = norm(t);
  return base * (norm(t + a * Scalar(s)) - base) / s;
}

/// ‖x + s·y‖∞ one-sided difference quotient times ‖x‖∞.
inline double linf_finite_difference(std::span<const double> x, std::span<const double> y, double s) {
  double nx = 0.0;
  double nxs = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    nx = std::max(nx, std::abs(x[i]));
    nxs = std::max(nxs, std::abs(x[i] + s * y[i]));
  }
  return nx * (nxs - nx) / s;
}

}  // namespace oracle
