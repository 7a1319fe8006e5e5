#include "rhosym/random.hpp"

#include <cmath>

namespace rhosym {
namespace {

Scalar gaussian(Rng& rng, Field field) {
  std::normal_distribution<double> normal(0.0, 1.0);
  if (field == Field::real) return normal(rng);
  const double re = normal(rng);
  const double im = normal(rng);
  return Scalar(re, im) / std::sqrt(2.0);
}

Vector gaussian_vector(Rng& rng, std::size_t n, Field field) {
  Vector v(n);
  for (auto& e : v) e = gaussian(rng, field);
  return v;
}

}  // namespace

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, Field field) {
  std::vector<Scalar> entries(rows * cols);
  for (auto& e : entries) e = gaussian(rng, field);
  return Matrix(rows, cols, std::move(entries), field);
}

Matrix random_hermitian(Rng& rng, std::size_t n, Field field) {
  return random_matrix(rng, n, n, field).hermitian_part();
}

Matrix random_unitary(Rng& rng, std::size_t n, Field field) {
  // Q = H_1 ⋯ H_n D with H_k the reflection zeroing column k below the
  // diagonal of a Gaussian matrix; the phase matrix D makes Q Haar.
  Matrix q = Matrix::identity(n, field);
  for (std::size_t k = 0; k < n; ++k) {
    Vector x = gaussian_vector(rng, n - k, field);
    const double nx = norm2(x);
    if (nx == 0.0) continue;
    const Scalar phase = std::abs(x[0]) == 0.0 ? Scalar(1.0) : x[0] / std::abs(x[0]);
    Vector v = x;
    v[0] += phase * nx;
    const double nv = norm2(v);
    for (auto& e : v) e /= nv;
    // q ← q · (I − 2vv*) · diag(−conj(phase)) on trailing block
    for (std::size_t r = 0; r < n; ++r) {
      Scalar s = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) s += q(r, k + i) * v[i];
      for (std::size_t i = 0; i < v.size(); ++i) q(r, k + i) -= 2.0 * s * std::conj(v[i]);
      q(r, k) *= -std::conj(phase);
    }
  }
  if (field == Field::real) q.settle_field();
  return q;
}

Vector random_unit_vector(Rng& rng, std::size_t n, Field field) {
  for (;;) {
    Vector v = gaussian_vector(rng, n, field);
    const double nv = norm2(v);
    if (nv > 1e-300) {
      for (auto& e : v) e /= nv;
      return v;
    }
  }
}

Vector random_unit_vector_in(Rng& rng, const Matrix& basis) {
  const Vector c = random_unit_vector(rng, basis.cols(), basis.field());
  return basis * c;
}

}  // namespace rhosym
