#include "rhosym/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rhosym/error.hpp"

namespace rhosym {
namespace {

constexpr int kMaxSweeps = 60;
constexpr double kOffDiagonalStop = 1e-14;
constexpr double kSmallSingular = 1e-12;

// Rotates the phase of v so its first coordinate with modulus above `floor`
// becomes real and positive.
void normalize_phase(Vector& v, double floor) {
  for (const auto& c : v) {
    if (std::abs(c) > floor) {
      const Scalar phase = std::conj(c) / std::abs(c);
      for (auto& e : v) e *= phase;
      return;
    }
  }
}

// Gram-Schmidt of `candidate` against `basis` (two passes).
Vector orthogonalize(Vector candidate, std::span<const Vector> basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const Scalar c = inner(candidate, b);
      for (std::size_t i = 0; i < candidate.size(); ++i) candidate[i] -= c * b[i];
    }
  }
  return candidate;
}

// Extends `basis` with standard-basis-derived vectors until it has `target` columns.
void complete_basis(std::vector<Vector>& basis, std::size_t dim, std::size_t target) {
  while (basis.size() < target) {
    Vector best;
    double best_norm = -1.0;
    for (std::size_t k = 0; k < dim; ++k) {
      Vector w = orthogonalize(unit_vector(dim, k), basis);
      const double nw = norm2(w);
      if (nw > best_norm) {
        best_norm = nw;
        best = std::move(w);
      }
    }
    for (auto& e : best) e /= best_norm;
    basis.push_back(std::move(best));
  }
}

}  // namespace

void Tolerances::validate() const {
  for (double t : {resid, orth, unit, attain, ortho_decision}) {
    if (!(t >= 0.0 && t <= 1e-2)) throw Error(ErrorCode::invalid_argument, "tolerance outside [0, 1e-2]");
  }
}

EigenDecomposition hermitian_eig(const Matrix& m, const Tolerances& tol) {
  if (!m.is_square()) throw Error(ErrorCode::shape_mismatch, "hermitian_eig needs a square matrix");
  if (!m.has_only_finite_entries()) throw Error(ErrorCode::invalid_argument, "non-finite entry");
  const std::size_t n = m.rows();
  const double scale = m.frobenius();

  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) asym = std::max(asym, std::abs(m(i, j) - std::conj(m(j, i))));
  }
  if (asym > tol.resid * scale) throw Error(ErrorCode::not_hermitian, "‖M − M*‖ exceeds tolerance");

  Matrix a = m.hermitian_part();
  Matrix v = Matrix::identity(n, m.field());

  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += std::norm(a(i, j));
      }
    }
    return std::sqrt(s);
  };

  bool converged = off_mass() <= kOffDiagonalStop * scale;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Scalar phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = diag(1, conj(phase)) · [[c, s], [-s, c]] on the (p, q) plane.
        const Scalar gpp = c;
        const Scalar gpq = s;
        const Scalar gqp = -s * std::conj(phase);
        const Scalar gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
    converged = off_mass() <= kOffDiagonalStop * scale;
  }
  if (!converged) throw Error(ErrorCode::no_convergence, "Jacobi sweep limit exceeded");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors = Matrix(n, n, m.field());
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues.push_back(a(order[k], order[k]).real());
    Vector col = v.column(order[k]);
    normalize_phase(col, 1e-12);
    out.eigenvectors.set_column(k, col);
  }
  if (m.field() == Field::real) out.eigenvectors.settle_field();
  return out;
}

SingularValueDecomposition svd(const Matrix& m, const Tolerances& tol) {
  if (!m.has_only_finite_entries()) throw Error(ErrorCode::invalid_argument, "non-finite entry");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t k = std::min(rows, cols);

  const Matrix gram = m.adjoint() * m;
  const EigenDecomposition eig = hermitian_eig(gram, tol);

  SingularValueDecomposition out;
  out.singular_values.reserve(k);
  out.right_vectors = eig.eigenvectors.columns(0, k);

  // Small singular values come from |M v| rather than the square root of the
  // Gram eigenvalue, which loses half the digits.
  std::vector<Vector> images;
  images.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    images.push_back(m * out.right_vectors.column(i));
    double sigma = norm2(images.back());
    if (i > 0) sigma = std::min(sigma, out.singular_values.back());
    out.singular_values.push_back(sigma);
  }

  const double top = k == 0 ? 0.0 : out.singular_values.front();
  std::vector<Vector> left;
  left.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (top == 0.0 || out.singular_values[i] <= kSmallSingular * top) break;
    Vector u = std::move(images[i]);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : left) {
        const Scalar c = inner(u, q);
        for (std::size_t r = 0; r < rows; ++r) u[r] -= c * q[r];
      }
    }
    const double len = norm2(u);
    if (len <= 0.5 * out.singular_values[i]) break;
    for (auto& e : u) e /= len;
    left.push_back(std::move(u));
  }
  complete_basis(left, rows, k);
  out.left_vectors = Matrix(rows, k, m.field());
  for (std::size_t i = 0; i < k; ++i) out.left_vectors.set_column(i, left[i]);
  if (m.field() == Field::real) {
    out.left_vectors.settle_field();
    out.right_vectors.settle_field();
  }
  return out;
}

double operator_norm(const Matrix& m) {
  if (m.empty() || m.is_zero()) return 0.0;
  return svd(m).singular_values.front();
}

PolarDecomposition polar_decompose(const Matrix& s, const Tolerances& tol) {
  if (!s.is_square()) throw Error(ErrorCode::shape_mismatch, "polar decomposition needs a square matrix");
  const std::size_t n = s.rows();
  const SingularValueDecomposition d = svd(s, tol);

  Matrix sigma(n, n, Field::real);
  for (std::size_t i = 0; i < n; ++i) sigma(i, i) = d.singular_values[i];
  const Matrix v_adj = d.right_vectors.adjoint();

  PolarDecomposition out;
  out.positive = (d.right_vectors * sigma * v_adj).hermitian_part();
  out.unitary = d.left_vectors * v_adj;
  if (s.field() == Field::real) {
    out.positive.settle_field();
    out.unitary.settle_field();
  }
  return out;
}

bool is_isometry(const Matrix& t, const Tolerances& tol) {
  if (!t.is_square()) throw Error(ErrorCode::shape_mismatch, "is_isometry needs a square matrix");
  if (t.is_zero()) return false;
  const double norm = operator_norm(t);
  const double norm_sq = norm * norm;
  Matrix dev = t.adjoint() * t;
  for (std::size_t i = 0; i < t.rows(); ++i) dev(i, i) -= norm_sq;
  return dev.max_abs() <= tol.resid * norm_sq;
}

Matrix orthonormalize_columns(const Matrix& m) {
  std::vector<Vector> cols;
  const double scale = m.max_abs();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Vector w = orthogonalize(m.column(j), cols);
    const double nw = norm2(w);
    if (nw <= 1e-12 * scale * std::sqrt(static_cast<double>(m.rows()))) continue;
    for (auto& e : w) e /= nw;
    cols.push_back(std::move(w));
  }
  Matrix out(m.rows(), cols.size(), Field::complex);
  for (std::size_t j = 0; j < cols.size(); ++j) out.set_column(j, cols[j]);
  return m.field() == Field::real ? out.settle_field() : out;
}

Matrix orthonormal_complement(const Matrix& spanning) {
  const std::size_t n = spanning.rows();
  const Matrix q = orthonormalize_columns(spanning);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < q.cols(); ++j) cols.push_back(q.column(j));
  const std::size_t given = cols.size();
  complete_basis(cols, n, n);
  Matrix out(n, n - given, Field::complex);
  for (std::size_t j = given; j < n; ++j) out.set_column(j - given, cols[j]);
  return spanning.field() == Field::real ? out.settle_field() : out;
}

double gram_deviation(const Matrix& v) {
  Matrix g = v.adjoint() * v;
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return g.max_abs();
}

}  // namespace rhosym
