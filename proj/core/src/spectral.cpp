#include "rhosym/spectral.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "rhosym/error.hpp"

namespace rhosym {

NormAttainmentSubspace norm_attainment_subspace(const Matrix& t, const Tolerances& tol) {
  if (t.empty() || t.is_zero()) throw Error(ErrorCode::zero_operator, "norm attainment of the zero operator");
  const SingularValueDecomposition d = svd(t, tol);
  const double top = d.singular_values.front();
  std::size_t k = 0;
  while (k < d.singular_values.size() && d.singular_values[k] >= top * (1.0 - tol.attain)) ++k;

  NormAttainmentSubspace out;
  out.basis = d.right_vectors.columns(0, k);
  out.sigma_max = top;
  out.full_space = k == t.cols();
  return out;
}

Scalar grid_phase(std::size_t j, std::size_t n) {
  j %= n;
  if ((4 * j) % n == 0) {
    switch ((4 * j) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
  return {std::cos(theta), std::sin(theta)};
}

RangeSample numerical_range(const Matrix& a, std::size_t samples) {
  if (!a.is_square()) throw Error(ErrorCode::shape_mismatch, "numerical range needs a square matrix");
  if (a.empty()) throw Error(ErrorCode::invalid_argument, "numerical range of an empty matrix");
  if (samples < 8) throw Error(ErrorCode::invalid_argument, "numerical range needs at least 8 samples");
  if (samples % 2 == 1) ++samples;

  const Matrix a_adj = a.adjoint();
  RangeSample out;
  out.kind = RangeKind::numerical_range;
  out.thetas.reserve(samples);
  out.boundary_points.reserve(samples);
  out.support_values.reserve(samples);

  for (std::size_t j = 0; j < samples; ++j) {
    const Scalar phase = grid_phase(j, samples);
    Matrix h = (std::conj(phase) * a + phase * a_adj) * 0.5;
    h.promote();
    const EigenDecomposition eig = hermitian_eig(h.hermitian_part());
    const Vector v = eig.eigenvectors.column(0);
    out.thetas.push_back(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples));
    out.boundary_points.push_back(inner(a * v, v));
    out.support_values.push_back(eig.eigenvalues.front());
  }
  return out;
}

Matrix maximal_range_compression(const Matrix& t, const Matrix& a, const Tolerances& tol) {
  if (!t.is_square() || t.rows() != a.rows() || t.cols() != a.cols()) {
    throw Error(ErrorCode::shape_mismatch, "T and A must be square of equal size");
  }
  const NormAttainmentSubspace h0 = norm_attainment_subspace(t, tol);
  const Matrix product = a.adjoint() * t;
  if (h0.full_space) return product;
  return h0.basis.adjoint() * product * h0.basis;
}

RangeSample maximal_numerical_range(const Matrix& t, const Matrix& a, const Tolerances& tol,
                                    std::size_t samples) {
  RangeSample out = numerical_range(maximal_range_compression(t, a, tol), samples);
  out.kind = RangeKind::maximal_numerical_range;
  return out;
}

RealExtent real_extent(const RangeSample& r) {
  if (r.size() == 0 || r.size() % 2 != 0) throw Error(ErrorCode::invalid_argument, "range sample needs an even grid");
  return {-r.support_values[r.size() / 2], r.support_values[0]};
}

RealExtent hermitian_extent(const Matrix& k, const Tolerances& tol) {
  const EigenDecomposition eig = hermitian_eig(k.hermitian_part(), tol);
  return {eig.eigenvalues.back(), eig.eigenvalues.front()};
}

Scalar project_theta(Scalar z, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Scalar(c, s) * (z.real() * c + z.imag() * s);
}

bool is_extent_symmetric(const RealExtent& e, double scale, const Tolerances& tol) {
  if (!(scale > 0.0)) throw Error(ErrorCode::invalid_argument, "symmetry scale must be positive");
  return std::abs(e.lo + e.hi) <= tol.ortho_decision * scale;
}

void write_csv(const RangeSample& r, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << "theta,re,im,support\n";
  for (std::size_t j = 0; j < r.size(); ++j) {
    out << r.thetas[j] << ',' << r.boundary_points[j].real() << ',' << r.boundary_points[j].imag() << ','
        << r.support_values[j] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace rhosym
