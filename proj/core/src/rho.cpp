#include "rhosym/rho.hpp"

#include <cmath>

#include "rhosym/error.hpp"
#include "rhosym/spectral.hpp"

namespace rhosym {
namespace {

void require_same_square_shape(const Matrix& t, const Matrix& a) {
  if (!t.is_square() || t.rows() != a.rows() || t.cols() != a.cols()) {
    throw Error(ErrorCode::shape_mismatch, "T and A must be square of equal size");
  }
}

double finite_difference(const Matrix& t, const Matrix& a, double step) {
  require_same_square_shape(t, a);
  const double norm_t = operator_norm(t);
  return norm_t * (operator_norm(t + a * step) - norm_t) / step;
}

}  // namespace

DerivativeReport DerivativeReport::from_bounds(double minus, double plus, double norm) {
  return {plus, minus, 0.5 * (plus + minus), norm};
}

DerivativeReport rho_vec(std::span<const Scalar> x, std::span<const Scalar> y, ZeroPolicy zero) {
  if (x.size() != y.size()) throw Error(ErrorCode::shape_mismatch, "vectors of different length");
  const double nx = norm2(x);
  if (nx == 0.0) {
    if (zero == ZeroPolicy::strict) throw Error(ErrorCode::zero_base_point, "ρ' at the zero vector");
    return {};
  }
  const double value = inner(y, x).real();
  return DerivativeReport::from_bounds(value, value, nx);
}

DerivativeReport rho_operator(const Matrix& t, const Matrix& a, const RhoOptions& opts) {
  require_same_square_shape(t, a);
  if (t.is_zero()) {
    if (opts.zero == ZeroPolicy::strict) throw Error(ErrorCode::zero_operator, "ρ' at the zero operator");
    return {};
  }
  const NormAttainmentSubspace h0 = norm_attainment_subspace(t, opts.tol);
  const Matrix product = a.adjoint() * t;
  const Matrix k = h0.full_space ? product : h0.basis.adjoint() * product * h0.basis;
  const RealExtent e = opts.full_sweep ? real_extent(numerical_range(k, opts.samples)) : hermitian_extent(k, opts.tol);
  return DerivativeReport::from_bounds(e.lo, e.hi, h0.sigma_max);
}

OrthogonalityVerdict verdict_from_report(const DerivativeReport& report, double scale, const Tolerances& tol) {
  OrthogonalityVerdict v;
  v.report = report;
  v.scale = scale;
  if (scale == 0.0) {
    v.rho_orthogonal = true;
    v.bj_orthogonal = true;
    return v;
  }
  const double slack = tol.ortho_decision * scale;
  v.rho_orthogonal = std::abs(report.rho_plus + report.rho_minus) <= slack;
  v.bj_orthogonal = report.rho_minus <= slack && report.rho_plus >= -slack;
  return v;
}

OrthogonalityVerdict is_rho_orthogonal(const Matrix& t, const Matrix& a, const RhoOptions& opts) {
  require_same_square_shape(t, a);
  RhoOptions lenient = opts;
  lenient.zero = ZeroPolicy::lenient;
  const DerivativeReport report = rho_operator(t, a, lenient);
  const double scale = report.norm_t * operator_norm(a);
  return verdict_from_report(report, scale, opts.tol);
}

bool is_bj_orthogonal(const Matrix& t, const Matrix& a, const RhoOptions& opts) {
  return is_rho_orthogonal(t, a, opts).bj_orthogonal;
}

double finite_difference_rho_plus(const Matrix& t, const Matrix& a, double step) {
  if (!(step > 0.0)) throw Error(ErrorCode::invalid_argument, "right difference needs t > 0");
  return finite_difference(t, a, step);
}

double finite_difference_rho_minus(const Matrix& t, const Matrix& a, double step) {
  if (!(step < 0.0)) throw Error(ErrorCode::invalid_argument, "left difference needs t < 0");
  return finite_difference(t, a, step);
}

Matrix midpoint_shift(const Matrix& t, const Matrix& a, const RhoOptions& opts) {
  require_same_square_shape(t, a);
  if (t.is_zero()) throw Error(ErrorCode::zero_operator, "midpoint shift against the zero operator");
  RhoOptions strict = opts;
  strict.zero = ZeroPolicy::strict;
  const DerivativeReport r = rho_operator(t, a, strict);
  const double c = (r.rho_plus + r.rho_minus) / (2.0 * r.norm_t * r.norm_t);
  if (c == 0.0) return a;
  return a - t * c;
}

}  // namespace rhosym
