#include "rhosym/linf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "rhosym/error.hpp"

namespace rhosym {
namespace {

constexpr std::size_t kMaxEnumerationDim = 12;

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double e) { return std::isfinite(e); });
}

// Illinois variant of regula falsi on [lo, hi] with f(lo)·f(hi) < 0.
double false_position(const std::function<double(double)>& f, double lo, double hi, double f_lo, double f_hi) {
  int side = 0;
  double root = lo;
  for (int it = 0; it < 200; ++it) {
    root = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    const double f_root = f(root);
    if (f_root == 0.0 || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon()) return root;
    if ((f_root > 0.0) == (f_hi > 0.0)) {
      hi = root;
      f_hi = f_root;
      if (side == -1) f_lo *= 0.5;
      side = -1;
    } else {
      lo = root;
      f_lo = f_root;
      if (side == 1) f_hi *= 0.5;
      side = 1;
    }
  }
  return root;
}

}  // namespace

double linf_norm(std::span<const double> x) {
  double m = 0.0;
  for (double e : x) m = std::max(m, std::abs(e));
  return m;
}

LinfOperator::LinfOperator(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw Error(ErrorCode::shape_mismatch, "entry count does not match shape");
  if (!all_finite(entries_)) throw Error(ErrorCode::invalid_argument, "non-finite entry");
}

LinfOperator LinfOperator::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<double> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::shape_mismatch, "ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return LinfOperator(r, c, std::move(entries));
}

LinfOperator LinfOperator::from_extreme_images(std::span<const LinfVector> points, std::span<const LinfVector> images) {
  const std::size_t n = points.size();
  if (n == 0 || images.size() != n) throw Error(ErrorCode::shape_mismatch, "need one image per point");
  const std::size_t m = images.front().size();
  for (std::size_t k = 0; k < n; ++k) {
    if (points[k].size() != n || images[k].size() != m) throw Error(ErrorCode::shape_mismatch, "point/image length");
  }

  // X·P = Q with P = [points], Q = [images]; solve Pᵀ·Xᵀ = Qᵀ.
  std::vector<std::vector<double>> lhs(n, std::vector<double>(n));
  std::vector<std::vector<double>> rhs(n, std::vector<double>(m));
  for (std::size_t k = 0; k < n; ++k) {
    lhs[k] = points[k];
    rhs[k] = images[k];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lhs[r][col]) > std::abs(lhs[pivot][col])) pivot = r;
    }
    if (std::abs(lhs[pivot][col]) == 0.0) throw Error(ErrorCode::invalid_argument, "points do not form a basis");
    std::swap(lhs[col], lhs[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || lhs[r][col] == 0.0) continue;
      const double factor = lhs[r][col] / lhs[col][col];
      for (std::size_t j = col; j < n; ++j) lhs[r][j] -= factor * lhs[col][j];
      for (std::size_t j = 0; j < m; ++j) rhs[r][j] -= factor * rhs[col][j];
    }
  }
  std::vector<double> entries(m * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) entries[i * n + j] = rhs[j][i] / lhs[j][j];
  }
  return LinfOperator(m, n, std::move(entries));
}

LinfVector LinfOperator::apply(std::span<const double> x) const {
  if (x.size() != cols_) throw Error(ErrorCode::shape_mismatch, "vector length");
  LinfVector y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  }
  return y;
}

double LinfOperator::norm() const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

bool LinfOperator::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](double e) { return e == 0.0; });
}

std::vector<SupportFunctional> ext_support_functionals(std::span<const double> x, double rel_tol) {
  const double top = linf_norm(x);
  if (top == 0.0) throw Error(ErrorCode::zero_vector, "no supporting functional at 0");
  std::vector<SupportFunctional> out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (std::abs(x[k]) >= top * (1.0 - rel_tol)) out.push_back({k, x[k] > 0.0 ? 1 : -1});
  }
  return out;
}

DerivativeReport rho_pm_linf_vec(std::span<const double> x, std::span<const double> y, ZeroPolicy zero) {
  if (x.size() != y.size()) throw Error(ErrorCode::shape_mismatch, "vectors of different length");
  const double nx = linf_norm(x);
  if (nx == 0.0) {
    if (zero == ZeroPolicy::strict) throw Error(ErrorCode::zero_vector, "ρ' at the zero vector");
    return {};
  }
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& f : ext_support_functionals(x)) {
    hi = std::max(hi, f(y));
    lo = std::min(lo, f(y));
  }
  return DerivativeReport::from_bounds(nx * lo, nx * hi, nx);
}

std::vector<LinfVector> mt_ext(const LinfOperator& t, double rel_tol) {
  const std::size_t n = t.cols();
  if (n == 0 || n > kMaxEnumerationDim) throw Error(ErrorCode::unsupported_dimension, "sign enumeration needs 1 ≤ n ≤ 12");
  if (t.is_zero()) throw Error(ErrorCode::zero_operator, "M_T of the zero operator");
  const double norm = t.norm();
  std::vector<LinfVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    LinfVector eps(n);
    for (std::size_t k = 0; k < n; ++k) eps[k] = (mask >> k) & 1U ? -1.0 : 1.0;
    if (linf_norm(t.apply(eps)) >= norm * (1.0 - rel_tol)) out.push_back(std::move(eps));
  }
  return out;
}

DerivativeReport rho_pm_linf_op(const LinfOperator& t, const LinfOperator& a, double rel_tol) {
  if (t.rows() != a.rows() || t.cols() != a.cols()) throw Error(ErrorCode::shape_mismatch, "T and A differ in shape");
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& x : mt_ext(t, rel_tol)) {
    const DerivativeReport r = rho_pm_linf_vec(t.apply(x), a.apply(x));
    hi = std::max(hi, r.rho_plus);
    lo = std::min(lo, r.rho_minus);
  }
  return DerivativeReport::from_bounds(lo, hi, t.norm());
}

OrthogonalityVerdict linf_verdict(const LinfOperator& t, const LinfOperator& a, const Tolerances& tol) {
  if (t.is_zero()) return verdict_from_report({}, 0.0, tol);
  const DerivativeReport r = rho_pm_linf_op(t, a);
  return verdict_from_report(r, r.norm_t * a.norm(), tol);
}

std::optional<LinfVector> pointwise_witness_scan(const LinfOperator& t, const LinfOperator& a,
                                                 const FaceScanOptions& opts) {
  if (t.rows() != 2 || t.cols() != 2 || a.rows() != 2 || a.cols() != 2) {
    throw Error(ErrorCode::unsupported_dimension, "face scan is implemented for ℓ∞² only");
  }
  if (t.is_zero()) throw Error(ErrorCode::zero_operator, "face scan for the zero operator");
  if (opts.grid < 2) throw Error(ErrorCode::invalid_argument, "face scan needs at least 2 grid points");

  const double norm = t.norm();
  const double threshold = opts.tol * norm * a.norm();
  using Face = std::function<LinfVector(double)>;
  const Face faces[] = {
      [](double s) { return LinfVector{1.0, s}; },
      [](double s) { return LinfVector{s, 1.0}; },
      [](double s) { return LinfVector{-1.0, s}; },
      [](double s) { return LinfVector{s, -1.0}; },
  };

  std::optional<LinfVector> best;
  double best_value = std::numeric_limits<double>::infinity();
  for (const Face& face : faces) {
    if (linf_norm(t.apply(face(0.0))) < norm * (1.0 - opts.rel_tol)) continue;
    const auto f = [&](double s) {
      const LinfVector x = face(s);
      return rho_pm_linf_vec(t.apply(x), a.apply(x)).rho;
    };
    double s_prev = -1.0;
    double f_prev = f(s_prev);
    for (std::size_t j = 0; j < opts.grid; ++j) {
      const double s = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(opts.grid - 1);
      const double fs = j == 0 ? f_prev : f(s);
      double candidate = s;
      if (j > 0 && ((f_prev < 0.0 && fs > 0.0) || (f_prev > 0.0 && fs < 0.0))) {
        candidate = false_position(f, s_prev, s, f_prev, fs);
      }
      const double value = std::abs(f(candidate));
      if (value <= threshold && value < best_value) {
        if (candidate != s) return face(candidate);
        best_value = value;
        best = face(candidate);
      }
      s_prev = s;
      f_prev = fs;
    }
    if (best) return best;
  }
  return best;
}

}  // namespace rhosym
