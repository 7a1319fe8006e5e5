#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "rhosym/rho.hpp"

namespace rhosym {

using LinfVector = std::vector<double>;

double linf_norm(std::span<const double> x);

/// The functional sign·e*_index on ℓ∞ⁿ.
struct SupportFunctional {
  std::size_t index = 0;
  int sign = 1;

  double operator()(std::span<const double> y) const { return sign * y[index]; }
  friend bool operator==(const SupportFunctional&, const SupportFunctional&) = default;
};

/// Real operator on ℓ∞ⁿ, row-major.
class LinfOperator {
 public:
  LinfOperator() = default;
  LinfOperator(std::size_t rows, std::size_t cols, std::vector<double> entries);
  static LinfOperator from_rows(std::initializer_list<std::initializer_list<double>> rows);

  /// The operator sending points[k] ↦ images[k]; the points must form a basis.
  static LinfOperator from_extreme_images(std::span<const LinfVector> points, std::span<const LinfVector> images);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const double> entries() const noexcept { return entries_; }

  LinfVector apply(std::span<const double> x) const;
  /// ‖T‖ on ℓ∞ → ℓ∞: the largest absolute row sum.
  double norm() const;
  bool is_zero() const;

  friend bool operator==(const LinfOperator&, const LinfOperator&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

/// {sgn(x_k)·e*_k : |x_k| ≥ ‖x‖∞(1 − rel_tol)}, in index order.
std::vector<SupportFunctional> ext_support_functionals(std::span<const double> x, double rel_tol = 1e-12);

/// ρ'±(x, y) = ‖x‖∞ · max/min f(y) over the extreme supporting functionals of x.
DerivativeReport rho_pm_linf_vec(std::span<const double> x, std::span<const double> y,
                                 ZeroPolicy zero = ZeroPolicy::lenient);

/// Sign vectors ε ∈ {−1, 1}ⁿ with ‖Tε‖∞ ≥ ‖T‖(1 − rel_tol). Supports n ≤ 12.
std::vector<LinfVector> mt_ext(const LinfOperator& t, double rel_tol = 1e-12);

/// max ρ'₊(Tx, Ax) and min ρ'₋(Tx, Ax) over x ∈ mt_ext(T).
DerivativeReport rho_pm_linf_op(const LinfOperator& t, const LinfOperator& a, double rel_tol = 1e-12);

OrthogonalityVerdict linf_verdict(const LinfOperator& t, const LinfOperator& a, const Tolerances& tol = {});

struct FaceScanOptions {
  std::size_t grid = 10000;  // points per face
  double tol = 1e-12;        // |ρ'(Tx, Ax)| threshold, relative to ‖T‖‖A‖
  double rel_tol = 1e-12;    // face membership in M_T
};

/// Looks on the faces of the unit square lying in M_T for x with
/// ρ'(Tx, Ax) = 0. Faces are visited in the order (1,s), (s,1), (−1,s), (s,−1);
/// a sign change on the grid is refined by false position. Only n = 2.
std::optional<LinfVector> pointwise_witness_scan(const LinfOperator& t, const LinfOperator& a,
                                                 const FaceScanOptions& opts = {});

}  // namespace rhosym
