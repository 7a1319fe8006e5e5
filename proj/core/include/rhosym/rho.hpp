#pragma once

#include <cstddef>
#include <span>

#include "rhosym/linalg.hpp"
#include "rhosym/matrix.hpp"

namespace rhosym {

/// What to do with a zero base point (x = 0 or T = 0). Lenient returns an
/// all-zero report, since every norm derivative at 0 carries a factor ‖0‖.
enum class ZeroPolicy { lenient, strict };

struct DerivativeReport {
  double rho_plus = 0.0;
  double rho_minus = 0.0;
  double rho = 0.0;     // (rho_plus + rho_minus) / 2
  double norm_t = 0.0;  // norm of the base point

  static DerivativeReport from_bounds(double minus, double plus, double norm);
};

struct OrthogonalityVerdict {
  bool rho_orthogonal = false;
  bool bj_orthogonal = false;
  DerivativeReport report;
  double scale = 0.0;  // ‖T‖·‖A‖, the unit the decision tolerance is measured in
};

struct RhoOptions {
  Tolerances tol;
  std::size_t samples = 256;
  ZeroPolicy zero = ZeroPolicy::lenient;
  /// Read the extent from a sampled W_T(A*T) instead of the Hermitian part
  /// of the compression. Both give the same numbers; the sweep is slower.
  bool full_sweep = false;
};

/// In a Hilbert space both one-sided derivatives equal Re⟨y, x⟩.
DerivativeReport rho_vec(std::span<const Scalar> x, std::span<const Scalar> y,
                         ZeroPolicy zero = ZeroPolicy::lenient);

/// ρ'₊(T, A) = max Re⟨Tx, Ax⟩ and ρ'₋(T, A) = min Re⟨Tx, Ax⟩ over x ∈ M_T,
/// i.e. the real extent of W_T(A*T).
DerivativeReport rho_operator(const Matrix& t, const Matrix& a, const RhoOptions& opts = {});

OrthogonalityVerdict verdict_from_report(const DerivativeReport& report, double scale, const Tolerances& tol);

/// T ⊥_ρ A iff |ρ'₊ + ρ'₋| ≤ tol·‖T‖‖A‖. Pairs with T = 0 or A = 0 are orthogonal.
OrthogonalityVerdict is_rho_orthogonal(const Matrix& t, const Matrix& a, const RhoOptions& opts = {});

/// Sign form ρ'₋ ≤ 0 ≤ ρ'₊, each side relaxed by tol·‖T‖‖A‖.
bool is_bj_orthogonal(const Matrix& t, const Matrix& a, const RhoOptions& opts = {});

/// ‖T‖(‖T + tA‖ − ‖T‖)/t for t > 0.
double finite_difference_rho_plus(const Matrix& t, const Matrix& a, double step);
/// ‖T‖(‖T + tA‖ − ‖T‖)/t for t < 0.
double finite_difference_rho_minus(const Matrix& t, const Matrix& a, double step);

/// A − cT with c = (ρ'₊ + ρ'₋)/(2‖T‖²), which moves W_T(A*T) so that its real
/// extent is centred at 0 and hence T ⊥_ρ (A − cT).
Matrix midpoint_shift(const Matrix& t, const Matrix& a, const RhoOptions& opts = {});

}  // namespace rhosym
