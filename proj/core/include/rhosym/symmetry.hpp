#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rhosym/rho.hpp"

namespace rhosym {

enum class WitnessDirection { left, right };

/// An operator A exhibiting a failure of symmetry at T.
///
/// direction = left:  T ⊥_ρ A holds (forward) and A ⊥_ρ T fails (reverse).
/// direction = right: A ⊥_ρ T holds (forward) and T ⊥_ρ A fails (reverse).
struct WitnessResult {
  Matrix op;       // T
  Matrix witness;  // A
  WitnessDirection direction = WitnessDirection::left;
  OrthogonalityVerdict forward_verdict;
  OrthogonalityVerdict reverse_verdict;
  std::string construction_tag;
  bool verified = false;
};

/// Evaluates both verdicts, first on the fast path and then on a θ-sweep
/// with 4× the configured samples. `verified` requires both to agree.
WitnessResult verify_witness(const Matrix& t, const Matrix& a, WitnessDirection direction, std::string tag,
                             const RhoOptions& opts = {});

/// Witness against ρ-left symmetry of T.
///
/// Returns nullopt for T = 0 and for real 2×2 scalar multiples of isometries,
/// which are left symmetric. Throws ConstructionFailed if no candidate verifies
/// where one must exist.
std::optional<WitnessResult> left_witness(const Matrix& t, const RhoOptions& opts = {});

/// Witness against ρ-right symmetry of T, built on the diagonal model of the
/// polar factor and transported back by the singular vectors.
std::optional<WitnessResult> right_witness(const Matrix& t, const RhoOptions& opts = {});

/// Right witness for D = diag(lambdas), handled directly in the complex field.
std::optional<WitnessResult> diagonal_right_witness(std::span<const Scalar> lambdas, const RhoOptions& opts = {});

enum class PartnerKind { gaussian, self_adjoint };

struct ProbeOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  RhoOptions rho;
  PartnerKind partner = PartnerKind::gaussian;
  /// Tried before random draws, each counting as one trial.
  std::vector<Matrix> injected;
};

struct SymmetryProbeReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t discarded = 0;  // partners whose shift did not converge
  std::optional<Matrix> first_counterexample;
};

/// Draws A, shifts it to A' with T ⊥_ρ A', and counts A' ⊥_ρ T failures.
SymmetryProbeReport probe_left_symmetry(const Matrix& t, const ProbeOptions& opts = {});

/// Draws A, shifts it along T until A' ⊥_ρ T, and counts T ⊥_ρ A' failures.
/// Each shift runs a secant iteration of at most 32 steps; partners that do
/// not converge are discarded and redrawn, up to 4·trials draws in total.
SymmetryProbeReport probe_right_symmetry(const Matrix& t, const ProbeOptions& opts = {});

/// One step of the right-probe shift: A − cT with A − cT ⊥_ρ T. Throws
/// ShiftFailed when the iteration does not settle.
Matrix right_partner_shift(const Matrix& t, const Matrix& a, const RhoOptions& opts = {});

struct WSymmetryReport {
  bool w_symmetric = false;
  bool all_theta_orthogonal = false;
  double max_gap = 0.0;  // max |h(θ) − h(θ + π)|
  std::optional<double> first_failing_theta;
};

/// Compares origin symmetry of W(A) with e^{iθ}I ⊥_ρ A over the same θ-grid.
/// Both tests use tol.ortho_decision·‖A‖.
WSymmetryReport w_symmetry_equivalence(const Matrix& a, std::size_t theta_samples = 256, const Tolerances& tol = {});

/// False only when A ⊥_ρ I holds and I ⊥_ρ A does not.
bool identity_membership_in_S(const Matrix& a, const RhoOptions& opts = {});

enum class BandMetric {
  squared_modulus,  // |λ_k|² ≥ max_j |λ_j|² − δ
  modulus,          // |λ_k| ≥ max_j |λ_j| − δ
};

struct TruncationOptions {
  double delta = 1e-3;
  BandMetric metric = BandMetric::squared_modulus;
};

struct TruncationRow {
  std::size_t n = 0;
  double band_value = 0.0;     // max Re⟨T e_k, A e_k⟩ over the near-norming band
  double reverse_value = 0.0;  // Re⟨A e_1, T e_1⟩ = |λ_1|²
  std::size_t band_size = 0;
};

/// Truncations T_N = diag(λ_k), A_N = diag(λ_k / k) with k counted from 1.
/// Throws BadSequence unless |λ_k| < 1 is nondecreasing, strictly grows over
/// the prefix, and λ_1 ≠ 0.
std::vector<TruncationRow> diagonal_truncation_study(const std::function<Scalar(std::size_t)>& lambda,
                                                     std::span<const std::size_t> sizes,
                                                     const TruncationOptions& opts = {});

}  // namespace rhosym
