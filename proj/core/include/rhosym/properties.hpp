#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rhosym/linalg.hpp"

namespace rhosym {

/// Outcome of one randomized invariant check.
struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  double max_error = 0.0;  // largest normalized discrepancy seen, where meaningful

  bool passed() const noexcept { return cases > 0 && violations == 0; }
};

struct PropertyConfig {
  std::size_t samples = 200;  // cases per suite
  std::uint64_t seed = 0;
  Tolerances tol;
};

// Norm derivatives.
PropertyResult check_homogeneity(const PropertyConfig& cfg);
PropertyResult check_unitary_invariance(const PropertyConfig& cfg);
PropertyResult check_rho_implies_bj(const PropertyConfig& cfg);
PropertyResult check_singleton_attainment(const PropertyConfig& cfg);
PropertyResult check_compression_sufficiency(const PropertyConfig& cfg);
PropertyResult check_self_adjoint_identity_symmetry(const PropertyConfig& cfg);
PropertyResult check_finite_difference_consistency(const PropertyConfig& cfg);

// Linear algebra.
PropertyResult check_eig_residuals(const PropertyConfig& cfg);
PropertyResult check_svd_norm_sampling(const PropertyConfig& cfg);
PropertyResult check_polar_factors(const PropertyConfig& cfg);
PropertyResult check_eig_svd_agreement(const PropertyConfig& cfg);

// Ranges.
PropertyResult check_compression_identity(const PropertyConfig& cfg);
PropertyResult check_range_unitary_invariance(const PropertyConfig& cfg);
PropertyResult check_extent_monotone_in_samples(const PropertyConfig& cfg);
PropertyResult check_projection_idempotent(const PropertyConfig& cfg);

// ℓ∞ and symmetry.
PropertyResult check_linf_finite_difference(const PropertyConfig& cfg);
PropertyResult check_w_symmetry_agreement(const PropertyConfig& cfg);
PropertyResult check_witnesses_verify(const PropertyConfig& cfg);

/// The six suites covering homogeneity, unitary invariance, the ⊥_ρ ⊂ ⊥_B
/// inclusion, singleton M_T, compression sufficiency, and identity symmetry
/// for self-adjoint partners.
std::vector<PropertyResult> core_property_suites(const PropertyConfig& cfg);

/// Every suite above.
std::vector<PropertyResult> all_property_suites(const PropertyConfig& cfg);

}  // namespace rhosym
