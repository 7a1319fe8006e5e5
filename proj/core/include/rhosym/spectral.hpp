#pragma once

#include <iosfwd>
#include <vector>

#include "rhosym/linalg.hpp"
#include "rhosym/matrix.hpp"

namespace rhosym {

/// Top singular subspace H₀ of T. Its unit sphere is the norm-attainment set M_T.
struct NormAttainmentSubspace {
  Matrix basis;  // n × dim H₀, orthonormal columns
  double sigma_max = 0.0;
  bool full_space = false;

  std::size_t dim() const noexcept { return basis.cols(); }
};

/// H₀ = span of right singular vectors with σᵢ ≥ σ₁(1 − tol.attain).
/// Throws ZeroOperator for T = 0.
NormAttainmentSubspace norm_attainment_subspace(const Matrix& t, const Tolerances& tol = {});

enum class RangeKind { numerical_range, maximal_numerical_range };

/// Support-function samples of a compact convex set on a uniform θ-grid
/// over [0, 2π). The sample count is always even, so θ = 0 sits at index 0
/// and θ = π at index size()/2.
struct RangeSample {
  std::vector<double> thetas;
  std::vector<Scalar> boundary_points;
  std::vector<double> support_values;  // h(θ) = max Re(e^{−iθ} z) over the set
  RangeKind kind = RangeKind::numerical_range;

  std::size_t size() const noexcept { return thetas.size(); }
};

/// Sampled boundary of W(A). Odd sample counts are rounded up by one.
RangeSample numerical_range(const Matrix& a, std::size_t samples = 256);

/// K = B₀*(A*T)B₀, the compression of A*T to H₀ (K = A*T when H₀ is everything).
Matrix maximal_range_compression(const Matrix& t, const Matrix& a, const Tolerances& tol = {});

/// W_T(A*T), sampled as W of the compression.
RangeSample maximal_numerical_range(const Matrix& t, const Matrix& a, const Tolerances& tol = {},
                                    std::size_t samples = 256);

struct RealExtent {
  double lo = 0.0;
  double hi = 0.0;
};

/// (lo, hi) = (−h(π), h(0)).
RealExtent real_extent(const RangeSample& r);

/// Real extent of W(K) read off the Hermitian part of K: the same two support
/// values real_extent uses, without the rest of the sweep.
RealExtent hermitian_extent(const Matrix& k, const Tolerances& tol = {});

/// Pr_θ(z) = e^{iθ}(Re z·cos θ + Im z·sin θ), the orthogonal projection onto
/// the line through 0 in direction e^{iθ}.
Scalar project_theta(Scalar z, double theta);

bool is_extent_symmetric(const RealExtent& e, double scale, const Tolerances& tol = {});

/// Rows `theta,re,im,support` with a header line.
void write_csv(const RangeSample& r, std::ostream& out);

/// e^{iθ} for θ = 2πj/n, exact at multiples of π/2.
Scalar grid_phase(std::size_t j, std::size_t n);

}  // namespace rhosym
