#include "rhosym/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "rhosym/error.hpp"
#include "rhosym/random.hpp"
#include "rhosym/spectral.hpp"

namespace rhosym {
namespace {

// Relative size below which a component of T is treated as absent when
// choosing a construction. Far above rounding noise, far below the 1e-8
// decision tolerance's reach into O(1) witnesses.
constexpr double kCaseThreshold = 1e-6;
// Normalized smallest singular value below which the codimension-one model
// counts as having a kernel.
constexpr double kKernelThreshold = 2e-9;
constexpr double kPerpendicularThreshold = 1e-10;
constexpr int kMaxShiftSteps = 32;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const Scalar kI{0.0, 1.0};

struct Candidate {
  std::string tag;
  Matrix witness;
};

void require_square_at_least_two(const Matrix& t) {
  if (!t.is_square()) throw Error(ErrorCode::shape_mismatch, "witness search needs a square operator");
  if (t.rows() < 2) throw Error(ErrorCode::unsupported_dimension, "witness search needs n ≥ 2");
}

Vector column_of(const Matrix& m, std::size_t j) { return m.column(j); }

// C b₁ = (b₁ + b₂)/√2, C b₂ = (b₂ − b₁)/√2, C b₃ = −b₃/√2, zero elsewhere.
Matrix left_rotation_map(const Matrix& basis) {
  const Vector b1 = column_of(basis, 0);
  const Vector b2 = column_of(basis, 1);
  const Vector b3 = column_of(basis, 2);
  Matrix c = Matrix::outer(scaled(axpy(b1, 1.0, b2), kInvSqrt2), b1);
  c += Matrix::outer(scaled(axpy(b2, -1.0, b1), kInvSqrt2), b2);
  c += Matrix::outer(scaled(b3, -kInvSqrt2), b3);
  return c;
}

// A x_α = w, A x_β = (w + T x_α)/√2 with x_α ∈ H₀, x_β ⊥ H₀, w ⊥ T(H₀),
// ‖w‖ = ‖T‖. Needs T(H₀^⊥) = 0 to work.
Matrix left_proper_subspace_witness(const Matrix& t, const NormAttainmentSubspace& h0, const Matrix& complement) {
  const Vector x_alpha = column_of(h0.basis, 0);
  const Vector x_beta = column_of(complement, 0);
  const Matrix image_perp = orthonormal_complement(t * h0.basis);
  const Vector w = scaled(column_of(image_perp, 0), h0.sigma_max);
  const Vector tx = t * x_alpha;
  Matrix a = Matrix::outer(w, x_alpha);
  a += Matrix::outer(scaled(axpy(w, 1.0, tx), kInvSqrt2), x_beta);
  return a;
}

// Candidate witnesses B for the normalized diagonal model D = diag(mu), with
// |mu| sorted descending and mu[0] of modulus one.
std::vector<Candidate> diagonal_model_candidates(const std::vector<Scalar>& mu, const Tolerances& tol) {
  const std::size_t n = mu.size();
  std::size_t k = 0;
  while (k < n && std::abs(mu[k]) >= 1.0 - tol.attain) ++k;
  std::vector<Candidate> out;

  auto half_on_top = [&](Matrix& b) {
    for (std::size_t i = 0; i < k; ++i) b(i, i) = 0.5 * mu[i];
  };

  if (k == n) {
    if (n < 3) return out;
    Matrix b(n, n, Field::complex);
    b(1, 0) = mu[1];
    b(0, 1) = -mu[0];
    for (std::size_t i = 2; i < n; ++i) b(i, i) = 0.5 * mu[i];
    out.push_back({"right-isometry", b.settle_field()});
    return out;
  }
  if (n - k >= 2) {
    Matrix b(n, n, Field::complex);
    half_on_top(b);
    b(k + 1, k) = 1.0;
    out.push_back({"right-codim-two", b.settle_field()});
    return out;
  }
  const Scalar lambda_1 = mu[0];
  const Scalar lambda_n = mu[n - 1];
  if (std::abs(lambda_n) <= kKernelThreshold) {
    Matrix b(n, n, Field::complex);
    half_on_top(b);
    b(n - 1, n - 1) = 1.0;
    out.push_back({"right-codim-one-kernel", b.settle_field()});
    return out;
  }

  Vector u(n, 0.0);
  u[0] = kInvSqrt2;
  u[n - 1] = kInvSqrt2;
  const Scalar cross = lambda_1 * std::conj(lambda_n);
  if (std::abs(cross.real()) > kPerpendicularThreshold * std::abs(cross)) {
    Vector image(n, 0.0);
    image[0] = lambda_n;
    image[n - 1] = -lambda_1;
    out.push_back({"lemma-diagonal-case-I", Matrix::outer(image, u)});
    return out;
  }

  Vector v(n, 0.0);
  v[0] = -kI * kInvSqrt2;
  v[n - 1] = kInvSqrt2;
  Vector direct_image(n, 0.0);
  direct_image[0] = std::conj(lambda_n) * kInvSqrt2;
  direct_image[n - 1] = kI * std::conj(lambda_1) * kInvSqrt2;
  out.push_back({"lemma-diagonal-case-II-direct", Matrix::outer(direct_image, v)});

  Vector corrected_image(n, 0.0);
  corrected_image[0] = lambda_1;
  corrected_image[n - 1] = -(std::norm(lambda_1) / std::norm(lambda_n)) * lambda_n;
  out.push_back({"lemma-diagonal-case-II", Matrix::outer(corrected_image, u)});
  return out;
}

// Construction for 2×2 non-isometries with M_T = {±x₀} and z₀ ⊥ x₀.
Matrix two_dimensional_right_witness(const Matrix& t, const NormAttainmentSubspace& h0) {
  const Vector x0 = column_of(h0.basis, 0);
  const Vector z0 = column_of(orthonormal_complement(h0.basis), 0);
  const Vector tx0 = t * x0;
  const Vector tz0 = t * z0;
  const double sigma = h0.sigma_max;
  if (norm2(tz0) <= kKernelThreshold * sigma) {
    Matrix a = Matrix::outer(scaled(tx0, 1.0 / (2.0 * sigma * sigma)), x0);
    a += Matrix::outer(z0, z0);
    return a;
  }
  const Vector w0 = column_of(orthonormal_complement(Matrix::from_columns(std::span<const Vector>(&tz0, 1))), 0);
  Matrix a = Matrix::outer(tx0, x0);
  a += Matrix::outer(scaled(w0, 2.0 * sigma), z0);
  return a;
}

std::optional<WitnessResult> first_verified(const Matrix& t, const std::vector<Candidate>& candidates,
                                            WitnessDirection direction, const RhoOptions& opts) {
  for (const auto& c : candidates) {
    WitnessResult r = verify_witness(t, c.witness, direction, c.tag, opts);
    if (r.verified) return r;
  }
  return std::nullopt;
}

[[noreturn]] void construction_failed(WitnessDirection direction, const std::vector<Candidate>& candidates) {
  std::string tags;
  for (const auto& c : candidates) tags += (tags.empty() ? "" : ", ") + c.tag;
  throw Error(ErrorCode::construction_failed,
              std::string(direction == WitnessDirection::left ? "left" : "right") +
                  " witness did not verify (tried: " + (tags.empty() ? "none" : tags) + ")");
}

Matrix draw_partner(Rng& rng, const Matrix& t, PartnerKind kind) {
  return kind == PartnerKind::self_adjoint ? random_hermitian(rng, t.rows(), t.field())
                                           : random_matrix(rng, t.rows(), t.cols(), t.field());
}

template <typename Step>
SymmetryProbeReport run_probe(const Matrix& t, const ProbeOptions& opts, Step step) {
  if (!t.is_square()) throw Error(ErrorCode::shape_mismatch, "probe needs a square operator");
  if (t.is_zero()) throw Error(ErrorCode::zero_operator, "probe at the zero operator");
  Rng rng(opts.seed);
  SymmetryProbeReport report;
  std::size_t draws = 0;
  std::size_t next_injected = 0;
  const std::size_t max_draws = 4 * opts.trials;
  while (report.trials < opts.trials && draws < max_draws + opts.injected.size()) {
    ++draws;
    const Matrix a = next_injected < opts.injected.size() ? opts.injected[next_injected++]
                                                          : draw_partner(rng, t, opts.partner);
    std::optional<std::pair<Matrix, bool>> outcome = step(a);
    if (!outcome) {
      ++report.discarded;
      continue;
    }
    ++report.trials;
    if (!outcome->second) {
      ++report.failures;
      if (!report.first_counterexample) report.first_counterexample = outcome->first;
    }
  }
  return report;
}

}  // namespace

WitnessResult verify_witness(const Matrix& t, const Matrix& a, WitnessDirection direction, std::string tag,
                             const RhoOptions& opts) {
  auto evaluate = [&](const RhoOptions& o) {
    const bool left = direction == WitnessDirection::left;
    OrthogonalityVerdict forward = left ? is_rho_orthogonal(t, a, o) : is_rho_orthogonal(a, t, o);
    OrthogonalityVerdict reverse = left ? is_rho_orthogonal(a, t, o) : is_rho_orthogonal(t, a, o);
    return std::pair{forward, reverse};
  };

  WitnessResult r;
  r.op = t;
  r.witness = a;
  r.direction = direction;
  r.construction_tag = std::move(tag);

  RhoOptions fast = opts;
  fast.full_sweep = false;
  auto [forward, reverse] = evaluate(fast);
  r.forward_verdict = forward;
  r.reverse_verdict = reverse;
  if (!forward.rho_orthogonal || reverse.rho_orthogonal) return r;

  RhoOptions fine = opts;
  fine.full_sweep = true;
  fine.samples = 4 * opts.samples;
  auto [fine_forward, fine_reverse] = evaluate(fine);
  r.forward_verdict = fine_forward;
  r.reverse_verdict = fine_reverse;
  r.verified = fine_forward.rho_orthogonal && !fine_reverse.rho_orthogonal;
  return r;
}

std::optional<WitnessResult> left_witness(const Matrix& t, const RhoOptions& opts) {
  require_square_at_least_two(t);
  if (t.is_zero()) return std::nullopt;
  const std::size_t n = t.rows();
  const NormAttainmentSubspace h0 = norm_attainment_subspace(t, opts.tol);
  const double sigma = h0.sigma_max;

  std::vector<Candidate> candidates;
  if (h0.full_space) {
    if (n == 2) {
      if (t.field() == Field::real) return std::nullopt;
      candidates.push_back({"complex-2d-isometry", t * Matrix::diagonal({Scalar(1.0, 1.0), -1.0})});
    } else {
      candidates.push_back({"left-isometry-case-I", t * left_rotation_map(Matrix::identity(n, t.field()))});
    }
  } else {
    const Matrix complement = orthonormal_complement(h0.basis);
    const Matrix t_perp = t * complement;
    const SingularValueDecomposition perp = svd(t_perp, opts.tol);
    if (perp.singular_values.front() > kCaseThreshold * sigma) {
      const Vector z = complement * perp.right_vectors.column(0);
      candidates.push_back({"left-prop-perp-violation", Matrix::outer(t * z, z)});
    } else {
      const double leak = operator_norm(complement.adjoint() * t * h0.basis);
      if (leak <= kCaseThreshold * sigma && h0.dim() >= 3) {
        candidates.push_back({"left-restricted-isometry-case-I", t * left_rotation_map(h0.basis)});
      }
      candidates.push_back({"left-proper-subspace", left_proper_subspace_witness(t, h0, complement)});
    }
  }

  if (auto r = first_verified(t, candidates, WitnessDirection::left, opts)) return r;
  construction_failed(WitnessDirection::left, candidates);
}

std::optional<WitnessResult> right_witness(const Matrix& t, const RhoOptions& opts) {
  require_square_at_least_two(t);
  if (t.is_zero()) return std::nullopt;
  const std::size_t n = t.rows();
  const NormAttainmentSubspace h0 = norm_attainment_subspace(t, opts.tol);

  std::vector<Candidate> candidates;
  if (n == 2 && h0.full_space) {
    if (t.field() == Field::real) return std::nullopt;
    candidates.push_back({"complex-2d-isometry", t * Matrix::diagonal({Scalar(0.0, 2.0), 1.0})});
  } else {
    if (n == 2) candidates.push_back({"right-2d-attained", two_dimensional_right_witness(t, h0)});
    // T = W Σ V* = (W V*)(V Σ V*): a witness B for Σ/σ₁ transports to W B V*.
    const SingularValueDecomposition d = svd(t, opts.tol);
    std::vector<Scalar> mu;
    mu.reserve(n);
    for (double s : d.singular_values) mu.emplace_back(s / d.singular_values.front());
    const Matrix v_adj = d.right_vectors.adjoint();
    for (auto& c : diagonal_model_candidates(mu, opts.tol)) {
      candidates.push_back({c.tag, d.left_vectors * c.witness * v_adj});
    }
  }

  if (auto r = first_verified(t, candidates, WitnessDirection::right, opts)) return r;
  construction_failed(WitnessDirection::right, candidates);
}

std::optional<WitnessResult> diagonal_right_witness(std::span<const Scalar> lambdas, const RhoOptions& opts) {
  const Matrix d = Matrix::diagonal(lambdas);
  require_square_at_least_two(d);
  if (d.is_zero()) return std::nullopt;
  const std::size_t n = lambdas.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return std::abs(lambdas[i]) > std::abs(lambdas[j]); });
  const double top = std::abs(lambdas[order[0]]);
  std::vector<Scalar> mu(n);
  for (std::size_t i = 0; i < n; ++i) mu[i] = lambdas[order[i]] / top;

  std::vector<Candidate> candidates;
  std::size_t k = 0;
  while (k < n && std::abs(mu[k]) >= 1.0 - opts.tol.attain) ++k;
  if (n == 2 && k == 2) {
    if (d.field() == Field::real) return std::nullopt;
    candidates.push_back({"complex-2d-isometry", d * Matrix::diagonal({Scalar(0.0, 2.0), 1.0})});
  } else {
    for (auto& c : diagonal_model_candidates(mu, opts.tol)) {
      Matrix b(n, n, Field::complex);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) b(order[i], order[j]) = c.witness(i, j);
      }
      candidates.push_back({c.tag, b.settle_field()});
    }
  }

  if (auto r = first_verified(d, candidates, WitnessDirection::right, opts)) return r;
  construction_failed(WitnessDirection::right, candidates);
}

SymmetryProbeReport probe_left_symmetry(const Matrix& t, const ProbeOptions& opts) {
  return run_probe(t, opts, [&](const Matrix& a) -> std::optional<std::pair<Matrix, bool>> {
    Matrix shifted = midpoint_shift(t, a, opts.rho);
    if (!is_rho_orthogonal(t, shifted, opts.rho).rho_orthogonal) return std::nullopt;
    const bool symmetric = is_rho_orthogonal(shifted, t, opts.rho).rho_orthogonal;
    return std::pair{std::move(shifted), symmetric};
  });
}

Matrix right_partner_shift(const Matrix& t, const Matrix& a, const RhoOptions& opts) {
  if (t.is_zero()) throw Error(ErrorCode::zero_operator, "shift along the zero operator");
  const double norm_t = operator_norm(t);
  RhoOptions strict = opts;
  strict.zero = ZeroPolicy::strict;

  struct Sample {
    double c;
    double f;
    double scale;
  };
  auto evaluate = [&](double c) {
    const Matrix shifted = c == 0.0 ? a : a - t * c;
    if (shifted.is_zero()) throw Error(ErrorCode::shift_failed, "shift reached the zero operator");
    const DerivativeReport r = rho_operator(shifted, t, strict);
    return Sample{c, r.rho, r.norm_t * norm_t};
  };

  Sample prev = evaluate(0.0);
  const double target = 1e-3 * opts.tol.ortho_decision;
  if (std::abs(prev.f) > target * prev.scale) {
    // d/dc Re⟨(A − cT)x, Tx⟩ = −‖Tx‖²; average it over M_A for the first step.
    const NormAttainmentSubspace ha = norm_attainment_subspace(a, opts.tol);
    const Matrix tb = t * ha.basis;
    const RealExtent g = hermitian_extent(tb.adjoint() * tb, opts.tol);
    const double slope = -0.5 * (g.lo + g.hi);
    if (slope == 0.0) throw Error(ErrorCode::shift_failed, "T vanishes on M_A");
    Sample cur = evaluate(prev.c - prev.f / slope);
    for (int step = 0; step < kMaxShiftSteps && std::abs(cur.f) > target * cur.scale; ++step) {
      if (cur.f == prev.f) break;
      const double next = cur.c - cur.f * (cur.c - prev.c) / (cur.f - prev.f);
      if (!std::isfinite(next)) break;
      prev = cur;
      cur = evaluate(next);
    }
    prev = cur;
  }

  Matrix shifted = prev.c == 0.0 ? a : a - t * prev.c;
  if (!is_rho_orthogonal(shifted, t, opts).rho_orthogonal) {
    throw Error(ErrorCode::shift_failed, "secant iteration did not reach A ⊥_ρ T");
  }
  return shifted;
}

SymmetryProbeReport probe_right_symmetry(const Matrix& t, const ProbeOptions& opts) {
  return run_probe(t, opts, [&](const Matrix& a) -> std::optional<std::pair<Matrix, bool>> {
    Matrix shifted;
    try {
      shifted = right_partner_shift(t, a, opts.rho);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::shift_failed) throw;
      return std::nullopt;
    }
    const bool symmetric = is_rho_orthogonal(t, shifted, opts.rho).rho_orthogonal;
    return std::pair{std::move(shifted), symmetric};
  });
}

WSymmetryReport w_symmetry_equivalence(const Matrix& a, std::size_t theta_samples, const Tolerances& tol) {
  if (!a.is_square()) throw Error(ErrorCode::shape_mismatch, "W-symmetry needs a square matrix");
  const RangeSample range = numerical_range(a, theta_samples);
  const std::size_t n_theta = range.size();
  const double norm_a = operator_norm(a);
  const double slack = tol.ortho_decision * norm_a;

  WSymmetryReport out;
  for (std::size_t j = 0; j < n_theta; ++j) {
    const double gap = std::abs(range.support_values[j] - range.support_values[(j + n_theta / 2) % n_theta]);
    out.max_gap = std::max(out.max_gap, gap);
  }
  out.w_symmetric = out.max_gap <= slack;

  RhoOptions opts;
  opts.tol = tol;
  out.all_theta_orthogonal = true;
  const Matrix identity = Matrix::identity(a.rows(), Field::complex);
  for (std::size_t j = 0; j < n_theta; ++j) {
    Matrix rotated = identity * grid_phase(j, n_theta);
    rotated.promote();
    const DerivativeReport r = rho_operator(rotated, a, opts);
    if (!verdict_from_report(r, r.norm_t * norm_a, tol).rho_orthogonal) {
      out.all_theta_orthogonal = false;
      out.first_failing_theta = range.thetas[j];
      break;
    }
  }
  return out;
}

bool identity_membership_in_S(const Matrix& a, const RhoOptions& opts) {
  if (!a.is_square()) throw Error(ErrorCode::shape_mismatch, "membership test needs a square matrix");
  const Matrix identity = Matrix::identity(a.rows(), a.field());
  if (!is_rho_orthogonal(a, identity, opts).rho_orthogonal) return true;
  return is_rho_orthogonal(identity, a, opts).rho_orthogonal;
}

std::vector<TruncationRow> diagonal_truncation_study(const std::function<Scalar(std::size_t)>& lambda,
                                                     std::span<const std::size_t> sizes,
                                                     const TruncationOptions& opts) {
  if (sizes.empty()) throw Error(ErrorCode::invalid_argument, "no truncation sizes");
  if (!(opts.delta > 0.0)) throw Error(ErrorCode::invalid_argument, "band width must be positive");
  const std::size_t longest = *std::max_element(sizes.begin(), sizes.end());
  if (longest == 0) throw Error(ErrorCode::invalid_argument, "truncation size 0");

  std::vector<Scalar> values(longest);
  for (std::size_t k = 0; k < longest; ++k) values[k] = lambda(k + 1);
  if (values[0] == Scalar{}) throw Error(ErrorCode::bad_sequence, "λ_1 = 0");
  for (std::size_t k = 0; k < longest; ++k) {
    if (!(std::abs(values[k]) < 1.0)) throw Error(ErrorCode::bad_sequence, "|λ_k| ≥ 1");
    if (k > 0 && std::abs(values[k]) < std::abs(values[k - 1])) {
      throw Error(ErrorCode::bad_sequence, "|λ_k| decreases");
    }
  }
  if (!(std::abs(values.back()) > std::abs(values.front()))) {
    throw Error(ErrorCode::bad_sequence, "|λ_k| does not grow toward 1");
  }

  std::vector<TruncationRow> rows;
  rows.reserve(sizes.size());
  for (std::size_t n : sizes) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "truncation size 0");
    double top = 0.0;
    for (std::size_t k = 0; k < n; ++k) top = std::max(top, std::abs(values[k]));
    TruncationRow row;
    row.n = n;
    row.reverse_value = std::norm(values[0]);
    for (std::size_t k = 0; k < n; ++k) {
      const double m = std::abs(values[k]);
      const bool in_band = opts.metric == BandMetric::squared_modulus ? m * m >= top * top - opts.delta
                                                                      : m >= top - opts.delta;
      if (!in_band) continue;
      ++row.band_size;
      // ⟨T e_k, A e_k⟩ = λ_k · conj(λ_k / k)
      const double value = (values[k] * std::conj(values[k] / static_cast<double>(k + 1))).real();
      row.band_value = row.band_size == 1 ? value : std::max(row.band_value, value);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rhosym
