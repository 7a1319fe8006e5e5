#include "rhosym/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rhosym/linf.hpp"
#include "rhosym/random.hpp"
#include "rhosym/rho.hpp"
#include "rhosym/spectral.hpp"
#include "rhosym/symmetry.hpp"

namespace rhosym {
namespace {

Rng suite_rng(const PropertyConfig& cfg, std::uint64_t salt) { return Rng(cfg.seed * 0x9E3779B97F4A7C15ULL + salt); }

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Field alternate_field(std::size_t i) { return i % 2 == 0 ? Field::real : Field::complex; }

// Nonzero real in ±[0.25, 4].
double random_scale(Rng& rng) {
  const double m = uniform(rng, 0.25, 4.0);
  return uniform(rng, 0.0, 1.0) < 0.5 ? -m : m;
}

RhoOptions rho_options(const PropertyConfig& cfg) {
  RhoOptions o;
  o.tol = cfg.tol;
  return o;
}

void note(PropertyResult& r, double error, bool violated) {
  r.max_error = std::max(r.max_error, error);
  if (violated) ++r.violations;
}

// T = W·diag(1, …, 1, s_{m+1}, …)·V* with exactly m leading unit singular
// values and the rest in [0.1, 0.8]; returns T and V.
std::pair<Matrix, Matrix> operator_with_top_multiplicity(Rng& rng, std::size_t n, std::size_t m, Field field) {
  std::vector<Scalar> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i < m ? 1.0 : uniform(rng, 0.1, 0.8);
  const Matrix w = random_unitary(rng, n, field);
  const Matrix v = random_unitary(rng, n, field);
  return {w * Matrix::diagonal(s) * v.adjoint(), v};
}

}  // namespace

PropertyResult check_homogeneity(const PropertyConfig& cfg) {
  PropertyResult r{"homogeneity", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 1);
  const RhoOptions opts = rho_options(cfg);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 2, 5);
    const Field field = alternate_field(i);
    const Matrix t = random_matrix(rng, n, n, field);
    const Matrix a = random_matrix(rng, n, n, field);
    const double scale = operator_norm(t) * operator_norm(a);
    const double base = rho_operator(t, a, opts).rho;

    const double lambda = random_scale(rng);
    const double e_right = std::abs(rho_operator(t, a * lambda, opts).rho - lambda * base) / (std::abs(lambda) * scale);
    const double e_left = std::abs(rho_operator(t * lambda, a, opts).rho - lambda * base) / (std::abs(lambda) * scale);
    const Scalar mu = std::polar(std::abs(random_scale(rng)), uniform(rng, 0.0, 2.0 * std::numbers::pi));
    const double mu2 = std::norm(mu);
    const double e_complex = std::abs(rho_operator(t * mu, a * mu, opts).rho - mu2 * base) / (mu2 * scale);
    const double worst = std::max({e_right, e_left, e_complex});

    // Predicate invariance under independent real scalings, on a generic and
    // on an orthogonal pair.
    const double alpha = random_scale(rng);
    const double beta = random_scale(rng);
    const Matrix shifted = midpoint_shift(t, a, opts);
    const bool generic_same = is_rho_orthogonal(t * alpha, a * beta, opts).rho_orthogonal ==
                              is_rho_orthogonal(t, a, opts).rho_orthogonal;
    const bool shifted_same = is_rho_orthogonal(t * alpha, shifted * beta, opts).rho_orthogonal ==
                              is_rho_orthogonal(t, shifted, opts).rho_orthogonal;
    ++r.cases;
    note(r, worst, worst > 1e-9 || !generic_same || !shifted_same);
  }
  return r;
}

PropertyResult check_unitary_invariance(const PropertyConfig& cfg) {
  PropertyResult r{"unitary-invariance", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 2);
  const RhoOptions opts = rho_options(cfg);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 2, 5);
    const Field field = alternate_field(i);
    const Matrix t = random_matrix(rng, n, n, field);
    const Matrix a0 = random_matrix(rng, n, n, field);
    const Matrix u = random_unitary(rng, n, field);
    const Matrix u_adj = u.adjoint();
    bool violated = false;
    double worst = 0.0;
    for (const Matrix& a : {a0, midpoint_shift(t, a0, opts)}) {
      const Matrix tc = u_adj * t * u;
      const Matrix ac = u_adj * a * u;
      const OrthogonalityVerdict v = is_rho_orthogonal(t, a, opts);
      const OrthogonalityVerdict vc = is_rho_orthogonal(tc, ac, opts);
      const double err = std::max(std::abs(v.report.rho_plus - vc.report.rho_plus),
                                  std::abs(v.report.rho_minus - vc.report.rho_minus)) /
                         v.scale;
      worst = std::max(worst, err);
      violated = violated || err > 1e-8 || v.rho_orthogonal != vc.rho_orthogonal || v.bj_orthogonal != vc.bj_orthogonal;
    }
    ++r.cases;
    note(r, worst, violated);
  }
  return r;
}

PropertyResult check_rho_implies_bj(const PropertyConfig& cfg) {
  PropertyResult r{"rho-implies-bj", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 3);
  const RhoOptions opts = rho_options(cfg);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 2, 5);
    const Field field = alternate_field(i);
    const Matrix t = random_matrix(rng, n, n, field);
    const Matrix a = random_matrix(rng, n, n, field);
    bool violated = false;
    for (const Matrix& partner : {a, midpoint_shift(t, a, opts)}) {
      const OrthogonalityVerdict v = is_rho_orthogonal(t, partner, opts);
      const double slack = cfg.tol.ortho_decision * v.scale;
      const bool signs = v.report.rho_minus <= slack && v.report.rho_plus >= -slack;
      violated = violated || (v.rho_orthogonal && !v.bj_orthogonal) || signs != v.bj_orthogonal;
    }
    ++r.cases;
    note(r, 0.0, violated);
  }
  return r;
}

PropertyResult check_singleton_attainment(const PropertyConfig& cfg) {
  PropertyResult r{"singleton-attainment", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 4);
  const RhoOptions opts = rho_options(cfg);
  while (r.cases < cfg.samples) {
    const std::size_t n = uniform_size(rng, 2, 5);
    const Field field = alternate_field(r.cases);
    const Matrix t = random_matrix(rng, n, n, field);
    const NormAttainmentSubspace h0 = norm_attainment_subspace(t, cfg.tol);
    if (h0.dim() != 1) continue;
    const Vector x0 = h0.basis.column(0);
    const Matrix a = random_matrix(rng, n, n, field);
    bool violated = false;
    double worst = 0.0;
    for (const Matrix& partner : {a, midpoint_shift(t, a, opts)}) {
      const OrthogonalityVerdict v = is_rho_orthogonal(t, partner, opts);
      const double pointwise = inner(t * x0, partner * x0).real();
      worst = std::max(worst, std::abs(v.report.rho - pointwise) / v.scale);
      violated = violated || v.rho_orthogonal != (std::abs(pointwise) <= cfg.tol.ortho_decision * v.scale);
    }
    ++r.cases;
    note(r, worst, violated);
  }
  return r;
}

PropertyResult check_compression_sufficiency(const PropertyConfig& cfg) {
  PropertyResult r{"compression-sufficiency", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 5);
  const RhoOptions opts = rho_options(cfg);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 2, 5);
    const std::size_t m = uniform_size(rng, 1, n);
    const Field field = alternate_field(i);
    const auto [t, v] = operator_with_top_multiplicity(rng, n, m, field);
    const Matrix b0 = v.columns(0, m);
    // A = T B₀ S B₀* + R Q Q* with S skew-Hermitian: Re⟨Tx, Ax⟩ = 0 on H₀.
    const Matrix g = random_matrix(rng, m, m, field);
    const Matrix skew = (g - g.adjoint()) * 0.5;
    Matrix a = t * b0 * skew * b0.adjoint();
    if (m < n) {
      const Matrix q = v.columns(m, n - m);
      a += random_matrix(rng, n, n, field) * q * q.adjoint();
    }
    if (a.is_zero()) continue;

    const double scale = operator_norm(t) * operator_norm(a);
    const Matrix k = maximal_range_compression(t, a, cfg.tol);
    const double herm = scale == 0.0 ? 0.0 : operator_norm(k.hermitian_part()) / scale;
    ++r.cases;
    const bool applies = herm <= cfg.tol.ortho_decision;
    note(r, herm, !applies || !is_rho_orthogonal(t, a, opts).rho_orthogonal);
  }
  return r;
}

PropertyResult check_self_adjoint_identity_symmetry(const PropertyConfig& cfg) {
  PropertyResult r{"self-adjoint-identity-symmetry", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 6);
  const RhoOptions opts = rho_options(cfg);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 2, 6);
    const Field field = alternate_field(i);
    Matrix a = random_hermitian(rng, n, field);
    const EigenDecomposition eig = hermitian_eig(a, cfg.tol);
    const double mid = 0.5 * (eig.eigenvalues.front() + eig.eigenvalues.back());
    a -= Matrix::identity(n, field) * mid;
    const Matrix identity = Matrix::identity(n, field);
    const OrthogonalityVerdict forward = is_rho_orthogonal(identity, a, opts);
    const OrthogonalityVerdict reverse = is_rho_orthogonal(a, identity, opts);
    ++r.cases;
    note(r, std::abs(reverse.report.rho) / reverse.scale, !forward.rho_orthogonal || !reverse.rho_orthogonal);
  }
  return r;
}

PropertyResult check_finite_difference_consistency(const PropertyConfig& cfg) {
  PropertyResult r{"finite-difference-consistency", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 7);
  const RhoOptions opts = rho_options(cfg);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 2, 5);
    const Field field = alternate_field(i);
    const Matrix t = random_matrix(rng, n, n, field);
    const Matrix a = random_matrix(rng, n, n, field);
    const DerivativeReport rep = rho_operator(t, a, opts);
    const double scale = rep.norm_t * operator_norm(a);
    // Fit C from the coarsest step, then require the finer steps to respect
    // err ≤ C·t up to the rounding floor of the difference quotient.
    const double fit_plus = std::abs(rep.rho_plus - finite_difference_rho_plus(t, a, 1e-4)) / 1e-4;
    const double fit_minus = std::abs(rep.rho_minus - finite_difference_rho_minus(t, a, -1e-4)) / 1e-4;
    bool violated = false;
    double worst = 0.0;
    for (double step : {1e-5, 1e-6}) {
      const double floor = 1e-15 * rep.norm_t * rep.norm_t / step * 10.0 + 1e-12 * scale;
      const double ep = std::abs(rep.rho_plus - finite_difference_rho_plus(t, a, step));
      const double em = std::abs(rep.rho_minus - finite_difference_rho_minus(t, a, -step));
      worst = std::max({worst, ep / scale, em / scale});
      violated = violated || ep > 2.0 * fit_plus * step + floor || em > 2.0 * fit_minus * step + floor;
    }
    ++r.cases;
    note(r, worst, violated);
  }
  return r;
}

PropertyResult check_eig_residuals(const PropertyConfig& cfg) {
  PropertyResult r{"eig-residuals", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 8);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 1, 8);
    const Matrix m = random_hermitian(rng, n, alternate_field(i));
    const EigenDecomposition eig = hermitian_eig(m, cfg.tol);
    const double norm = std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const Vector v = eig.eigenvectors.column(k);
      worst = std::max(worst, norm2(axpy(m * v, -eig.eigenvalues[k], v)) / norm);
    }
    const double gram = gram_deviation(eig.eigenvectors);
    bool sorted = std::is_sorted(eig.eigenvalues.rbegin(), eig.eigenvalues.rend());
    ++r.cases;
    note(r, std::max(worst, gram), worst > cfg.tol.resid || gram > cfg.tol.orth || !sorted);
  }
  return r;
}

PropertyResult check_svd_norm_sampling(const PropertyConfig& cfg) {
  PropertyResult r{"svd-norm-sampling", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 9);
  constexpr std::size_t kDraws = 10000;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 1, 5);
    const Field field = alternate_field(i);
    const Matrix m = random_matrix(rng, n, uniform_size(rng, 1, 5), field);
    const SingularValueDecomposition d = svd(m, cfg.tol);
    const double sigma = d.singular_values.front();
    double best = 0.0;
    for (std::size_t k = 0; k < kDraws; ++k) best = std::max(best, norm2(m * random_unit_vector(rng, m.cols(), field)));
    const double attained = norm2(m * d.right_vectors.column(0));
    ++r.cases;
    note(r, (sigma - best) / sigma,
         best > sigma * (1.0 + 1e-12) || std::abs(attained - sigma) > cfg.tol.resid * sigma);
  }
  return r;
}

PropertyResult check_polar_factors(const PropertyConfig& cfg) {
  PropertyResult r{"polar-factors", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 10);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 1, 5);
    const Field field = alternate_field(i);
    Matrix s = random_matrix(rng, n, n, field);
    if (i % 4 == 3 && n > 1) s = s * random_matrix(rng, n, n - 1, field) * random_matrix(rng, n - 1, n, field);
    const PolarDecomposition p = polar_decompose(s, cfg.tol);
    const double norm = std::max(operator_norm(s), 1e-300);
    const double recon = (p.unitary * p.positive - s).max_abs() / norm;
    const double unitary = gram_deviation(p.unitary);
    const double min_eig = hermitian_eig(p.positive, cfg.tol).eigenvalues.back() / norm;
    ++r.cases;
    note(r, std::max(recon, unitary), recon > 1e-9 || unitary > cfg.tol.orth || min_eig < -cfg.tol.resid);
  }
  return r;
}

PropertyResult check_eig_svd_agreement(const PropertyConfig& cfg) {
  PropertyResult r{"eig-svd-agreement", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 11);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 1, 6);
    const Matrix m = random_hermitian(rng, n, alternate_field(i));
    std::vector<double> moduli;
    for (double l : hermitian_eig(m, cfg.tol).eigenvalues) moduli.push_back(std::abs(l));
    std::sort(moduli.rbegin(), moduli.rend());
    const SingularValueDecomposition d = svd(m, cfg.tol);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(moduli[k] - d.singular_values[k]));
    worst /= std::max(moduli.front(), 1e-300);
    ++r.cases;
    note(r, worst, worst > cfg.tol.resid);
  }
  return r;
}

PropertyResult check_compression_identity(const PropertyConfig& cfg) {
  PropertyResult r{"compression-identity", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 12);
  constexpr std::size_t kDraws = 20000;
  const std::size_t cases = std::max<std::size_t>(1, cfg.samples / 4);
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t n = uniform_size(rng, 2, 5);
    // Alternate random T (one-dimensional H₀) with real T whose H₀ is a plane.
    const bool plane = i % 2 == 1;
    const Field field = plane ? Field::real : alternate_field(i / 2);
    const Matrix t = plane ? operator_with_top_multiplicity(rng, n, 2, field).first : random_matrix(rng, n, n, field);
    const Matrix a = random_matrix(rng, n, n, field);
    const NormAttainmentSubspace h0 = norm_attainment_subspace(t, cfg.tol);
    const RealExtent e = real_extent(maximal_numerical_range(t, a, cfg.tol, 64));
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t k = 0; k < kDraws; ++k) {
      const Vector x = random_unit_vector_in(rng, h0.basis);
      const double value = inner(t * x, a * x).real();
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    }
    const double scale = h0.sigma_max * operator_norm(a);
    const double outside = std::max({0.0, e.lo - lo, hi - e.hi}) / scale;
    const double gap = std::max(lo - e.lo, e.hi - hi) / scale;
    ++r.cases;
    note(r, gap, outside > 1e-10 || gap > 1e-4);
  }
  return r;
}

PropertyResult check_range_unitary_invariance(const PropertyConfig& cfg) {
  PropertyResult r{"range-unitary-invariance", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 13);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 2, 5);
    const Field field = alternate_field(i);
    const Matrix t = random_matrix(rng, n, n, field);
    const Matrix a = random_matrix(rng, n, n, field);
    const Matrix u = random_unitary(rng, n, field);
    const RealExtent e = real_extent(maximal_numerical_range(t, a, cfg.tol, 16));
    const RealExtent ec = real_extent(maximal_numerical_range(u.adjoint() * t * u, u.adjoint() * a * u, cfg.tol, 16));
    const double scale = operator_norm(t) * operator_norm(a);
    const double err = std::max(std::abs(e.lo - ec.lo), std::abs(e.hi - ec.hi)) / scale;
    ++r.cases;
    note(r, err, err > 1e-9);
  }
  return r;
}

PropertyResult check_extent_monotone_in_samples(const PropertyConfig& cfg) {
  PropertyResult r{"extent-monotone-in-samples", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 14);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 1, 5);
    const Matrix a = random_matrix(rng, n, n, Field::complex);
    const double norm = operator_norm(a);
    double prev_radius = 0.0;
    RealExtent prev{};
    bool violated = false;
    double worst = 0.0;
    // Doubling grids are nested, so the sampled hull can only grow.
    for (std::size_t samples = 16; samples <= 256; samples *= 2) {
      const RangeSample s = numerical_range(a, samples);
      double radius = 0.0;
      for (Scalar p : s.boundary_points) radius = std::max(radius, std::abs(p));
      const RealExtent e = real_extent(s);
      if (samples > 16) {
        const double shrink = std::max({prev_radius - radius, e.lo - prev.lo, prev.hi - e.hi}) / norm;
        worst = std::max(worst, shrink);
        violated = violated || shrink > 1e-10;
      }
      prev_radius = radius;
      prev = e;
    }
    ++r.cases;
    note(r, worst, violated);
  }
  return r;
}

PropertyResult check_projection_idempotent(const PropertyConfig& cfg) {
  PropertyResult r{"projection-idempotent", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 15);
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const Scalar z(uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0));
    const bool quarter = i % 4 == 0;
    const double theta = quarter ? 0.5 * std::numbers::pi * static_cast<double>(i % 16 / 4) : uniform(rng, 0.0, 6.3);
    const Scalar once = project_theta(z, theta);
    const Scalar twice = project_theta(once, theta);
    const double err = std::abs(twice - once);
    // On the line L_θ: Im(e^{−iθ}·Pr_θ z) = 0.
    const double off_line = std::abs((std::polar(1.0, -theta) * once).imag());
    ++r.cases;
    note(r, err / std::max(std::abs(z), 1e-300),
         err > 4.0 * kEps * std::abs(z) || off_line > 4.0 * kEps * std::abs(z));
  }
  return r;
}

PropertyResult check_linf_finite_difference(const PropertyConfig& cfg) {
  PropertyResult r{"linf-finite-difference", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 16);
  constexpr double kStep = 1e-7;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t n = uniform_size(rng, 1, 6);
    LinfVector x(n);
    LinfVector y(n);
    for (auto& e : x) e = uniform(rng, -2.0, 2.0);
    for (auto& e : y) e = uniform(rng, -2.0, 2.0);
    // Force a tie for the max modulus in half the cases so that ρ'₊ ≠ ρ'₋.
    if (i % 2 == 1 && n >= 2) {
      const auto top = std::max_element(x.begin(), x.end(), [](double p, double q) { return std::abs(p) < std::abs(q); });
      const std::size_t other = (static_cast<std::size_t>(top - x.begin()) + 1) % n;
      x[other] = uniform(rng, 0.0, 1.0) < 0.5 ? -*top : *top;
    }
    const DerivativeReport rep = rho_pm_linf_vec(x, y);
    const double nx = linf_norm(x);
    auto difference = [&](double t) {
      LinfVector moved(n);
      for (std::size_t k = 0; k < n; ++k) moved[k] = x[k] + t * y[k];
      return nx * (linf_norm(moved) - nx) / t;
    };
    const double scale = nx * linf_norm(y);
    const double err = std::max(std::abs(rep.rho_plus - difference(kStep)), std::abs(rep.rho_minus - difference(-kStep))) /
                       std::max(scale, 1e-300);
    ++r.cases;
    note(r, err, err > 1e-5);
  }
  return r;
}

PropertyResult check_w_symmetry_agreement(const PropertyConfig& cfg) {
  PropertyResult r{"w-symmetry-agreement", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 17);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Matrix a;
    if (i % 5 == 0) {
      const std::size_t m = uniform_size(rng, 1, 3);
      const Matrix b = random_matrix(rng, m, m, Field::complex);
      a = Matrix(2 * m, 2 * m, Field::complex);
      for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) {
          a(p, q) = b(p, q);
          a(m + p, m + q) = -b(p, q);
        }
      }
    } else {
      const std::size_t n = uniform_size(rng, 2, 6);
      a = random_matrix(rng, n, n, Field::complex);
    }
    const WSymmetryReport w = w_symmetry_equivalence(a, 64, cfg.tol);
    ++r.cases;
    note(r, 0.0, w.w_symmetric != w.all_theta_orthogonal || (i % 5 == 0 && !w.w_symmetric));
  }
  return r;
}

PropertyResult check_witnesses_verify(const PropertyConfig& cfg) {
  PropertyResult r{"witnesses-verify", 0, 0, 0.0};
  Rng rng = suite_rng(cfg, 18);
  const RhoOptions opts = rho_options(cfg);
  const std::size_t cases = std::max<std::size_t>(1, cfg.samples / 4);
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t n = uniform_size(rng, 3, 6);
    const Matrix t = random_matrix(rng, n, n, alternate_field(i));
    const auto left = left_witness(t, opts);
    const auto right = right_witness(t, opts);
    ++r.cases;
    note(r, 0.0, !left || !left->verified || !right || !right->verified);
  }
  return r;
}

std::vector<PropertyResult> core_property_suites(const PropertyConfig& cfg) {
  return {check_homogeneity(cfg),          check_unitary_invariance(cfg),      check_rho_implies_bj(cfg),
          check_singleton_attainment(cfg), check_compression_sufficiency(cfg), check_self_adjoint_identity_symmetry(cfg)};
}

std::vector<PropertyResult> all_property_suites(const PropertyConfig& cfg) {
  std::vector<PropertyResult> out = core_property_suites(cfg);
  for (auto* suite : {&check_finite_difference_consistency, &check_eig_residuals, &check_svd_norm_sampling,
                      &check_polar_factors, &check_eig_svd_agreement, &check_compression_identity,
                      &check_range_unitary_invariance, &check_extent_monotone_in_samples,
                      &check_projection_idempotent, &check_linf_finite_difference, &check_w_symmetry_agreement,
                      &check_witnesses_verify}) {
    out.push_back(suite(cfg));
  }
  return out;
}

}  // namespace rhosym
