#include "rhosym_cli/golden.hpp"

#include <cmath>

#include <rhosym/error.hpp>
#include <rhosym/linf.hpp>
#include <rhosym/spectral.hpp>
#include <rhosym/symmetry.hpp>

namespace rhosym::cli {
namespace {

constexpr std::string_view kNecessityT = R"fx({"space":"linf2","images":{"(1,1)":[1,0.5],"(1,-1)":[1,-0.5]}})fx";
constexpr std::string_view kNecessityA = R"fx({"space":"linf2","images":{"(1,1)":[0.5,0],"(1,-1)":[-1,0]}})fx";
constexpr std::string_view kSufficiencyT = R"fx({"space":"linf2","images":{"(1,1)":[1,0],"(-1,1)":[0.5,1]}})fx";
constexpr std::string_view kSufficiencyA = R"fx({"space":"linf2","images":{"(1,1)":[1,0],"(-1,1)":[0,-1]}})fx";

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double flag(bool b) { return b ? 1.0 : 0.0; }

LinfOperator fixture(std::string_view example, char which) {
  return linf_fixture_from_json(parse_json(linf_fixture_text(example, which))).op;
}

std::string verdict_word(bool orthogonal) { return orthogonal ? "rho-orthogonal" : "not rho-orthogonal"; }

GoldenReport linf_necessity() {
  const LinfOperator t = fixture("linf-necessity", 'T');
  const LinfOperator a = fixture("linf-necessity", 'A');
  const DerivativeReport r = rho_pm_linf_op(t, a);
  const OrthogonalityVerdict v = linf_verdict(t, a);
  const auto x0 = pointwise_witness_scan(t, a);

  GoldenReport g{"linf-necessity", {}, Json::object()};
  g.checks.push_back({"rho_plus", 0.5, r.rho_plus, 0.0});
  g.checks.push_back({"rho_minus", -1.0, r.rho_minus, 0.0});
  g.checks.push_back({"rho_orthogonal", 0.0, flag(v.rho_orthogonal), 0.0});
  g.checks.push_back({"witness_found", 1.0, flag(x0.has_value()), 0.0});
  g.details["verdict"] = verdict_word(v.rho_orthogonal);
  g.details["report"] = r;
  if (x0) {
    const LinfVector image = a.apply(*x0);
    g.checks.push_back({"witness_x1", 1.0, (*x0)[0], 1e-12});
    g.checks.push_back({"witness_x2", 1.0 / 3.0, (*x0)[1], 1e-12});
    g.checks.push_back({"image_norm_at_witness", 0.0, linf_norm(image), 1e-12});
    g.details["witness_point"] = *x0;
    g.details["image_at_witness"] = image;
  } else {
    g.details["witness_point"] = nullptr;
  }
  return g;
}

GoldenReport linf_sufficiency() {
  const LinfOperator t = fixture("linf-sufficiency", 'T');
  const LinfOperator a = fixture("linf-sufficiency", 'A');
  const DerivativeReport r = rho_pm_linf_op(t, a);
  const OrthogonalityVerdict v = linf_verdict(t, a);
  const LinfVector corner{1.0, 1.0};
  const DerivativeReport at_corner = rho_pm_linf_vec(t.apply(corner), a.apply(corner));

  GoldenReport g{"linf-sufficiency", {}, Json::object()};
  g.checks.push_back({"rho_plus", 1.0, r.rho_plus, 0.0});
  g.checks.push_back({"rho_minus", -1.0, r.rho_minus, 0.0});
  g.checks.push_back({"rho_orthogonal", 1.0, flag(v.rho_orthogonal), 0.0});
  g.checks.push_back({"pointwise_rho_at_(1,1)", 1.0, at_corner.rho, 0.0});
  g.details["verdict"] = verdict_word(v.rho_orthogonal);
  g.details["pointwise_verdict_at_(1,1)"] = verdict_word(at_corner.rho == 0.0);
  g.details["report"] = r;
  return g;
}

GoldenReport left_isometry_3d(const RhoOptions& opts) {
  const Matrix t = Matrix::identity(3);
  const auto w = left_witness(t, opts);
  GoldenReport g{"left-isometry-3d", {}, Json::object()};
  g.checks.push_back({"verified", 1.0, flag(w && w->verified), 0.0});
  if (!w) return g;
  const RealExtent forward = real_extent(maximal_numerical_range(t, w->witness, opts.tol, opts.samples));
  const RealExtent on_ma = real_extent(maximal_numerical_range(w->witness, t, opts.tol, opts.samples));
  g.checks.push_back({"forward_extent_lo", -kInvSqrt2, forward.lo, 1e-6});
  g.checks.push_back({"forward_extent_hi", kInvSqrt2, forward.hi, 1e-6});
  g.checks.push_back({"value_on_M_A_lo", kInvSqrt2, on_ma.lo, 1e-6});
  g.checks.push_back({"value_on_M_A_hi", kInvSqrt2, on_ma.hi, 1e-6});
  g.details["witness"] = *w;
  return g;
}

GoldenReport right_diagonal_3d(const RhoOptions& opts) {
  const Matrix d = Matrix::diagonal({1.0, 1.0, 0.5});
  const auto w = right_witness(d, opts);
  GoldenReport g{"right-diagonal-3d", {}, Json::object()};
  g.checks.push_back({"verified", 1.0, flag(w && w->verified), 0.0});
  if (!w) return g;
  g.checks.push_back({"tag_is_lemma_diagonal_case_I", 1.0, flag(w->construction_tag == "lemma-diagonal-case-I"), 0.0});
  const RealExtent reverse = real_extent(maximal_numerical_range(d, w->witness, opts.tol, opts.samples));
  g.checks.push_back({"forward_rho", 0.0, w->forward_verdict.report.rho, 1e-12});
  g.checks.push_back({"reverse_extent_lo", 0.0, reverse.lo, 1e-9});
  g.checks.push_back({"reverse_extent_hi", 0.5 * kInvSqrt2, reverse.hi, 1e-9});
  g.details["witness"] = *w;
  return g;
}

GoldenReport truncation() {
  const std::vector<std::size_t> sizes{50, 200, 1000, 2000};
  const auto rows = diagonal_truncation_study(
      [](std::size_t k) { return Scalar(1.0 - 1.0 / static_cast<double>(k + 1)); }, sizes);
  GoldenReport g{"truncation", {}, Json::object()};
  bool decreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i) decreasing = decreasing && rows[i].band_value < rows[i - 1].band_value;
  g.checks.push_back({"band_value_decreasing", 1.0, flag(decreasing), 0.0});
  g.checks.push_back({"band_value_at_2000_below_1e-3", 1.0, flag(rows.back().band_value <= 1e-3), 0.0});
  for (const auto& row : rows) {
    g.checks.push_back({"reverse_value_N" + std::to_string(row.n), 0.25, row.reverse_value, 0.0});
  }
  g.details["rows"] = rows;
  return g;
}

}  // namespace

bool GoldenCheck::pass() const {
  return tolerance == 0.0 ? actual == expected : std::abs(actual - expected) <= tolerance;
}

bool GoldenReport::pass() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.pass()) return false;
  }
  return true;
}

const std::vector<std::string_view>& golden_names() {
  static const std::vector<std::string_view> names{"linf-necessity", "linf-sufficiency", "left-isometry-3d",
                                                   "right-diagonal-3d", "truncation"};
  return names;
}

std::string_view linf_fixture_text(std::string_view example, char which) {
  if (example == "linf-necessity") return which == 'T' ? kNecessityT : kNecessityA;
  if (example == "linf-sufficiency") return which == 'T' ? kSufficiencyT : kSufficiencyA;
  throw Error(ErrorCode::invalid_argument, "no fixture named " + std::string(example));
}

GoldenReport reproduce(std::string_view name, const RhoOptions& opts) {
  if (name == "linf-necessity") return linf_necessity();
  if (name == "linf-sufficiency") return linf_sufficiency();
  if (name == "left-isometry-3d") return left_isometry_3d(opts);
  if (name == "right-diagonal-3d") return right_diagonal_3d(opts);
  if (name == "truncation") return truncation();
  throw Error(ErrorCode::invalid_argument, "unknown golden " + std::string(name));
}

void to_json(Json& j, const GoldenCheck& c) {
  j = Json{{"quantity", c.quantity},
           {"expected", c.expected},
           {"actual", c.actual},
           {"tolerance", c.tolerance},
           {"pass", c.pass()}};
}

void to_json(Json& j, const GoldenReport& r) {
  j = Json{{"name", r.name}, {"pass", r.pass()}, {"checks", r.checks}, {"details", r.details}};
}

}  // namespace rhosym::cli
