#include "rhosym_cli/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>
#include <vector>

#include <rhosym/error.hpp>
#include <rhosym/json_io.hpp>
#include <rhosym/properties.hpp>
#include <rhosym/spectral.hpp>
#include <rhosym/symmetry.hpp>

#include "rhosym_cli/golden.hpp"

namespace rhosym::cli {
namespace {

struct Settings {
  std::optional<double> tol;
  std::size_t samples = 256;
  std::uint64_t seed = 0;
  std::string field;
  bool csv = false;

  RhoOptions rho() const {
    RhoOptions o;
    if (tol) o.tol.ortho_decision = *tol;
    o.samples = samples;
    return o;
  }
};

using Operand = std::variant<Matrix, LinfOperator>;

Json load_json(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return parse_json(source);
  std::ifstream in(source);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read " + source);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

Matrix apply_field(Matrix m, const Settings& s) {
  if (s.field == "complex") {
    m.promote();
  } else if (s.field == "real" && m.field() == Field::complex) {
    if (m.settle_field().field() == Field::complex) {
      throw Error(ErrorCode::parse_error, "--field real given but the matrix has imaginary parts");
    }
  }
  return m;
}

Operand load_operand(const std::string& source, const Settings& s) {
  const Json j = load_json(source);
  if (j.is_object() && j.contains("space")) {
    if (s.field == "complex") throw Error(ErrorCode::parse_error, "ℓ∞ fixtures are real");
    return linf_fixture_from_json(j).op;
  }
  return apply_field(j.get<Matrix>(), s);
}

Matrix load_matrix(const std::string& source, const Settings& s) {
  Operand op = load_operand(source, s);
  if (!std::holds_alternative<Matrix>(op)) throw Error(ErrorCode::parse_error, source + " is not a Hilbert-space matrix");
  return std::get<Matrix>(op);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int derivative_or_check(const std::string& t_src, const std::string& a_src, bool verdict, const Settings& s,
                        std::ostream& out) {
  const Operand t = load_operand(t_src, s);
  const Operand a = load_operand(a_src, s);
  if (t.index() != a.index()) throw Error(ErrorCode::parse_error, "T and A must live on the same space");
  const RhoOptions opts = s.rho();
  if (const auto* tm = std::get_if<Matrix>(&t)) {
    const Matrix& am = std::get<Matrix>(a);
    if (verdict) {
      emit(out, is_rho_orthogonal(*tm, am, opts));
    } else {
      emit(out, rho_operator(*tm, am, opts));
    }
    return exit_ok;
  }
  const LinfOperator& tl = std::get<LinfOperator>(t);
  const LinfOperator& al = std::get<LinfOperator>(a);
  if (verdict) {
    emit(out, linf_verdict(tl, al, opts.tol));
  } else {
    emit(out, tl.is_zero() ? DerivativeReport{} : rho_pm_linf_op(tl, al));
  }
  return exit_ok;
}

int emit_range(const RangeSample& r, const Settings& s, std::ostream& out) {
  if (s.csv) {
    write_csv(r, out);
  } else {
    emit(out, r);
  }
  return exit_ok;
}

int selftest(std::size_t cases, const Settings& s, std::ostream& out) {
  PropertyConfig cfg;
  cfg.samples = cases;
  cfg.seed = s.seed;
  cfg.tol = s.rho().tol;
  bool pass = true;
  Json properties = Json::array();
  for (const auto& r : all_property_suites(cfg)) {
    pass = pass && r.passed();
    properties.push_back(r);
  }
  Json goldens = Json::array();
  for (std::string_view name : golden_names()) {
    const GoldenReport g = reproduce(name, s.rho());
    pass = pass && g.pass();
    goldens.push_back(Json{{"name", g.name}, {"pass", g.pass()}, {"checks", g.checks}});
  }
  emit(out, Json{{"pass", pass}, {"properties", properties}, {"goldens", goldens}});
  return pass ? exit_ok : exit_golden_mismatch;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norm-derivative orthogonality, numerical ranges and symmetry witnesses", "rhosym"};
  app.require_subcommand(1, 1);

  Settings s;
  app.add_option("--tol", s.tol, "Orthogonality decision tolerance, relative to ‖T‖‖A‖")->check(CLI::Range(0.0, 1e-2));
  app.add_option("--samples", s.samples, "θ-grid size for range sweeps")->check(CLI::Range(8, 1 << 20));
  app.add_option("--seed", s.seed, "Seed for randomized commands");
  app.add_option("--field", s.field, "Force the scalar field of input matrices")->check(CLI::IsMember({"real", "complex"}));
  app.add_flag("--csv", s.csv, "Emit range samples as CSV (theta,re,im,support)");

  std::string t_src;
  std::string a_src;
  std::string direction;
  std::string golden;
  std::string partner = "gaussian";
  std::size_t trials = 200;
  std::size_t cases = 50;

  auto* derivative = app.add_subcommand("derivative", "ρ'₊, ρ'₋ and ρ' of T in the direction A")->fallthrough();
  derivative->add_option("T", t_src, "Matrix JSON, ℓ∞ fixture, or file")->required();
  derivative->add_option("A", a_src, "Matrix JSON, ℓ∞ fixture, or file")->required();

  auto* check = app.add_subcommand("check", "ρ- and Birkhoff-James orthogonality of T to A")->fallthrough();
  check->add_option("T", t_src)->required();
  check->add_option("A", a_src)->required();

  auto* numrange = app.add_subcommand("numrange", "Sampled boundary of W(A)")->fallthrough();
  numrange->add_option("A", a_src)->required();

  auto* maxrange = app.add_subcommand("maxrange", "Sampled boundary of W_T(A*T)")->fallthrough();
  maxrange->add_option("T", t_src)->required();
  maxrange->add_option("A", a_src)->required();

  auto* witness = app.add_subcommand("witness", "Operator witnessing failure of left/right symmetry")->fallthrough();
  witness->add_option("direction", direction)->required()->check(CLI::IsMember({"left", "right"}));
  witness->add_option("T", t_src)->required();

  auto* probe = app.add_subcommand("probe", "Randomized search for symmetry failures")->fallthrough();
  probe->add_option("direction", direction)->required()->check(CLI::IsMember({"left", "right"}));
  probe->add_option("T", t_src)->required();
  probe->add_option("--trials", trials, "Number of partners tested")->check(CLI::Range(1, 1000000));
  probe->add_option("--partner", partner, "Partner distribution")->check(CLI::IsMember({"gaussian", "self-adjoint"}));

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Recompute a named reference result")->fallthrough();
  std::vector<std::string> names(golden_names().begin(), golden_names().end());
  reproduce_cmd->add_option("name", golden)->required()->check(CLI::IsMember(names));

  auto* selftest_cmd = app.add_subcommand("selftest", "Run every invariant suite and reference result")->fallthrough();
  selftest_cmd->add_option("--cases", cases, "Random cases per suite")->check(CLI::Range(1, 100000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_parse_error;
  }

  try {
    if (derivative->parsed()) return derivative_or_check(t_src, a_src, false, s, out);
    if (check->parsed()) return derivative_or_check(t_src, a_src, true, s, out);
    if (numrange->parsed()) return emit_range(numerical_range(load_matrix(a_src, s), s.samples), s, out);
    if (maxrange->parsed()) {
      const RhoOptions opts = s.rho();
      return emit_range(maximal_numerical_range(load_matrix(t_src, s), load_matrix(a_src, s), opts.tol, s.samples), s,
                        out);
    }
    if (witness->parsed()) {
      const Matrix t = load_matrix(t_src, s);
      const auto w = direction == "left" ? left_witness(t, s.rho()) : right_witness(t, s.rho());
      emit(out, w ? Json(*w) : Json{{"witness", nullptr}});
      return exit_ok;
    }
    if (probe->parsed()) {
      ProbeOptions po;
      po.trials = trials;
      po.seed = s.seed;
      po.rho = s.rho();
      po.partner = partner == "self-adjoint" ? PartnerKind::self_adjoint : PartnerKind::gaussian;
      const Matrix t = load_matrix(t_src, s);
      emit(out, direction == "left" ? probe_left_symmetry(t, po) : probe_right_symmetry(t, po));
      return exit_ok;
    }
    if (reproduce_cmd->parsed()) {
      const GoldenReport g = reproduce(golden, s.rho());
      emit(out, g);
      if (!g.pass()) {
        err << "reference values for " << golden << " do not match\n";
        return exit_golden_mismatch;
      }
      return exit_ok;
    }
    if (selftest_cmd->parsed()) return selftest(cases, s, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.is_numerical() ? exit_numerical_failure : exit_parse_error;
  } catch (const Json::exception& e) {
    err << "parse_error: " << e.what() << '\n';
    return exit_parse_error;
  }
  err << "no command given\n";
  return exit_parse_error;
}

}  // namespace rhosym::cli
