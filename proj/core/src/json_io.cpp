#include "rhosym/json_io.hpp"

#include <charconv>
#include <string>

#include "rhosym/error.hpp"

namespace rhosym {
namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
  return j.get<double>();
}

bool boolean(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_boolean()) parse_fail(std::string(key) + " must be a boolean");
  return v.get<bool>();
}

std::size_t count(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    parse_fail(std::string(key) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

Json pair(Scalar z) { return Json::array({z.real(), z.imag()}); }

Scalar scalar_from(const Json& e, Field field) {
  if (e.is_number()) {
    if (field != Field::real) parse_fail("complex entries must be [re, im] pairs");
    return e.get<double>();
  }
  if (!e.is_array() || e.size() != 2) parse_fail("entry must be [re, im]");
  return {number(e[0], "re"), number(e[1], "im")};
}

std::string_view to_string(RangeKind k) {
  return k == RangeKind::numerical_range ? "numerical_range" : "maximal_numerical_range";
}

std::string_view to_string(WitnessDirection d) { return d == WitnessDirection::left ? "left" : "right"; }

// "(1,-1)" → {1, -1}
LinfVector parse_point(const std::string& key) {
  if (key.size() < 2 || key.front() != '(' || key.back() != ')') parse_fail("point key must look like (a,b)");
  LinfVector out;
  std::size_t pos = 1;
  while (pos < key.size() - 1) {
    std::size_t end = key.find(',', pos);
    if (end == std::string::npos) end = key.size() - 1;
    std::string token = key.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    double value = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || res.ec != std::errc() || res.ptr != token.data() + token.size()) {
      parse_fail("bad coordinate in point key " + key);
    }
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

std::string format_point(const LinfVector& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) s += ',';
    s += Json(p[k]).dump();
  }
  return s + ")";
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    parse_fail(e.what());
  }
}

void to_json(Json& j, const Matrix& m) {
  Json entries = Json::array();
  for (Scalar z : m.entries()) entries.push_back(pair(z));
  j = Json{{"rows", m.rows()},
           {"cols", m.cols()},
           {"field", m.field() == Field::real ? "real" : "complex"},
           {"entries", std::move(entries)}};
}

void from_json(const Json& j, Matrix& m) {
  const std::size_t rows = count(j, "rows");
  const std::size_t cols = count(j, "cols");
  const Json& field_json = member(j, "field");
  if (!field_json.is_string()) parse_fail("field must be a string");
  const std::string field_name = field_json.get<std::string>();
  Field field;
  if (field_name == "real") {
    field = Field::real;
  } else if (field_name == "complex") {
    field = Field::complex;
  } else {
    parse_fail("field must be \"real\" or \"complex\"");
  }
  const Json& entries = member(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols) parse_fail("entries must hold rows·cols values");
  std::vector<Scalar> values;
  values.reserve(entries.size());
  for (const Json& e : entries) values.push_back(scalar_from(e, field));
  try {
    m = Matrix(rows, cols, std::move(values), field);
  } catch (const Error& e) {
    parse_fail(e.what());
  }
  if (!m.has_only_finite_entries()) parse_fail("non-finite entry");
}

void to_json(Json& j, const DerivativeReport& r) {
  j = Json{{"rho_plus", r.rho_plus}, {"rho_minus", r.rho_minus}, {"rho", r.rho}, {"norm_T", r.norm_t}};
}

void from_json(const Json& j, DerivativeReport& r) {
  r.rho_plus = number(member(j, "rho_plus"), "rho_plus");
  r.rho_minus = number(member(j, "rho_minus"), "rho_minus");
  r.rho = number(member(j, "rho"), "rho");
  r.norm_t = number(member(j, "norm_T"), "norm_T");
}

void to_json(Json& j, const OrthogonalityVerdict& v) {
  j = Json{{"rho_orthogonal", v.rho_orthogonal}, {"bj_orthogonal", v.bj_orthogonal}, {"report", v.report}, {"scale", v.scale}};
}

void from_json(const Json& j, OrthogonalityVerdict& v) {
  v.rho_orthogonal = boolean(j, "rho_orthogonal");
  v.bj_orthogonal = boolean(j, "bj_orthogonal");
  v.report = member(j, "report").get<DerivativeReport>();
  v.scale = number(member(j, "scale"), "scale");
}

void to_json(Json& j, const RealExtent& e) { j = Json{{"lo", e.lo}, {"hi", e.hi}}; }

void to_json(Json& j, const RangeSample& r) {
  Json boundary = Json::array();
  for (Scalar z : r.boundary_points) boundary.push_back(pair(z));
  j = Json{{"kind", to_string(r.kind)},
           {"theta", r.thetas},
           {"boundary", std::move(boundary)},
           {"support", r.support_values},
           {"extent", real_extent(r)}};
}

void from_json(const Json& j, RangeSample& r) {
  const Json& kind = member(j, "kind");
  if (kind == "numerical_range") {
    r.kind = RangeKind::numerical_range;
  } else if (kind == "maximal_numerical_range") {
    r.kind = RangeKind::maximal_numerical_range;
  } else {
    parse_fail("unknown range kind");
  }
  const Json& theta = member(j, "theta");
  const Json& boundary = member(j, "boundary");
  const Json& support = member(j, "support");
  if (!theta.is_array() || !boundary.is_array() || !support.is_array() || theta.size() != boundary.size() ||
      theta.size() != support.size()) {
    parse_fail("theta, boundary and support must be arrays of equal length");
  }
  r.thetas.clear();
  r.boundary_points.clear();
  r.support_values.clear();
  for (std::size_t k = 0; k < theta.size(); ++k) {
    r.thetas.push_back(number(theta[k], "theta"));
    r.boundary_points.push_back(scalar_from(boundary[k], Field::complex));
    r.support_values.push_back(number(support[k], "support"));
  }
}

void to_json(Json& j, const WitnessResult& w) {
  j = Json{{"direction", to_string(w.direction)},
           {"construction_tag", w.construction_tag},
           {"verified", w.verified},
           {"operator", w.op},
           {"witness", w.witness},
           {"forward_verdict", w.forward_verdict},
           {"reverse_verdict", w.reverse_verdict}};
}

void from_json(const Json& j, WitnessResult& w) {
  const Json& direction = member(j, "direction");
  if (direction == "left") {
    w.direction = WitnessDirection::left;
  } else if (direction == "right") {
    w.direction = WitnessDirection::right;
  } else {
    parse_fail("direction must be left or right");
  }
  const Json& tag = member(j, "construction_tag");
  if (!tag.is_string()) parse_fail("construction_tag must be a string");
  w.construction_tag = tag.get<std::string>();
  w.verified = boolean(j, "verified");
  w.op = member(j, "operator").get<Matrix>();
  w.witness = member(j, "witness").get<Matrix>();
  w.forward_verdict = member(j, "forward_verdict").get<OrthogonalityVerdict>();
  w.reverse_verdict = member(j, "reverse_verdict").get<OrthogonalityVerdict>();
}

void to_json(Json& j, const SymmetryProbeReport& r) {
  j = Json{{"trials", r.trials}, {"failures", r.failures}, {"discarded", r.discarded}};
  j["first_counterexample"] = r.first_counterexample ? Json(*r.first_counterexample) : Json(nullptr);
}

void from_json(const Json& j, SymmetryProbeReport& r) {
  r.trials = count(j, "trials");
  r.failures = count(j, "failures");
  r.discarded = count(j, "discarded");
  const Json& first = member(j, "first_counterexample");
  r.first_counterexample = first.is_null() ? std::nullopt : std::optional<Matrix>(first.get<Matrix>());
}

void to_json(Json& j, const WSymmetryReport& r) {
  j = Json{{"w_symmetric", r.w_symmetric}, {"all_theta_orthogonal", r.all_theta_orthogonal}, {"max_gap", r.max_gap}};
  j["first_failing_theta"] = r.first_failing_theta ? Json(*r.first_failing_theta) : Json(nullptr);
}

void to_json(Json& j, const TruncationRow& r) {
  j = Json{{"N", r.n}, {"band_value", r.band_value}, {"reverse_value", r.reverse_value}, {"band_size", r.band_size}};
}

void to_json(Json& j, const PropertyResult& r) {
  j = Json{{"name", r.name}, {"cases", r.cases}, {"violations", r.violations}, {"max_error", r.max_error},
           {"passed", r.passed()}};
}

LinfFixture linf_fixture_from_json(const Json& j) {
  const Json& space = member(j, "space");
  if (!space.is_string()) parse_fail("space must be a string");
  const std::string name = space.get<std::string>();
  if (name.rfind("linf", 0) != 0 || name.size() == 4) parse_fail("space must be linfN");
  std::size_t n = 0;
  const auto res = std::from_chars(name.data() + 4, name.data() + name.size(), n);
  if (res.ec != std::errc() || res.ptr != name.data() + name.size() || n == 0) parse_fail("space must be linfN");

  const Json& images = member(j, "images");
  if (!images.is_object() || images.size() != n) parse_fail("images must map n points to their images");
  LinfFixture f;
  for (const auto& [key, value] : images.items()) {
    LinfVector p = parse_point(key);
    if (p.size() != n) parse_fail("point " + key + " has the wrong dimension");
    if (!value.is_array() || value.size() != n) parse_fail("image of " + key + " has the wrong dimension");
    LinfVector img;
    for (const Json& e : value) img.push_back(number(e, "image coordinate"));
    f.points.push_back(std::move(p));
    f.images.push_back(std::move(img));
  }
  try {
    f.op = LinfOperator::from_extreme_images(f.points, f.images);
  } catch (const Error& e) {
    parse_fail(e.what());
  }
  return f;
}

Json linf_operator_to_json(const LinfOperator& op) {
  Json images = Json::object();
  for (std::size_t k = 0; k < op.cols(); ++k) {
    LinfVector e(op.cols(), 0.0);
    e[k] = 1.0;
    LinfVector col(op.rows());
    for (std::size_t i = 0; i < op.rows(); ++i) col[i] = op(i, k);
    images[format_point(e)] = col;
  }
  return Json{{"space", "linf" + std::to_string(op.cols())}, {"images", std::move(images)}};
}

}  // namespace rhosym
