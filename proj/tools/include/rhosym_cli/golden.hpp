#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <rhosym/json_io.hpp>
#include <rhosym/rho.hpp>

namespace rhosym::cli {

struct GoldenCheck {
  std::string quantity;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;  // absolute; 0 demands bit-exact equality

  bool pass() const;
};

struct GoldenReport {
  std::string name;
  std::vector<GoldenCheck> checks;
  Json details = Json::object();

  bool pass() const;
};

const std::vector<std::string_view>& golden_names();

/// Recomputes a named reference result from scratch. Unknown names raise
/// Error(invalid_argument).
GoldenReport reproduce(std::string_view name, const RhoOptions& opts = {});

/// Embedded ℓ∞² fixtures for the two reference examples, in the fixture schema.
std::string_view linf_fixture_text(std::string_view example, char which);

void to_json(Json& j, const GoldenCheck& c);
void to_json(Json& j, const GoldenReport& r);

}  // namespace rhosym::cli
