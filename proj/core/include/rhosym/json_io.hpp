#pragma once

#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rhosym/linf.hpp"
#include "rhosym/matrix.hpp"
#include "rhosym/properties.hpp"
#include "rhosym/rho.hpp"
#include "rhosym/spectral.hpp"
#include "rhosym/symmetry.hpp"

namespace rhosym {

using Json = nlohmann::json;

/// Parses JSON text; malformed input raises Error(parse_error).
Json parse_json(std::string_view text);

// Matrix: {"rows","cols","field":"real"|"complex","entries":[[re,im],...]},
// row-major. Real matrices also accept bare numbers; output always uses pairs.
void to_json(Json& j, const Matrix& m);
void from_json(const Json& j, Matrix& m);

void to_json(Json& j, const DerivativeReport& r);
void from_json(const Json& j, DerivativeReport& r);
void to_json(Json& j, const OrthogonalityVerdict& v);
void from_json(const Json& j, OrthogonalityVerdict& v);
void to_json(Json& j, const RealExtent& e);
void to_json(Json& j, const RangeSample& r);
void from_json(const Json& j, RangeSample& r);
void to_json(Json& j, const WitnessResult& w);
void from_json(const Json& j, WitnessResult& w);
void to_json(Json& j, const SymmetryProbeReport& r);
void from_json(const Json& j, SymmetryProbeReport& r);
void to_json(Json& j, const WSymmetryReport& r);
void to_json(Json& j, const TruncationRow& r);
void to_json(Json& j, const PropertyResult& r);

/// An ℓ∞ⁿ operator given by images of designated points:
/// {"space":"linf2","images":{"(1,1)":[1,0.5],"(1,-1)":[1,-0.5]}}.
struct LinfFixture {
  std::vector<LinfVector> points;
  std::vector<LinfVector> images;
  LinfOperator op;
};

LinfFixture linf_fixture_from_json(const Json& j);
/// Writes the operator as images of the standard basis vectors.
Json linf_operator_to_json(const LinfOperator& op);

}  // namespace rhosym
