#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gradedbloc/classify.hpp"
#include "gradedbloc/oracle.hpp"

namespace gradedbloc {

using json = nlohmann::json;

/// Structurally malformed input (wrong shape, missing keys, bad numbers).
struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const AbGroup& g);
json to_json(const Elt& x);
json to_json(const QmodZ& q);
json to_json(const FinSubgroup& t);
json to_json(const Bicharacter& b);
json to_json(const Character& c);
json to_json(const CycloNum& c);
json to_json(const Mat& m);
json to_json(const BlockProfile& p);
json to_json(const GradedAlgebra& a);
json to_json(const KappaFn& k);
json to_json(const GradingParams& p);
json to_json(const GradedInvariants& inv);
json to_json(const Witness& w);
json to_json(const VerifyReport& r);
json to_json(const ValidationReport& r);

AbGroup group_from_json(const json& j);
Elt elt_from_json(const json& j, const AbGroup& g);
QmodZ qmodz_from_json(const json& j);
FinSubgroup subgroup_from_json(const json& j, const AbGroup& g);
Bicharacter bicharacter_from_json(const json& j, const FinSubgroup& t);
CycloNum cyclo_from_json(const json& j);
Mat mat_from_json(const json& j);
BlockProfile profile_from_json(const json& j);
GradedAlgebra grading_from_json(const json& j);
KappaFn kappa_from_json(const json& j, const FinSubgroup& t);
GradingParams params_from_json(const json& j);

/// Parses JSON text, mapping syntax errors to MalformedInput.
json parse_json(const std::string& text);
/// Canonical serialization: sorted keys, two-space indentation, trailing newline.
std::string dump_canonical(const json& j);

}  // namespace gradedbloc
