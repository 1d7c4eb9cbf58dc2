#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "superkac/extblocks.hpp"

namespace superkac::io {

using json = nlohmann::json;

/// Input JSON does not match the expected schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Rational& q);
json to_json(const AlgebraId& id);
json to_json(const Root& r);
json to_json(const Weight& w);
json to_json(const Point& p);
json to_json(const ZFunctional& theta);
json to_json(const Ideal& I);
json to_json(const LocalFactor& f);
json to_json(const ModuleDescriptor& d);
json to_json(const FormalCharacter& ch);
json to_json(const ExtAnswer& a);
json to_json(const HighestWeightData& hw);
json to_json(const BorelChoice& b);
json to_json(const SpectralCharacter& chi);

/// Rationals are "p/q" or "p" strings; plain JSON integers are accepted too.
Rational rational_from(const json& j);
AlgebraId algebra_from(const json& j);
Root root_from(const json& j, const AlgebraId& id);
Weight weight_from(const json& j, const AlgebraId& id);
Point point_from(const json& j);
ZFunctional functional_from(const json& j);
/// {"r","n","basis":[[rats]]} or {"r","n","power_of_max":k}.
Ideal ideal_from(const json& j);
/// "trivial" or a weight object; the z entry may be omitted.
G0IrrepLabel vlabel_from(const json& j, const AlgebraId& id);
LocalFactor factor_from(const json& j, const AlgebraId& id);
/// {"algebra":…,"factors":[…]}; fallback is used when "algebra" is absent. The result is normalized.
ModuleDescriptor descriptor_from(const json& j, const AlgebraId* fallback = nullptr);
HighestWeightData highest_weight_from(const json& j, const AlgebraId& id);
Universe universe_from(const json& j, const AlgebraId& id);

}  // namespace superkac::io
