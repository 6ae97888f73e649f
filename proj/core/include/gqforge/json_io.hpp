#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gqforge/construction.hpp"
#include "gqforge/group.hpp"
#include "gqforge/identities.hpp"
#include "gqforge/incidence.hpp"
#include "gqforge/permutation.hpp"
#include "gqforge/sieve.hpp"
#include "gqforge/suzuki.hpp"

namespace gqforge::json_io {

using nlohmann::json;

/// Parses JSON text; syntax errors become InvalidInput naming the source,
/// line and column.
json parse(std::string_view text, const std::string& source = "<input>");
json load_file(const std::string& path);

/// {"order": n, "table": [[...]], "name": optional}
json to_json(const FiniteGroup& group);
FiniteGroup group_from_json(const json& j);

/// "cyclic:n", "product:SPEC,SPEC" or "file:path" (group JSON).
FiniteGroup parse_group_spec(std::string_view spec);

/// {"num_points": N, "lines": [[...]], "name": optional}
json to_json(const IncidenceStructure& q);
IncidenceStructure incidence_from_json(const json& j);

json to_json(const GQCertificate& cert);
json to_json(const GQViolation& violation);
json to_json(const GQCheck& check);
json to_json(const ParameterCheck& check, std::uint64_t s, std::uint64_t t);
json to_json(const PermutationGroup& group);
json to_json(const Isomorphism& iso);
json to_json(const Polarity& polarity);

/// {"degree": N, "perms": [[...], ...]}; perms[g] is the map of element g.
json action_to_json(const std::vector<Permutation>& action);
std::vector<Permutation> action_from_json(const json& j);

json to_json(const RegularSubgroup& sub);

/// {"group": <group JSON>, "sigma": [...]}
json sigma_to_json(const FiniteGroup& group, const SigmaSet& sigma);
json to_json(const AxiomReport& report);

/// Embeds the group so that a profile file is self-contained.
json to_json(const DeltaProfile& profile, const FiniteGroup& group);
std::pair<DeltaProfile, FiniteGroup> delta_profile_from_json(const json& j);
json to_json(const YoshiaraReport& report);

json to_json(const SieveVerdict& verdict);
json to_json(const SieveSummary& summary);
json to_json(const FeasibilityReport& report);
json to_json(const IdentityReport& report);

/// Reads a required field, throwing InvalidInput when it is missing or has
/// the wrong type.
template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

}  // namespace gqforge::json_io
