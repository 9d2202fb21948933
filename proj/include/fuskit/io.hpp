#pragma once

#include <string>

#include "json.hpp"

#include "fuskit/group.hpp"

namespace fuskit::io {

using json = nlohmann::ordered_json;

/// Load a group from a JSON file ({"name", "degree", "generators"}) or, when
/// `source` is not a readable file, from the fixture catalog by name.
/// Wire-format limits: degree <= 64, at most 16 generators.
GroupPtr load_group(const std::string& source);

/// Parse the wire format from an already-loaded JSON value.
GroupPtr group_from_json(const json& j);

json perm_json(const Perm& p);
Perm perm_from_json(const json& j, std::size_t degree);

/// {"order": n, "generators": [[images]...]}
json subgroup_json(const Subgroup& h);

}  // namespace fuskit::io
