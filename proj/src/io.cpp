#include "fuskit/io.hpp"

#include <fstream>

#include "fuskit/catalog.hpp"

namespace fuskit::io {

json perm_json(const Perm& p) {
  json arr = json::array();
  for (std::size_t i = 0; i < p.degree(); ++i) arr.push_back(p[i]);
  return arr;
}

Perm perm_from_json(const json& j, std::size_t degree) {
  if (!j.is_array() || j.size() != degree)
    throw PreconditionError("permutation must be an image array of length " +
                            std::to_string(degree));
  std::vector<int> images;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() >= degree)
      throw PreconditionError("permutation image out of range");
    images.push_back(v.get<int>());
  }
  return Perm::from_images(images);  // validates bijectivity
}

GroupPtr group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("degree") ||
      !j.contains("generators"))
    throw PreconditionError("group file must have name, degree and generators");
  if (!j["name"].is_string() || !j["degree"].is_number_unsigned())
    throw PreconditionError("bad name or degree in group file");
  std::size_t degree = j["degree"].get<std::size_t>();
  if (degree == 0 || degree > 64)
    throw PreconditionError("degree must lie in 1..64");
  const auto& gens = j["generators"];
  if (!gens.is_array() || gens.size() > 16)
    throw PreconditionError("generators must be an array of at most 16 permutations");
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.push_back(perm_from_json(g, degree));
  return Group::from_generators(j["name"].get<std::string>(), degree,
                                std::move(perms));
}

GroupPtr load_group(const std::string& source) {
  std::ifstream in(source);
  if (in.good()) {
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw PreconditionError(std::string("cannot parse group file: ") + e.what());
    }
    return group_from_json(j);
  }
  return catalog::build(source);
}

json subgroup_json(const Subgroup& h) {
  json j;
  j["order"] = h.order();
  json gens = json::array();
  for (int x : h.small_generating_set())
    gens.push_back(perm_json(h.parent()->element(x)));
  j["generators"] = gens;
  return j;
}

}  // namespace fuskit::io
