#include "ahlfors/domain_json.hpp"

#include <fstream>
#include <set>

#include "ahlfors/errors.hpp"

namespace ahlfors {
namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const std::set<std::string>& required, const char* where) {
  if (!j.is_object()) throw GeometryError(std::string(where) + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) {
      throw GeometryError(std::string(where) + ": unknown field \"" + key + "\"");
    }
  }
  for (const auto& key : required) {
    if (!j.contains(key)) {
      throw GeometryError(std::string(where) + ": missing field \"" + key + "\"");
    }
  }
}

Complex parse_point(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw GeometryError(std::string(where) + ": expected [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Circle parse_circle(const json& j, const char* where) {
  require_keys(j, {"center", "radius"}, {"center", "radius"}, where);
  if (!j["radius"].is_number()) {
    throw GeometryError(std::string(where) + ": radius must be a number");
  }
  return {parse_point(j["center"], where), j["radius"].get<double>()};
}

}  // namespace

Domain parse_domain(const json& j) {
  if (!j.is_object() || !j.contains("variant") || !j["variant"].is_string()) {
    throw GeometryError("domain spec: missing string field \"variant\"");
  }
  const std::string variant = j["variant"].get<std::string>();
  if (variant == "unit_disk") {
    require_keys(j, {"variant"}, {"variant"}, "unit_disk");
    return Domain::unit_disk();
  }
  if (variant == "exterior_unit_disk") {
    require_keys(j, {"variant"}, {"variant"}, "exterior_unit_disk");
    return Domain::exterior_unit_disk();
  }
  if (variant == "circle_domain") {
    require_keys(j, {"variant", "outer", "holes"}, {"variant", "outer", "holes"},
                 "circle_domain");
    if (!j["holes"].is_array()) throw GeometryError("circle_domain: holes must be an array");
    std::vector<Circle> holes;
    for (const auto& h : j["holes"]) holes.push_back(parse_circle(h, "hole"));
    return Domain::circle_domain(parse_circle(j["outer"], "outer"), std::move(holes));
  }
  if (variant == "real_slit") {
    require_keys(j, {"variant", "slits"}, {"variant", "slits"}, "real_slit");
    if (!j["slits"].is_array()) throw GeometryError("real_slit: slits must be an array");
    std::vector<std::pair<double, double>> iv;
    for (const auto& s : j["slits"]) {
      if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number()) {
        throw GeometryError("real_slit: each slit must be [a, b]");
      }
      iv.emplace_back(s[0].get<double>(), s[1].get<double>());
    }
    return Domain::real_slit_complement(RealSlitSet(std::move(iv)));
  }
  throw GeometryError("domain spec: unknown variant \"" + variant + "\"");
}

Domain parse_domain_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open domain file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw GeometryError(std::string("domain file is not valid JSON: ") + e.what());
  }
  return parse_domain(j);
}

}  // namespace ahlfors
