#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ahlfors/domain.hpp"

namespace ahlfors {

/// Parse the JSON domain specification:
///
///   {"variant": "unit_disk" | "exterior_unit_disk" | "circle_domain" | "real_slit",
///    "outer": {"center":[x,y],"radius":r},   // circle_domain only
///    "holes": [{"center":[x,y],"radius":r}], // circle_domain only
///    "slits": [[a,b],...]}                   // real_slit only
///
/// Unknown fields are rejected (GeometryError).
Domain parse_domain(const nlohmann::json& j);

/// Reads and parses a domain file. Missing/unreadable file -> IoError;
/// malformed JSON or bad schema -> GeometryError.
Domain parse_domain_file(const std::string& path);

}  // namespace ahlfors
