#pragma once

#include <string>

#include "json.hpp"
#include "kov/system.hpp"

namespace kov {

/// Reads a SystemSpec from JSON:
///   {"n": 2, "alpha": "0", "beta": "-3", "homogeneous": false,
///    "b5": [["h11", "0"], ["0", "-1/2"]], "c3": ..., ...}
/// alpha/beta are rational strings (or integers). Each of b1..b5, c1..c5 is
/// optional (default zero) and is an n x n nested array whose entries are
/// polynomial texts or integers. "homogeneous" defaults to false when any
/// coefficient matrix is given, true otherwise. Throws ConfigError.
SystemSpec system_from_json(const nlohmann::json& j);
SystemSpec load_system_file(const std::string& path);

/// Inverse of system_from_json.
nlohmann::json system_to_json(const SystemSpec& s);

}  // namespace kov
