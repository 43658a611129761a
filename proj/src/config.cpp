#include "kov/config.hpp"

#include <algorithm>
#include <fstream>

#include "kov/errors.hpp"

namespace kov {

namespace {

Rational rational_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing key '") + key + "'");
  const auto& v = j.at(key);
  try {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
  throw ConfigError(std::string("'") + key + "' must be an integer or a rational string");
}

PolyQ entry(const nlohmann::json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return PolyQ(v.get<long>());
    if (v.is_string()) {
      PolyQ p = PolyQ::parse(v.get<std::string>());
      if (p.min_eps_degree() < 0) throw ConfigError(where + ": negative powers are not allowed");
      return p;
    }
  } catch (const ParseError& e) {
    throw ConfigError(where + ": " + e.what());
  }
  throw ConfigError(where + ": entries must be strings or integers");
}

MatPoly matrix_field(const nlohmann::json& v, int n, const std::string& key) {
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    throw ConfigError("'" + key + "' must be an array of " + std::to_string(n) + " rows");
  MatPoly m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = v.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ConfigError("'" + key + "' row " + std::to_string(i + 1) + " must have " +
                        std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j)
      m(i, j) = entry(row.at(static_cast<std::size_t>(j)),
                      key + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
  }
  return m;
}

}  // namespace

SystemSpec system_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("system config must be a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw ConfigError("'n' must be an integer");
  const int n = j.at("n").get<int>();
  if (n < 1 || n > 8) throw ConfigError("'n' must be between 1 and 8");
  SystemSpec s = SystemSpec::make_tail(n, rational_field(j, "alpha"), rational_field(j, "beta"));
  bool any = false;
  for (int i = 0; i < 5; ++i) {
    for (const char side : {'b', 'c'}) {
      const std::string key = side + std::to_string(i + 1);
      if (!j.contains(key)) continue;
      any = true;
      (side == 'b' ? s.b : s.c)[static_cast<std::size_t>(i)] = matrix_field(j.at(key), n, key);
    }
  }
  s.homogeneous = !any;
  if (j.contains("homogeneous")) {
    if (!j.at("homogeneous").is_boolean()) throw ConfigError("'homogeneous' must be a boolean");
    s.homogeneous = j.at("homogeneous").get<bool>();
    if (s.homogeneous && any) throw ConfigError("homogeneous system cannot carry b/c coefficients");
  }
  for (const auto& [key, _] : j.items()) {
    static const std::vector<std::string> known{"n",  "alpha", "beta", "homogeneous", "b1", "b2", "b3",
                                                "b4", "b5",    "c1",   "c2",          "c3", "c4", "c5"};
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigError("unknown key '" + key + "'");
  }
  return s;
}

SystemSpec load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("invalid JSON in " + path + ": " + e.what());
  }
  return system_from_json(j);
}

nlohmann::json system_to_json(const SystemSpec& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["alpha"] = to_string(s.alpha);
  j["beta"] = to_string(s.beta);
  j["homogeneous"] = s.homogeneous;
  if (!s.homogeneous) {
    for (int i = 0; i < 5; ++i) {
      j["b" + std::to_string(i + 1)] = s.b[static_cast<std::size_t>(i)].to_strings();
      j["c" + std::to_string(i + 1)] = s.c[static_cast<std::size_t>(i)].to_strings();
    }
  }
  return j;
}

}  // namespace kov
