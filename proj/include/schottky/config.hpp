#pragma once

// Configuration documents: {"radius": r}.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "schottky/errors.hpp"
#include "schottky/group.hpp"

namespace schottky {

struct SchottkyConfig {
  double radius = kDefaultRadius;
};

inline SchottkyConfig parse_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed config JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  SchottkyConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (key != "radius") throw ConfigError("unknown config key '" + key + "'");
    if (!value.is_number()) throw ConfigError("config radius must be a number");
    config.radius = value.get<double>();
  }
  if (!(config.radius > 0)) throw ConfigError("config radius must be positive");
  return config;
}

inline SchottkyConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

/// Builds the group, rejecting overlapping circles with the violated
/// inequality.
inline Group build_group(const SchottkyConfig& config) { return Group(config.radius); }

}  // namespace schottky
