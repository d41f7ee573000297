#pragma once

#include <string>

#include <json.hpp>

#include "rydssh/config.hpp"

#ifndef RYDSSH_CONFIG_DIR
#define RYDSSH_CONFIG_DIR "configs"
#endif

namespace testsupport {

inline std::string config_path() {
  return std::string(RYDSSH_CONFIG_DIR) + "/chain20.json";
}

// The shipped 20-cell parameter set, loaded once.
inline const ryd::Params& chain20() {
  static const ryd::Params p = ryd::load_params(config_path());
  return p;
}

// Same parameters as a mutable JSON tree, for building config variants.
inline nlohmann::json chain20_json() {
  static const nlohmann::json base = nlohmann::json::parse(chain20().canonical_json);
  return base;
}

}  // namespace testsupport
