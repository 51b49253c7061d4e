#pragma once

// Machine-readable rate records emitted by the CLI.

#include <string>

#include <json.hpp>

namespace cslosc {

struct RateReport {
  std::string kind = "collapse";  // "collapse" | "decoherence" | "bound"
  std::string system;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json values = nlohmann::json::object();
  std::string validity = "";  // advisory two-level-reduction verdict

  nlohmann::json to_json() const {
    nlohmann::json j{{"kind", kind}, {"system", system}, {"inputs", inputs}};
    j.update(values);
    if (!validity.empty()) j["validity"] = validity;
    return j;
  }
};

}  // namespace cslosc
