#include "cslosc/config.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace cslosc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void apply_key(Defaults& d, const std::string& key, const std::string& value) {
  auto num = [&]() {
    std::size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw ConfigError("bad number for " + key);
    return v;
  };

  static const std::string dw_fields[] = {"mu", "q0_angstrom", "omega_x",
                                          "v0_ev", "omega_0"};
  auto set_doublewell = [&](DoubleWellSpec& spec,
                            const std::string& field) -> bool {
    if (field == "mu") spec.mu = num();
    else if (field == "q0_angstrom") spec.q0 = num() * constants::angstrom_cm;
    else if (field == "omega_x") spec.omega_x = num();
    else if (field == "v0_ev") spec.v0 = num();
    else if (field == "omega_0") spec.omega_0 = num();
    else return false;
    return true;
  };

  if (key == "csl.gamma") d.csl.gamma = num();
  else if (key == "csl.r_c") d.csl.r_c = num();
  else if (key == "csl.m0") d.csl.m0 = num();
  else if (key == "neutrino.dm2_solar") d.neutrino_dm2_solar = num();
  else if (key == "neutrino.dm2_atmospheric") d.neutrino_dm2_atmospheric = num();
  else if (key == "neutrino.atmosphere_time") d.neutrino_atmosphere_time = num();
  else if (key.starts_with("meson.") && key.ends_with(".delta_m_mev")) {
    const std::string name =
        key.substr(6, key.size() - 6 - std::string(".delta_m_mev").size());
    d.meson_delta_m_mev[name] = num();
  } else if (key == "decoherence.sigma_min") d.sigma_dec_min = num();
  else if (key == "decoherence.sigma_max") d.sigma_dec_max = num();
  else if (key == "decoherence.gas_velocity") d.gas_velocity = num();
  else if (key == "decoherence.density_uhv") d.density_uhv = num();
  else if (key == "decoherence.density_cryo") d.density_cryo = num();
  else if (key == "zeta.mean") d.zeta.zeta_mean = num();
  else if (key == "zeta.sigma_stat") d.zeta.sigma_stat = num();
  else if (key == "zeta.sigma_syst") d.zeta.sigma_syst = num();
  else if (key == "zeta.confidence") d.zeta.confidence_level = num();
  else if (key == "zeta.timescale") d.zeta.timescale_s = num();
  else if (key == "fixtures.left") d.fixture_left = value;
  else if (key == "fixtures.right") d.fixture_right = value;
  else if (key.starts_with("doublewell.")) {
    const auto rest = key.substr(11);
    const auto dot = rest.find('.');
    if (dot == std::string::npos) throw ConfigError("unknown key: " + key);
    const std::string name = rest.substr(0, dot);
    const std::string field = rest.substr(dot + 1);
    DoubleWellSpec* spec = nullptr;
    if (name == "ammonia") spec = &d.ammonia;
    else if (name == "carboxylic_dimer") spec = &d.carboxylic_dimer;
    else if (name == "ru_d2") spec = &d.ru_d2;
    else if (name == "sulfoxide_like") spec = &d.sulfoxide_like;
    if (!spec || !set_doublewell(*spec, field)) {
      throw ConfigError("unknown key: " + key);
    }
  } else {
    throw ConfigError("unknown key: " + key);
  }
}

}  // namespace

void apply_config_text(Defaults& d, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      apply_key(d, key, value);
    } catch (const std::invalid_argument&) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": bad value for " + key);
    }
  }
}

void apply_config_file(Defaults& d, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open defaults file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  apply_config_text(d, buf.str());
}

Defaults load_defaults(const std::string& path) {
  Defaults d;
  d.zeta = ZetaMeasurement{0.003, 0.018, 0.006, 0.90, 0.8954e-10};
  if (const char* env = std::getenv("CSLOSC_DEFAULTS"); env && *env) {
    apply_config_file(d, env);
  }
  if (!path.empty()) apply_config_file(d, path);
  return d;
}

}  // namespace cslosc
