#pragma once

// Runtime defaults: collapse constants, particle-data inputs, medium
// coefficients and fixture paths. Shipped values are compiled in; a
// plain-text key=value file (or the CSLOSC_DEFAULTS env var) overrides
// individual entries.

#include <map>
#include <string>

#include "cslosc/decoherence.hpp"
#include "cslosc/rates.hpp"
#include "cslosc/units.hpp"

namespace cslosc {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Defaults {
  CslParams csl;

  // Neutrino mass-squared splittings, eV^2. The solar value is the one
  // whose damping coefficient matches 7e-36 at E = 1 eV.
  double neutrino_dm2_solar = 7.6e-5;
  double neutrino_dm2_atmospheric = 2.4e-3;
  double neutrino_atmosphere_time = 1e-4;  // s

  // Meson mass splittings, MeV (particle-data values).
  std::map<std::string, double> meson_delta_m_mev = {
      {"K", 3.48e-12},
      {"B", 3.34e-10},
      {"Bs", 1.17e-8},
      {"D", 1.6e-11},
  };

  // Collisional decoherence inputs. The cross-section band spans the
  // documented molecular range; velocity is a 300 K thermal estimate.
  double sigma_dec_min = 2e-19;  // m^2
  double sigma_dec_max = 2e-17;  // m^2
  double gas_velocity = 500.0;   // m/s
  double density_uhv = 1e10;     // m^-3
  double density_cryo = 1e5;     // m^-3

  ZetaMeasurement zeta;  // KLOE 2-pion value and K_S-lifetime timescale

  // Double-well systems (q0 stored in cm).
  DoubleWellSpec ammonia{3.0, 0.8e-8, 24e9, 0.25, 1.9e14};
  DoubleWellSpec carboxylic_dimer{2.0, 3.2e-8, 1e3, 0.0, 0.0};
  DoubleWellSpec ru_d2{2.0, 2e-8, 1.0, 0.0, 0.0};
  // Effective double well matching the scale of heavy pyramidal
  // sulfoxides; used as the chiral default in comparisons.
  DoubleWellSpec sulfoxide_like{260.0, 5e-8, 1e3, 0.0, 0.0};

  std::string fixture_left = "data/fixtures/ammonia_left.xyz";
  std::string fixture_right = "data/fixtures/ammonia_right.xyz";
};

/// Applies `key = value` lines from text. Unknown keys are rejected.
void apply_config_text(Defaults& d, const std::string& text);

void apply_config_file(Defaults& d, const std::string& path);

/// Shipped defaults, then the CSLOSC_DEFAULTS file if the env var is
/// set, then `path` if non-empty.
Defaults load_defaults(const std::string& path = "");

}  // namespace cslosc
