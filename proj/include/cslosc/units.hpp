#pragma once

// Physical constants, unit tags and the CSL parameter set.
//
// Canonical internal units: cm (length), amu (mass), Hz (rate),
// eV (particle energy), s (time). Every constant used by the other
// modules lives here.

#include <cmath>
#include <stdexcept>
#include <string>

namespace cslosc {

namespace constants {

// CODATA mass-energy conversion, eV per amu.
inline constexpr double amu_ev = 931.494e6;
inline constexpr double amu_mev = 931.494;

// Boltzmann constant, eV/K.
inline constexpr double k_boltzmann_ev = 8.617333262e-5;

// Reduced Planck constant, eV*s.
inline constexpr double hbar_ev_s = 6.582119569e-16;

// Angstrom in cm.
inline constexpr double angstrom_cm = 1e-8;

// Speed of light, m/s.
inline constexpr double c_m_s = 2.99792458e8;

// Adler's proposed collapse strength, cm^3/s.
inline constexpr double gamma_adler = 1e-22;
// Ghirardi-Pearle-Rimini value, cm^3/s.
inline constexpr double gamma_grw = 1e-30;
// CSL correlation length, cm.
inline constexpr double r_c_default = 1e-5;

}  // namespace constants

class UnitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSL phenomenological constants. Lambda is always recomputed from
/// gamma and r_C, never stored.
struct CslParams {
  double gamma = constants::gamma_adler;  // cm^3/s
  double r_c = constants::r_c_default;    // cm
  double m0 = 1.0;                        // amu

  void validate() const {
    if (!(gamma > 0.0) || !(r_c > 0.0) || !(m0 > 0.0)) {
      throw InvalidParameter("CslParams: gamma, r_C and m0 must be positive");
    }
  }

  /// Reduced collapse rate Lambda = gamma / (8 pi^{3/2} r_C^3), Hz.
  double lambda() const {
    validate();
    return gamma / (8.0 * std::pow(M_PI, 1.5) * r_c * r_c * r_c);
  }
};

inline double derive_lambda(const CslParams& p) { return p.lambda(); }

enum class Unit {
  hertz,
  second,
  electronvolt,
  megaelectronvolt,
  amu,
  centimeter,
  angstrom,
  per_cubic_meter,
  cm3_per_second,
  dimensionless,
};

std::string unit_name(Unit u);
Unit parse_unit(const std::string& name);

struct UnitValue {
  double magnitude = 0.0;
  Unit unit = Unit::dimensionless;
};

/// Rescales a value to the target unit. Mass <-> energy conversion is
/// allowed through amu <-> 931.494 MeV; anything else must share a
/// dimension or a UnitError is thrown.
UnitValue convert(const UnitValue& x, Unit target);

}  // namespace cslosc
