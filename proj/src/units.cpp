#include "cslosc/units.hpp"

#include <array>
#include <utility>

namespace cslosc {

namespace {

enum class Dimension { rate, time, energy, mass, length, density, volume_rate, none };

Dimension dimension_of(Unit u) {
  switch (u) {
    case Unit::hertz: return Dimension::rate;
    case Unit::second: return Dimension::time;
    case Unit::electronvolt:
    case Unit::megaelectronvolt: return Dimension::energy;
    case Unit::amu: return Dimension::mass;
    case Unit::centimeter:
    case Unit::angstrom: return Dimension::length;
    case Unit::per_cubic_meter: return Dimension::density;
    case Unit::cm3_per_second: return Dimension::volume_rate;
    case Unit::dimensionless: return Dimension::none;
  }
  throw UnitError("unknown unit tag");
}

// Scale to the canonical unit of each dimension (eV, cm, ...).
double canonical_scale(Unit u) {
  switch (u) {
    case Unit::megaelectronvolt: return 1e6;
    case Unit::angstrom: return constants::angstrom_cm;
    default: return 1.0;
  }
}

}  // namespace

std::string unit_name(Unit u) {
  switch (u) {
    case Unit::hertz: return "Hz";
    case Unit::second: return "s";
    case Unit::electronvolt: return "eV";
    case Unit::megaelectronvolt: return "MeV";
    case Unit::amu: return "amu";
    case Unit::centimeter: return "cm";
    case Unit::angstrom: return "A";
    case Unit::per_cubic_meter: return "m^-3";
    case Unit::cm3_per_second: return "cm^3/s";
    case Unit::dimensionless: return "1";
  }
  throw UnitError("unknown unit tag");
}

Unit parse_unit(const std::string& name) {
  static const std::array<std::pair<const char*, Unit>, 10> table = {{
      {"Hz", Unit::hertz},
      {"s", Unit::second},
      {"eV", Unit::electronvolt},
      {"MeV", Unit::megaelectronvolt},
      {"amu", Unit::amu},
      {"cm", Unit::centimeter},
      {"A", Unit::angstrom},
      {"m^-3", Unit::per_cubic_meter},
      {"cm^3/s", Unit::cm3_per_second},
      {"1", Unit::dimensionless},
  }};
  for (const auto& [n, u] : table) {
    if (name == n) return u;
  }
  throw UnitError("unknown unit name: " + name);
}

UnitValue convert(const UnitValue& x, Unit target) {
  if (x.unit == target) return x;

  const Dimension from = dimension_of(x.unit);
  const Dimension to = dimension_of(target);

  // mass <-> energy through amu = 931.494 MeV.
  if (from == Dimension::mass && to == Dimension::energy) {
    const double ev = x.magnitude * constants::amu_ev;
    return {ev / canonical_scale(target), target};
  }
  if (from == Dimension::energy && to == Dimension::mass) {
    const double ev = x.magnitude * canonical_scale(x.unit);
    return {ev / constants::amu_ev, target};
  }

  if (from != to) {
    throw UnitError("incompatible units: " + unit_name(x.unit) + " -> " +
                    unit_name(target));
  }
  const double canonical = x.magnitude * canonical_scale(x.unit);
  return {canonical / canonical_scale(target), target};
}

}  // namespace cslosc
