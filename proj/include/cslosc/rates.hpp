#pragma once

// CSL collapse rates and bounds for the three oscillating systems:
// neutrinos, neutral mesons, and chiral molecules / double wells.

#include <optional>
#include <string>

#include "cslosc/geometry.hpp"
#include "cslosc/units.hpp"

namespace cslosc {

struct NeutrinoSpec {
  double energy = 0.0;       // eV
  double flight_time = 0.0;  // s
  double delta_m2 = 0.0;     // eV^2 mass-squared splitting
  std::optional<double> momentum;  // eV/c, enables the exact-energy branch

  void validate() const {
    if (!(energy > 0.0)) throw std::domain_error("neutrino energy must be > 0");
    if (flight_time < 0.0) throw std::domain_error("flight time must be >= 0");
    if (delta_m2 < 0.0) throw std::domain_error("delta_m2 must be >= 0");
  }
};

struct MesonSpec {
  std::string name;
  double delta_m = 0.0;  // amu, mass-eigenstate splitting m2 - m1

  void validate() const {
    if (delta_m < 0.0) throw std::domain_error("meson delta_m must be >= 0");
  }
};

struct DoubleWellSpec {
  double mu = 0.0;       // effective mass, amu
  double q0 = 0.0;       // minima separation, cm
  double omega_x = 0.0;  // tunnelling splitting, Hz
  double v0 = 0.0;       // barrier height, eV (descriptive)
  double omega_0 = 0.0;  // well frequency, Hz (descriptive)

  void validate() const {
    if (!(mu > 0.0) || !(q0 > 0.0) || omega_x < 0.0) {
      throw std::domain_error("DoubleWellSpec: mu, q0 > 0 and omega_x >= 0");
    }
  }
};

/// Collapse rate between mass eigenstates. By default the relativistic
/// limit E^(j) ~ E is used:
///   lambda = (Lambda/2) (dm^2)^2 / (m0^2 E^2)    [eV units throughout]
/// When spec.momentum is set, the exact energies sqrt(p^2 + m^2) with
/// m_j^2 = dm^2 and m_k = 0 are used instead.
double neutrino_rate(const NeutrinoSpec& spec, const CslParams& csl);

/// Dimensionless damping factor lambda * flight_time.
double neutrino_damping(const NeutrinoSpec& spec, const CslParams& csl);

/// lambda = Lambda (m2 - m1)^2 / (2 m0^2), masses in amu.
double meson_rate(const MesonSpec& spec, const CslParams& csl);

/// Nucleon-level double sum with F(r) = exp(-r^2 / 4 r_C^2):
///   lambda = (Lambda/2) sum_ij [F(x'_i-x'_j) + F(x''_i-x''_j)
///                               - 2 F(x'_i-x''_j)]
double chiral_rate_exact(const EnantiomerGeometry& geom, const CslParams& csl);

/// Leading-order expansion of the exact sum:
///   lambda = (Lambda / 4 r_C^2) |sum_i m_i (x^L_i - x^R_i)|^2
/// Refuses geometries whose displacements reach r_C.
double chiral_rate_dipole(const EnantiomerGeometry& geom, const CslParams& csl);

/// lambda = (Lambda / 4 r_C^2) (mu q0)^2.
double chiral_rate_doublewell(const DoubleWellSpec& spec, const CslParams& csl);

/// Observed tunnelling splitting implies lambda < omega_x, hence
///   Lambda < (2 r_C / (mu q0))^2 omega_x.
double lambda_upper_bound(const DoubleWellSpec& spec,
                          double r_c = constants::r_c_default);

/// Bound reachable with spectroscopic resolution R = omega_x / omega for
/// a mode at frequency omega (valid modes span 1e9..1e14 Hz).
double bound_from_resolution(double resolution, double mode_frequency,
                             const DoubleWellSpec& spec,
                             double r_c = constants::r_c_default);

/// Two-level reduction validity: V0 >> hbar*omega_0 >> k_B T, with ">>"
/// read as a factor of 10 (inclusive).
struct TwoLevelValidity {
  double barrier_ratio = 0.0;  // V0 / (hbar omega_0)
  double thermal_ratio = 0.0;  // hbar omega_0 / (k_B T)
  bool barrier_ok = false;
  bool thermal_ok = false;
  bool valid() const { return barrier_ok && thermal_ok; }
};

TwoLevelValidity validate_twolevel(const DoubleWellSpec& spec,
                                   double temperature_k);

}  // namespace cslosc
