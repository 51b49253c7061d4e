#pragma once

// Environmental decoherence estimates paired with the collapse rates:
// collisional dephasing (n v sigma), medium-dependent neutrino rates,
// and the experimental zeta bound for neutral mesons.

#include <stdexcept>

namespace cslosc {

struct CollisionalEnvironment {
  double number_density = 0.0;    // m^-3
  double relative_velocity = 0.0; // m/s
  double cross_section = 0.0;     // m^2

  void validate() const {
    if (number_density < 0.0 || relative_velocity < 0.0 ||
        cross_section < 0.0) {
      throw std::domain_error("CollisionalEnvironment: fields must be >= 0");
    }
  }
};

/// lambda_DEC = n v sigma.
double collisional_rate(const CollisionalEnvironment& env);

enum class NeutrinoMedium { outer_space, atmosphere };

/// Scattering dephasing rate per medium, linear in energy:
/// 1e-43 (E/eV) Hz in outer space, 1e-20 (E/eV) Hz in the atmosphere.
double neutrino_decoherence_rate(double energy_ev, NeutrinoMedium medium);

/// Damping factor accumulated over a flight spending atmosphere_time_s
/// in the atmosphere and the rest in outer space.
double neutrino_cumulative_damping(double energy_ev, double total_time_s,
                                   double atmosphere_time_s = 1e-4);

struct ZetaMeasurement {
  double zeta_mean = 0.0;
  double sigma_stat = 0.0;
  double sigma_syst = 0.0;
  double confidence_level = 0.9;
  double timescale_s = 0.8954e-10;  // K_S lifetime

  void validate() const {
    if (sigma_stat < 0.0 || sigma_syst < 0.0) {
      throw std::domain_error("ZetaMeasurement: sigmas must be >= 0");
    }
    if (!(confidence_level > 0.0) || !(confidence_level < 1.0)) {
      throw std::domain_error("confidence level must be in (0,1)");
    }
  }
};

/// One-sided Gaussian upper limit zeta_up = mean + z(CL) * sigma_total
/// (errors combined in quadrature), divided by the timescale on which
/// zeta ~ lambda_deco * t holds.
double meson_decoherence_bound(const ZetaMeasurement& zm);

/// One-sided standard normal quantile, z(0.90) = 1.2816.
double normal_quantile(double p);

}  // namespace cslosc
