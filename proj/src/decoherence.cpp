#include "cslosc/decoherence.hpp"

#include <cmath>

namespace cslosc {

double collisional_rate(const CollisionalEnvironment& env) {
  env.validate();
  return env.number_density * env.relative_velocity * env.cross_section;
}

double neutrino_decoherence_rate(double energy_ev, NeutrinoMedium medium) {
  if (!(energy_ev > 0.0)) {
    throw std::domain_error("neutrino energy must be > 0");
  }
  switch (medium) {
    case NeutrinoMedium::outer_space: return 1e-43 * energy_ev;
    case NeutrinoMedium::atmosphere: return 1e-20 * energy_ev;
  }
  throw std::invalid_argument("unknown neutrino medium");
}

double neutrino_cumulative_damping(double energy_ev, double total_time_s,
                                   double atmosphere_time_s) {
  if (total_time_s < 0.0 || atmosphere_time_s < 0.0) {
    throw std::domain_error("times must be >= 0");
  }
  if (atmosphere_time_s > total_time_s) {
    throw std::domain_error("atmosphere time exceeds total flight time");
  }
  const double out_time = total_time_s - atmosphere_time_s;
  return neutrino_decoherence_rate(energy_ev, NeutrinoMedium::outer_space) *
             out_time +
         neutrino_decoherence_rate(energy_ev, NeutrinoMedium::atmosphere) *
             atmosphere_time_s;
}

double normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("quantile probability must be in (0,1)");
  }
  // Newton iteration on Phi(z) = p, started from a crude logit guess.
  double z = 4.91 * (std::pow(p, 0.14) - std::pow(1.0 - p, 0.14));
  for (int it = 0; it < 60; ++it) {
    const double cdf = 0.5 * std::erfc(-z * M_SQRT1_2);
    const double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
    const double step = (cdf - p) / pdf;
    z -= step;
    if (std::abs(step) < 1e-14) break;
  }
  return z;
}

double meson_decoherence_bound(const ZetaMeasurement& zm) {
  zm.validate();
  if (!(zm.timescale_s > 0.0)) {
    throw std::domain_error("timescale must be > 0");
  }
  const double sigma =
      std::hypot(zm.sigma_stat, zm.sigma_syst);
  const double zeta_up =
      zm.zeta_mean + normal_quantile(zm.confidence_level) * sigma;
  return zeta_up / zm.timescale_s;
}

}  // namespace cslosc
