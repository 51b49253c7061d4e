#include "cslosc/rates.hpp"

#include <cmath>

namespace cslosc {

double neutrino_rate(const NeutrinoSpec& spec, const CslParams& csl) {
  spec.validate();
  const double lambda_csl = csl.lambda();
  const double m0c2 = csl.m0 * constants::amu_ev;  // eV

  if (spec.momentum) {
    const double pc = *spec.momentum;
    const double ej = std::sqrt(pc * pc + spec.delta_m2);
    // m_j^2 = dm^2, m_k = 0 (lightest state massless).
    const double diff = spec.delta_m2 / ej;
    return lambda_csl / (2.0 * m0c2 * m0c2) * diff * diff;
  }
  const double ratio = spec.delta_m2 / (m0c2 * spec.energy);
  return 0.5 * lambda_csl * ratio * ratio;
}

double neutrino_damping(const NeutrinoSpec& spec, const CslParams& csl) {
  return neutrino_rate(spec, csl) * spec.flight_time;
}

double meson_rate(const MesonSpec& spec, const CslParams& csl) {
  spec.validate();
  const double r = spec.delta_m / csl.m0;
  return 0.5 * csl.lambda() * r * r;
}

namespace {

inline double gaussian_kernel(const Eigen::Vector3d& r, double r_c) {
  return std::exp(-r.squaredNorm() / (4.0 * r_c * r_c));
}

}  // namespace

double chiral_rate_exact(const EnantiomerGeometry& geom, const CslParams& csl) {
  const double lambda_csl = csl.lambda();
  const double r_c = csl.r_c;
  const std::size_t n = geom.left.size();

  // Atoms carry round(mass) coincident nucleons, so the nucleon double
  // sum reduces to a weighted atom-level sum.
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = std::llround(geom.left[i].mass);
    for (std::size_t j = 0; j < n; ++j) {
      const double wj = std::llround(geom.left[j].mass);
      const double same =
          gaussian_kernel(geom.left[i].position - geom.left[j].position, r_c) +
          gaussian_kernel(geom.right[i].position - geom.right[j].position, r_c);
      const double cross =
          gaussian_kernel(geom.left[i].position - geom.right[j].position, r_c);
      total += wi * wj * (same - 2.0 * cross);
    }
  }
  return 0.5 * lambda_csl * total;
}

double chiral_rate_dipole(const EnantiomerGeometry& geom, const CslParams& csl) {
  const double lambda_csl = csl.lambda();
  const double r_c = csl.r_c;
  if (geom.max_displacement() >= r_c) {
    throw GeometryError(
        "dipole approximation invalid: displacement reaches r_C");
  }
  const Eigen::Vector3d dipole = mass_weighted_displacement(geom);
  return lambda_csl / (4.0 * r_c * r_c) * dipole.squaredNorm();
}

double chiral_rate_doublewell(const DoubleWellSpec& spec, const CslParams& csl) {
  spec.validate();
  const double muq0 = spec.mu * spec.q0;
  return csl.lambda() / (4.0 * csl.r_c * csl.r_c) * muq0 * muq0;
}

double lambda_upper_bound(const DoubleWellSpec& spec, double r_c) {
  spec.validate();
  if (!(spec.omega_x > 0.0)) {
    throw std::domain_error(
        "lambda_upper_bound: no observed splitting, no bound");
  }
  const double ratio = 2.0 * r_c / (spec.mu * spec.q0);
  return ratio * ratio * spec.omega_x;
}

double bound_from_resolution(double resolution, double mode_frequency,
                             const DoubleWellSpec& spec, double r_c) {
  if (!(resolution > 0.0) || resolution > 1.0) {
    throw std::domain_error("resolution must be in (0, 1]");
  }
  if (mode_frequency < 1e9 || mode_frequency > 1e14) {
    throw std::domain_error("mode frequency outside 1e9..1e14 Hz");
  }
  DoubleWellSpec resolved = spec;
  resolved.omega_x = resolution * mode_frequency;
  return lambda_upper_bound(resolved, r_c);
}

TwoLevelValidity validate_twolevel(const DoubleWellSpec& spec,
                                   double temperature_k) {
  spec.validate();
  const double hw0 = constants::hbar_ev_s * spec.omega_0;  // eV
  TwoLevelValidity v;
  v.barrier_ratio = hw0 > 0.0 ? spec.v0 / hw0 : 0.0;
  v.thermal_ratio = temperature_k > 0.0
                        ? hw0 / (constants::k_boltzmann_ev * temperature_k)
                        : std::numeric_limits<double>::infinity();
  v.barrier_ok = v.barrier_ratio >= 10.0;
  v.thermal_ok = v.thermal_ratio >= 10.0;
  return v;
}

}  // namespace cslosc
