#pragma once

// Two-level collapse dynamics.
//
// The stochastic pure-state process
//   d|psi> = [ -i(w_x/2) sigma_x dt
//              + sqrt(lambda) (sigma_z - <sigma_z>) dW
//              - (lambda/2) (sigma_z - <sigma_z>)^2 dt ] |psi>
// is unravelled by Euler-Maruyama trajectories with per-step
// renormalization. Its noise average obeys the Bloch system
//   dr_x/dt = -2 lambda r_x
//   dr_y/dt = -w_x r_z - 2 lambda r_y
//   dr_z/dt =  w_x r_y
// which is solved here in closed form for all damping regimes.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cslosc {

class StepSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TwoLevelParams {
  double omega_x = 0.0;  // oscillation angular frequency, Hz
  double lambda = 0.0;   // collapse / dephasing rate, Hz

  void validate() const {
    if (omega_x < 0.0 || lambda < 0.0) {
      throw std::domain_error("TwoLevelParams: rates must be non-negative");
    }
  }
};

using BlochVector = Eigen::Vector3d;

/// Pure state on the sigma_z eigenbasis {|+>, |->}.
struct StateVector {
  Eigen::Vector2cd amps{1.0, 0.0};  // (c_plus, c_minus)

  double norm() const { return amps.norm(); }
  double sigma_z_expectation() const {
    return std::norm(amps(0)) - std::norm(amps(1));
  }

  static StateVector plus() { return {{1.0, 0.0}}; }
  static StateVector minus() { return {{0.0, 1.0}}; }
  /// Equal superposition (|+> + |->)/sqrt(2).
  static StateVector balanced() { return {{M_SQRT1_2, M_SQRT1_2}}; }
  /// State with |<+|psi>|^2 = p, real amplitudes.
  static StateVector with_plus_weight(double p);
};

struct Trajectory {
  std::vector<double> times;
  std::vector<double> sigma_z;
  std::uint64_t seed = 0;
  double step = 0.0;
};

struct EnsembleResult {
  std::vector<double> times;
  std::vector<double> mean_sigma_z;
  std::vector<double> var_sigma_z;
  double fraction_plus = 0.0;   // |<sz>| > threshold, sz > 0 at final time
  double fraction_minus = 0.0;
  std::size_t n_trajectories = 0;
};

/// Threshold classifying a trajectory endpoint as collapsed.
inline constexpr double kCollapseThreshold = 0.99;

/// Right-hand side of the Bloch ODE system above.
BlochVector bloch_ode_rhs(const TwoLevelParams& p, const BlochVector& r);

/// Exact solution of the Bloch system at time t, branching between the
/// underdamped (lambda < w_x), critically damped and overdamped regimes.
BlochVector lindblad_solution(const TwoLevelParams& p, const BlochVector& r0,
                              double t);

/// Damping envelope of <sigma_z(t)> for r0 = (0,0,1): exp(-lambda t) when
/// underdamped, exp(-(lambda - Omega) t) when overdamped.
double visibility_envelope(const TwoLevelParams& p, double t);

/// One Euler-Maruyama step, without renormalization. dW is a realized
/// Wiener increment of variance dt.
StateVector sde_step_raw(const TwoLevelParams& p, const StateVector& psi,
                         double dW, double dt);

/// One Euler-Maruyama step followed by renormalization.
StateVector sde_step(const TwoLevelParams& p, const StateVector& psi,
                     double dW, double dt);

/// Hard step-size contract: dt <= 0.01 * min(1/w_x, 1/lambda) over the
/// nonzero rates. Throws StepSizeError instead of subsampling.
void check_step_size(const TwoLevelParams& p, double dt);

Trajectory simulate_trajectory(const TwoLevelParams& p, const StateVector& psi0,
                               double total_time, double dt,
                               std::uint64_t seed);

/// Monte Carlo average over n trajectories. Trajectory i draws its noise
/// from a stream seeded by mixing (base_seed, i), so results do not
/// depend on execution order.
EnsembleResult ensemble_average(const TwoLevelParams& p,
                                const StateVector& psi0, std::size_t n,
                                double total_time, double dt,
                                std::uint64_t base_seed);

/// SplitMix64 mix used to derive per-trajectory seeds.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index);

}  // namespace cslosc
