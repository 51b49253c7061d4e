#include "cslosc/twolevel.hpp"

#include <cmath>
#include <random>

namespace cslosc {

StateVector StateVector::with_plus_weight(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::domain_error("plus weight must be in [0,1]");
  }
  return {{std::sqrt(p), std::sqrt(1.0 - p)}};
}

BlochVector bloch_ode_rhs(const TwoLevelParams& p, const BlochVector& r) {
  return {-2.0 * p.lambda * r.x(),
          -p.omega_x * r.z() - 2.0 * p.lambda * r.y(),
          p.omega_x * r.y()};
}

namespace {

// Relative window around lambda == omega_x where the critical-damping
// formula replaces the generic branches (avoids cancellation as the
// frequency Omega -> 0).
constexpr double kCriticalWindow = 1e-12;

}  // namespace

BlochVector lindblad_solution(const TwoLevelParams& p, const BlochVector& r0,
                              double t) {
  p.validate();
  if (t < 0.0) throw std::domain_error("lindblad_solution: t must be >= 0");

  const double w = p.omega_x;
  const double lam = p.lambda;
  const double rx = r0.x() * std::exp(-2.0 * lam * t);

  // (r_y, r_z) propagate by exp(At) with A = [[-2l,-w],[w,0]]; writing
  // A = -l I + B with B = [[-l,-w],[w,l]], B^2 = (l^2-w^2) I gives
  // exp(At) = e^{-lt} (C I + S B).
  const double disc = lam * lam - w * w;
  const double scale = std::max(lam * lam, w * w);

  double ec, es;  // e^{-lt} C, e^{-lt} S
  if (std::abs(disc) < kCriticalWindow * scale || scale == 0.0) {
    const double e = std::exp(-lam * t);
    ec = e;
    es = e * t;
  } else if (disc > 0.0) {
    // Overdamped: combine exponentials directly so large lam*t cannot
    // overflow the cosh.
    const double omega = std::sqrt(disc);
    const double slow = std::exp(-(w * w / (lam + omega)) * t);  // e^{-(l-O)t}
    const double fast = std::exp(-(lam + omega) * t);
    ec = 0.5 * (slow + fast);
    es = 0.5 * (slow - fast) / omega;
  } else {
    const double omega = std::sqrt(-disc);
    const double e = std::exp(-lam * t);
    ec = e * std::cos(omega * t);
    es = e * std::sin(omega * t) / omega;
  }

  const double ry = (ec - lam * es) * r0.y() - w * es * r0.z();
  const double rz = w * es * r0.y() + (ec + lam * es) * r0.z();
  return {rx, ry, rz};
}

double visibility_envelope(const TwoLevelParams& p, double t) {
  p.validate();
  if (t < 0.0) throw std::domain_error("visibility_envelope: t must be >= 0");
  const double w = p.omega_x;
  const double lam = p.lambda;
  if (lam == 0.0) return 1.0;
  if (lam < w) return std::exp(-lam * t);
  // lambda - Omega = w^2 / (lambda + Omega), stable for lambda >> w.
  const double omega = std::sqrt(lam * lam - w * w);
  return std::exp(-(w * w / (lam + omega)) * t);
}

StateVector sde_step_raw(const TwoLevelParams& p, const StateVector& psi,
                         double dW, double dt) {
  if (!(dt > 0.0)) throw std::domain_error("sde_step: dt must be positive");
  if (std::abs(psi.norm() - 1.0) > 1e-6) {
    throw StateError("sde_step: input state not normalized");
  }
  const double m = psi.sigma_z_expectation();
  const double ap = 1.0 - m;   // (sigma_z - m) on |+>
  const double am = -1.0 - m;  // (sigma_z - m) on |->
  const std::complex<double> i(0.0, 1.0);
  const double sql = std::sqrt(p.lambda);

  const auto& c = psi.amps;
  StateVector out;
  out.amps(0) = c(0) + (-i * (0.5 * p.omega_x) * c(1)) * dt +
                (sql * ap * dW - 0.5 * p.lambda * ap * ap * dt) * c(0);
  out.amps(1) = c(1) + (-i * (0.5 * p.omega_x) * c(0)) * dt +
                (sql * am * dW - 0.5 * p.lambda * am * am * dt) * c(1);
  return out;
}

StateVector sde_step(const TwoLevelParams& p, const StateVector& psi,
                     double dW, double dt) {
  StateVector out = sde_step_raw(p, psi, dW, dt);
  out.amps.normalize();
  return out;
}

void check_step_size(const TwoLevelParams& p, double dt) {
  if (!(dt > 0.0)) throw StepSizeError("dt must be positive");
  double limit = std::numeric_limits<double>::infinity();
  if (p.omega_x > 0.0) limit = std::min(limit, 0.01 / p.omega_x);
  if (p.lambda > 0.0) limit = std::min(limit, 0.01 / p.lambda);
  if (dt > limit * (1.0 + 1e-12)) {
    throw StepSizeError("dt exceeds 0.01 * min(1/omega_x, 1/lambda)");
  }
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
  // SplitMix64 finalizer over the stream position.
  std::uint64_t z = base_seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

// Runs one trajectory, invoking observe(step_index, <sigma_z>) at t=0 and
// after every step.
template <typename Observer>
void integrate_path(const TwoLevelParams& p, const StateVector& psi0,
                    std::size_t n_steps, double dt, std::uint64_t seed,
                    Observer&& observe) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(dt));
  StateVector psi = psi0;
  observe(std::size_t{0}, psi.sigma_z_expectation());
  for (std::size_t k = 1; k <= n_steps; ++k) {
    psi = sde_step(p, psi, gauss(rng), dt);
    observe(k, psi.sigma_z_expectation());
  }
}

std::size_t step_count(double total_time, double dt) {
  if (!(total_time > 0.0)) {
    throw std::domain_error("total_time must be positive");
  }
  return static_cast<std::size_t>(std::llround(total_time / dt));
}

}  // namespace

Trajectory simulate_trajectory(const TwoLevelParams& p, const StateVector& psi0,
                               double total_time, double dt,
                               std::uint64_t seed) {
  p.validate();
  check_step_size(p, dt);
  const std::size_t n_steps = step_count(total_time, dt);

  Trajectory traj;
  traj.seed = seed;
  traj.step = dt;
  traj.times.resize(n_steps + 1);
  traj.sigma_z.resize(n_steps + 1);
  for (std::size_t k = 0; k <= n_steps; ++k) traj.times[k] = double(k) * dt;
  integrate_path(p, psi0, n_steps, dt, seed,
                 [&](std::size_t k, double sz) { traj.sigma_z[k] = sz; });
  return traj;
}

EnsembleResult ensemble_average(const TwoLevelParams& p,
                                const StateVector& psi0, std::size_t n,
                                double total_time, double dt,
                                std::uint64_t base_seed) {
  p.validate();
  if (n < 1) throw std::domain_error("ensemble_average: n must be >= 1");
  check_step_size(p, dt);
  const std::size_t n_steps = step_count(total_time, dt);

  EnsembleResult res;
  res.n_trajectories = n;
  res.times.resize(n_steps + 1);
  for (std::size_t k = 0; k <= n_steps; ++k) res.times[k] = double(k) * dt;
  res.mean_sigma_z.assign(n_steps + 1, 0.0);
  res.var_sigma_z.assign(n_steps + 1, 0.0);

  std::size_t n_plus = 0, n_minus = 0;
  // Welford accumulation per time index, trajectories in index order.
  for (std::size_t i = 0; i < n; ++i) {
    double sz_final = 0.0;
    integrate_path(p, psi0, n_steps, dt, derive_seed(base_seed, i),
                   [&](std::size_t k, double sz) {
                     const double delta = sz - res.mean_sigma_z[k];
                     res.mean_sigma_z[k] += delta / double(i + 1);
                     res.var_sigma_z[k] += delta * (sz - res.mean_sigma_z[k]);
                     if (k == n_steps) sz_final = sz;
                   });
    if (sz_final > kCollapseThreshold) ++n_plus;
    if (sz_final < -kCollapseThreshold) ++n_minus;
  }
  for (auto& v : res.var_sigma_z) v /= double(n);
  res.fraction_plus = double(n_plus) / double(n);
  res.fraction_minus = double(n_minus) / double(n);
  return res;
}

}  // namespace cslosc
