#include <doctest.h>

#include <cmath>
#include <random>

#include "cslosc/decoherence.hpp"

using namespace cslosc;

TEST_CASE("collisional rate bands") {
  // Shipped band: sigma in [2e-19, 2e-17] m^2, v = 500 m/s.
  const double uhv_low = collisional_rate({1e10, 500.0, 2e-19});
  const double uhv_high = collisional_rate({1e10, 500.0, 2e-17});
  CHECK(uhv_low == doctest::Approx(1e-6));
  CHECK(uhv_high == doctest::Approx(1e-4));

  const double cryo_low = collisional_rate({1e5, 500.0, 2e-19});
  const double cryo_high = collisional_rate({1e5, 500.0, 2e-17});
  CHECK(cryo_low == doctest::Approx(1e-11));
  CHECK(cryo_high == doctest::Approx(1e-9));
  CHECK(cryo_low / uhv_low == doctest::Approx(1e-5));

  CHECK(collisional_rate({0.0, 500.0, 1e-18}) == 0.0);
  CHECK(collisional_rate({1e10, 0.0, 1e-18}) == 0.0);
  CHECK_THROWS_AS(collisional_rate({-1.0, 1.0, 1.0}), std::domain_error);
}

TEST_CASE("neutrino medium rates") {
  CHECK(neutrino_decoherence_rate(1.0, NeutrinoMedium::outer_space) ==
        doctest::Approx(1e-43));
  CHECK(neutrino_decoherence_rate(1.0, NeutrinoMedium::atmosphere) ==
        doctest::Approx(1e-20));
  CHECK(neutrino_decoherence_rate(2.0, NeutrinoMedium::atmosphere) ==
        doctest::Approx(2e-20));
  CHECK_THROWS_AS(neutrino_decoherence_rate(0.0, NeutrinoMedium::atmosphere),
                  std::domain_error);
}

TEST_CASE("cumulative damping reproduces the published orders") {
  // Cosmogenic: atmosphere-dominated despite the 1e-4 s crossing.
  const double cosmogenic = neutrino_cumulative_damping(1e19, 3e18, 1e-4);
  CHECK(cosmogenic == doctest::Approx(1e-5).epsilon(2.0));
  CHECK(cosmogenic > 0.5 * 1e-5);

  const double solar = neutrino_cumulative_damping(1e6, 5e2, 1e-4);
  CHECK(solar == doctest::Approx(1e-18).epsilon(2.0));

  CHECK_THROWS_AS(neutrino_cumulative_damping(1e6, 1.0, 2.0),
                  std::domain_error);
  CHECK_THROWS_AS(neutrino_cumulative_damping(1e6, -1.0, 0.0),
                  std::domain_error);
}

TEST_CASE("decoherence estimators are linear in each input") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.5, 4.0);
  for (int i = 0; i < 100; ++i) {
    const CollisionalEnvironment env{1e9 * u(rng), 300.0 * u(rng),
                                     1e-18 * u(rng)};
    const double k = u(rng);
    CHECK(collisional_rate({k * env.number_density, env.relative_velocity,
                            env.cross_section}) ==
          doctest::Approx(k * collisional_rate(env)));
    CHECK(collisional_rate({env.number_density, k * env.relative_velocity,
                            env.cross_section}) ==
          doctest::Approx(k * collisional_rate(env)));

    const double e = 1e5 * u(rng);
    CHECK(neutrino_decoherence_rate(k * e, NeutrinoMedium::outer_space) ==
          doctest::Approx(k * neutrino_decoherence_rate(
                                  e, NeutrinoMedium::outer_space)));

    const double t = 1e3 * u(rng), atm = 1e-4 * u(rng);
    CHECK(neutrino_cumulative_damping(k * e, t, atm) ==
          doctest::Approx(k * neutrino_cumulative_damping(e, t, atm)));
  }
}

TEST_CASE("normal quantile") {
  CHECK(normal_quantile(0.90) == doctest::Approx(1.2816).epsilon(1e-4));
  CHECK(normal_quantile(0.975) == doctest::Approx(1.95996).epsilon(1e-4));
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0).scale(1));
  CHECK_THROWS_AS(normal_quantile(0.0), std::domain_error);
}

TEST_CASE("meson zeta bound") {
  // One-sided 90% limit with quadrature-combined errors.
  const ZetaMeasurement zm{0.003, 0.018, 0.006, 0.90, 0.8954e-10};
  const double sigma = std::hypot(0.018, 0.006);
  const double zeta_up = 0.003 + 1.28155 * sigma;
  CHECK(zeta_up == doctest::Approx(0.0273).epsilon(1e-2));
  CHECK(meson_decoherence_bound(zm) ==
        doctest::Approx(zeta_up / 0.8954e-10).epsilon(1e-4));
  // Same order as the published 8e7 Hz figure.
  CHECK(std::round(std::log10(meson_decoherence_bound(zm))) == 8.0);

  const ZetaMeasurement degenerate{0.01, 0.0, 0.0, 0.90, 1e-10};
  CHECK(meson_decoherence_bound(degenerate) == doctest::Approx(1e8));

  ZetaMeasurement bad = zm;
  bad.timescale_s = 0.0;
  CHECK_THROWS_AS(meson_decoherence_bound(bad), std::domain_error);
}

TEST_CASE("meson bound monotonicity") {
  const ZetaMeasurement base{0.003, 0.018, 0.006, 0.90, 1e-10};
  const double b = meson_decoherence_bound(base);
  auto with = [&](auto mod) {
    ZetaMeasurement m = base;
    mod(m);
    return meson_decoherence_bound(m);
  };
  CHECK(with([](auto& m) { m.zeta_mean += 0.01; }) > b);
  CHECK(with([](auto& m) { m.sigma_stat += 0.01; }) > b);
  CHECK(with([](auto& m) { m.sigma_syst += 0.01; }) > b);
  CHECK(with([](auto& m) { m.confidence_level = 0.95; }) > b);
  CHECK(with([](auto& m) { m.timescale_s *= 2.0; }) < b);
}
