#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cslosc/config.hpp"

using namespace cslosc;

TEST_CASE("shipped defaults") {
  const Defaults d = load_defaults();
  CHECK(d.csl.gamma == doctest::Approx(1e-22));
  CHECK(d.csl.r_c == doctest::Approx(1e-5));
  CHECK(d.csl.lambda() == doctest::Approx(2.2448e-9).epsilon(1e-3));
  CHECK(d.meson_delta_m_mev.at("K") == doctest::Approx(3.48e-12));
  CHECK(d.zeta.sigma_stat == doctest::Approx(0.018));
  CHECK(d.ammonia.q0 == doctest::Approx(0.8e-8));
}

TEST_CASE("the checked-in defaults file matches the compiled defaults") {
  Defaults from_file;
  from_file.zeta = ZetaMeasurement{0.003, 0.018, 0.006, 0.90, 0.8954e-10};
  apply_config_file(from_file, "data/defaults.cfg");
  const Defaults compiled = load_defaults();
  CHECK(from_file.csl.gamma == compiled.csl.gamma);
  CHECK(from_file.neutrino_dm2_solar == compiled.neutrino_dm2_solar);
  CHECK(from_file.meson_delta_m_mev == compiled.meson_delta_m_mev);
  CHECK(from_file.sigma_dec_min == compiled.sigma_dec_min);
  CHECK(from_file.ammonia.omega_x == compiled.ammonia.omega_x);
  CHECK(from_file.sulfoxide_like.mu == compiled.sulfoxide_like.mu);
}

TEST_CASE("overrides, comments and whitespace") {
  Defaults d;
  apply_config_text(d,
                    "# comment\n"
                    "csl.gamma = 1e-30   # GRW\n"
                    "\n"
                    "doublewell.ammonia.q0_angstrom = 1.0\n"
                    "meson.X.delta_m_mev = 2.5e-12\n");
  CHECK(d.csl.gamma == doctest::Approx(1e-30));
  CHECK(d.ammonia.q0 == doctest::Approx(1e-8));
  CHECK(d.meson_delta_m_mev.at("X") == doctest::Approx(2.5e-12));
}

TEST_CASE("unknown keys and malformed lines are rejected") {
  Defaults d;
  CHECK_THROWS_AS(apply_config_text(d, "nonsense.key = 1\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(d, "csl.gamma 1e-22\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(d, "csl.gamma = banana\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_file(d, "/nonexistent/file.cfg"), ConfigError);
}
