#include <doctest.h>

#include <cmath>
#include <random>

#include "cslosc/units.hpp"

using namespace cslosc;

TEST_CASE("lambda from the Adler and GRW strengths") {
  CslParams adler;  // gamma = 1e-22, r_C = 1e-5
  CHECK(derive_lambda(adler) == doctest::Approx(2.2448e-9).epsilon(1e-3));

  CslParams grw = adler;
  grw.gamma = constants::gamma_grw;
  CHECK(derive_lambda(grw) == doctest::Approx(2.2448e-17).epsilon(1e-3));
}

TEST_CASE("lambda definition inverts exactly") {
  CslParams p;
  p.r_c = 1e-5;
  p.gamma = 8.0 * std::pow(M_PI, 1.5) * std::pow(p.r_c, 3);
  CHECK(derive_lambda(p) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("invalid collapse parameters are rejected") {
  CslParams p;
  p.gamma = 0.0;
  CHECK_THROWS_AS(derive_lambda(p), InvalidParameter);
  p.gamma = 1e-22;
  p.r_c = -1.0;
  CHECK_THROWS_AS(derive_lambda(p), InvalidParameter);
}

TEST_CASE("lambda monotone in gamma and r_C") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    CslParams p;
    p.gamma = 1e-22 * u(rng);
    p.r_c = 1e-5 * u(rng);
    CslParams more_gamma = p;
    more_gamma.gamma *= 1.0 + u(rng);
    CHECK(derive_lambda(more_gamma) > derive_lambda(p));
    CslParams more_rc = p;
    more_rc.r_c *= 1.0 + u(rng);
    CHECK(derive_lambda(more_rc) < derive_lambda(p));
  }
}

TEST_CASE("mass-energy and length conversions") {
  const UnitValue amu{1.0, Unit::amu};
  CHECK(convert(amu, Unit::megaelectronvolt).magnitude ==
        doctest::Approx(931.494));
  CHECK(convert(amu, Unit::electronvolt).magnitude ==
        doctest::Approx(931.494e6));

  const UnitValue ang{1.0, Unit::angstrom};
  CHECK(convert(ang, Unit::centimeter).magnitude == doctest::Approx(1e-8));

  const UnitValue ev{1.0, Unit::electronvolt};
  CHECK(convert(ev, Unit::electronvolt).magnitude == 1.0);
}

TEST_CASE("incompatible dimensions throw") {
  CHECK_THROWS_AS(convert({1.0, Unit::second}, Unit::centimeter), UnitError);
  CHECK_THROWS_AS(convert({1.0, Unit::hertz}, Unit::amu), UnitError);
}

TEST_CASE("conversions round-trip") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(1e-12, 1e12);
  const std::pair<Unit, Unit> pairs[] = {
      {Unit::amu, Unit::megaelectronvolt},
      {Unit::amu, Unit::electronvolt},
      {Unit::angstrom, Unit::centimeter},
      {Unit::electronvolt, Unit::megaelectronvolt},
  };
  for (int i = 0; i < 500; ++i) {
    for (const auto& [a, b] : pairs) {
      const double x = u(rng);
      const double back = convert(convert({x, a}, b), a).magnitude;
      CHECK(back == doctest::Approx(x).epsilon(1e-12));
    }
  }
}

TEST_CASE("unit names parse back") {
  for (Unit u : {Unit::hertz, Unit::second, Unit::electronvolt,
                 Unit::megaelectronvolt, Unit::amu, Unit::centimeter,
                 Unit::angstrom, Unit::per_cubic_meter, Unit::cm3_per_second,
                 Unit::dimensionless}) {
    CHECK(parse_unit(unit_name(u)) == u);
  }
  CHECK_THROWS_AS(parse_unit("furlong"), UnitError);
}
