#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cslosc/cli.hpp"

using namespace cslosc;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("missing subcommand and unknown flags exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"simulate", "--omega-x", "1", "--lambda", "0",
             "--no-such-flag"}).code == 2);
  CHECK(run({"rate", "neutrino"}).code == 2);  // --energy required
}

TEST_CASE("frozen sigma_z eigenstate series") {
  const auto r = run({"simulate", "--omega-x", "0", "--lambda", "1", "--psi0",
                      "plus", "--T", "0.5", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,mean,var,envelope");
  int rows = 0;
  while (std::getline(in, line)) {
    CHECK(line.find(",1,") != std::string::npos);  // mean column == 1
    ++rows;
  }
  CHECK(rows == 51);
}

TEST_CASE("identical argv and seed give byte-identical output") {
  const std::vector<std::string> args = {
      "simulate", "--omega-x", "1",    "--lambda", "0.5", "--psi0",
      "balanced", "--T",       "1",    "--n",      "20",  "--seed",
      "77",       "--format",  "csv"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("neutrino rate record") {
  const auto r = run({"rate", "neutrino", "--energy", "1", "--time", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["kind"] == "collapse");
  CHECK(j["system"] == "neutrino");
  CHECK(double(j["lambda_csl_hz"]) == doctest::Approx(7e-36).epsilon(0.2));
  CHECK(double(j["damping_factor"]) ==
        doctest::Approx(double(j["lambda_csl_hz"])));
}

TEST_CASE("meson rate record by name") {
  const auto r = run({"rate", "meson", "--name", "K"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(double(j["lambda_csl_hz"]) == doctest::Approx(1.5e-38).epsilon(0.5));
  CHECK(run({"rate", "meson"}).code == 2);
  CHECK(run({"rate", "meson", "--name", "Z"}).code == 2);
}

TEST_CASE("chiral rate from fixture geometries") {
  const auto r = run({"rate", "chiral", "--left",
                      "data/fixtures/ammonia_left.xyz", "--right",
                      "data/fixtures/ammonia_right.xyz", "--center", "0"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["inputs"]["n_superposed"] == 3);
  const double exact = j["lambda_csl_exact_hz"];
  const double dipole = j["lambda_csl_dipole_hz"];
  CHECK(exact > 0.0);
  CHECK(std::abs(exact - dipole) / exact < 0.03);
}

TEST_CASE("chiral double-well form with validity") {
  const auto r = run({"rate", "chiral", "--mu", "3", "--q0-angstrom", "0.8",
                      "--omega-0", "1e14", "--v0-ev", "6.58", "--temperature",
                      "7.6"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(double(j["lambda_csl_hz"]) == doctest::Approx(3.2e-15).epsilon(0.05));
  CHECK(j["validity"] == "two-level reduction valid");
}

TEST_CASE("bound subcommand") {
  const auto r =
      run({"bound", "--mu", "2", "--q0-angstrom", "2", "--omega-x", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["kind"] == "bound");
  CHECK(double(j["lambda_max_hz"]) == doctest::Approx(2.5e5));

  const auto res = run({"bound", "--mu", "100", "--q0-angstrom", "10",
                        "--resolution", "1e-14", "--mode-frequency", "1e9"});
  REQUIRE(res.code == 0);
  CHECK(double(json::parse(res.out)["lambda_max_hz"]) ==
        doctest::Approx(4e-5).epsilon(1e-6));

  CHECK(run({"bound", "--mu", "2", "--q0-angstrom", "2"}).code == 2);
}

TEST_CASE("decohere subcommands") {
  const auto chiral = run({"decohere", "chiral", "--vacuum", "cryo"});
  REQUIRE(chiral.code == 0);
  const json jc = json::parse(chiral.out);
  CHECK(jc["kind"] == "decoherence");
  CHECK(double(jc["lambda_dec_min_hz"]) == doctest::Approx(1e-11));
  CHECK(double(jc["lambda_dec_max_hz"]) == doctest::Approx(1e-9));

  const auto nu = run({"decohere", "neutrino", "--energy", "1e19", "--time",
                       "3e18"});
  REQUIRE(nu.code == 0);
  CHECK(double(json::parse(nu.out)["damping_factor"]) ==
        doctest::Approx(1e-5).epsilon(2.0));

  const auto ms = run({"decohere", "meson"});
  REQUIRE(ms.code == 0);
  CHECK(std::round(std::log10(
            double(json::parse(ms.out)["lambda_dec_bound_hz"]))) == 8.0);
}

TEST_CASE("table I within tolerance under --strict") {
  const auto r = run({"table", "I", "--strict"});
  CHECK(r.code == 0);
  CHECK(r.out.find("K-meson") == std::string::npos);  // renamed rows
  CHECK(r.out.find("meson K") != std::string::npos);
  CHECK(r.out.find("OUT OF TOLERANCE") == std::string::npos);

  const auto j = run({"table", "I", "--format", "json"});
  REQUIRE(j.code == 0);
  const json rows = json::parse(j.out)["rows"];
  bool found = false;
  for (const auto& row : rows) {
    if (row["system"] == "meson K (Hz)") {
      found = true;
      CHECK(double(row["computed"]) == doctest::Approx(1.5e-38).epsilon(0.5));
      CHECK(double(row["published"]) == doctest::Approx(1.5e-38));
      CHECK(row["within_tolerance"] == true);
    }
  }
  CHECK(found);
}

TEST_CASE("table II within tolerance under --strict") {
  const auto r = run({"table", "II", "--strict", "--format", "json"});
  CHECK(r.code == 0);
  const json rows = json::parse(r.out)["rows"];
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) CHECK(row["within_tolerance"] == true);
}

TEST_CASE("strict mode fails on distorted constants") {
  // A wildly wrong gamma pushes every computed cell out of tolerance.
  const auto r = run({"table", "I", "--strict", "--gamma", "1e-10"});
  CHECK(r.code == 3);
}

TEST_CASE("compare verdicts") {
  const auto nu = run({"compare", "--system", "neutrino"});
  REQUIRE(nu.code == 0);
  CHECK(json::parse(nu.out)["verdict"] == "decoherence dominates");

  const auto ms = run({"compare", "--system", "meson"});
  REQUIRE(ms.code == 0);
  CHECK(json::parse(ms.out)["verdict"] == "decoherence dominates");

  const auto ch = run({"compare", "--system", "chiral", "--vacuum", "cryo"});
  REQUIRE(ch.code == 0);
  const json j = json::parse(ch.out);
  CHECK(j["verdict"] == "collapse potentially observable");
  CHECK(double(j["lambda_csl_hz"]) >= double(j["lambda_dec_min_hz"]));

  const auto uhv = run({"compare", "--system", "chiral", "--vacuum", "uhv"});
  REQUIRE(uhv.code == 0);
  CHECK(json::parse(uhv.out)["verdict"] == "decoherence dominates");
}

TEST_CASE("config file overrides reach the computation") {
  const auto r = run({"rate", "meson", "--name", "K", "--gamma", "2e-22"});
  REQUIRE(r.code == 0);
  const auto base = run({"rate", "meson", "--name", "K"});
  CHECK(double(json::parse(r.out)["lambda_csl_hz"]) ==
        doctest::Approx(2.0 *
                        double(json::parse(base.out)["lambda_csl_hz"])));
}
