#include "cslosc/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "cslosc/config.hpp"
#include "cslosc/decoherence.hpp"
#include "cslosc/geometry.hpp"
#include "cslosc/rates.hpp"
#include "cslosc/report.hpp"
#include "cslosc/twolevel.hpp"
#include "cslosc/units.hpp"

namespace cslosc {

namespace {

using nlohmann::json;

struct GlobalOpts {
  std::string config_path;
  std::optional<double> gamma, r_c, m0;
  std::string output;
  std::string format = "json";

  Defaults defaults() const {
    Defaults d = load_defaults(config_path);
    if (gamma) d.csl.gamma = *gamma;
    if (r_c) d.csl.r_c = *r_c;
    if (m0) d.csl.m0 = *m0;
    d.csl.validate();
    return d;
  }
};

void emit(const GlobalOpts& g, std::ostream& out, const std::string& text) {
  if (g.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + g.output);
  f << text;
}

StateVector parse_psi0(const std::string& s) {
  if (s == "plus") return StateVector::plus();
  if (s == "minus") return StateVector::minus();
  if (s == "balanced") return StateVector::balanced();
  if (s.starts_with("weight=")) {
    return StateVector::with_plus_weight(std::stod(s.substr(7)));
  }
  throw std::domain_error("psi0 must be plus|minus|balanced|weight=<p>");
}

// ---- simulate ------------------------------------------------------------

struct SimulateOpts {
  double omega_x = 0.0, lambda = 0.0;
  std::string psi0 = "plus";
  double total_time = 10.0;
  double dt = 0.0;  // 0 = derive from the step-size rule
  std::size_t n = 1;
  std::uint64_t seed = 0;
};

std::string run_simulate(const SimulateOpts& o, const GlobalOpts& g) {
  TwoLevelParams p{o.omega_x, o.lambda};
  p.validate();
  double dt = o.dt;
  if (dt <= 0.0) {
    dt = 0.01;
    if (p.omega_x > 0.0) dt = std::min(dt, 0.01 / p.omega_x);
    if (p.lambda > 0.0) dt = std::min(dt, 0.01 / p.lambda);
  }
  const EnsembleResult res = ensemble_average(p, parse_psi0(o.psi0), o.n,
                                              o.total_time, dt, o.seed);
  if (g.format == "csv") {
    std::ostringstream csv;
    csv.precision(12);
    csv << "t,mean,var,envelope\n";
    for (std::size_t k = 0; k < res.times.size(); ++k) {
      csv << res.times[k] << ',' << res.mean_sigma_z[k] << ','
          << res.var_sigma_z[k] << ',' << visibility_envelope(p, res.times[k])
          << '\n';
    }
    return csv.str();
  }
  json j{{"omega_x", p.omega_x},
         {"lambda", p.lambda},
         {"dt", dt},
         {"seed", o.seed},
         {"n_trajectories", res.n_trajectories},
         {"times", res.times},
         {"mean_sigma_z", res.mean_sigma_z},
         {"var_sigma_z", res.var_sigma_z},
         {"fraction_plus", res.fraction_plus},
         {"fraction_minus", res.fraction_minus}};
  return j.dump(2) + "\n";
}

// ---- rate ----------------------------------------------------------------

std::string validity_string(const TwoLevelValidity& v) {
  if (v.valid()) return "two-level reduction valid";
  std::string s = "two-level reduction questionable:";
  if (!v.barrier_ok) s += " barrier regime not deep";
  if (!v.thermal_ok) s += " thermal regime";
  return s;
}

// ---- table helpers ---------------------------------------------------------

struct TableRow {
  std::string system;
  double computed;
  double published;
  double tolerance_factor;
  bool ok() const {
    const double r = computed / published;
    return r <= tolerance_factor && r >= 1.0 / tolerance_factor;
  }
};

std::string render_table(const std::string& title,
                         const std::vector<TableRow>& rows, bool json_format) {
  if (json_format) {
    json j{{"table", title}, {"rows", json::array()}};
    for (const auto& r : rows) {
      j["rows"].push_back({{"system", r.system},
                           {"computed", r.computed},
                           {"published", r.published},
                           {"within_tolerance", r.ok()}});
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << title << "\n";
  out << std::left << std::setw(42) << "system" << std::setw(14) << "computed"
      << std::setw(14) << "published"
      << "status\n";
  for (const auto& r : rows) {
    std::ostringstream c, p;
    c << std::setprecision(3) << r.computed;
    p << std::setprecision(3) << r.published;
    out << std::left << std::setw(42) << r.system << std::setw(14) << c.str()
        << std::setw(14) << p.str() << (r.ok() ? "ok" : "OUT OF TOLERANCE")
        << "\n";
  }
  return out.str();
}

std::vector<TableRow> table_one(const Defaults& d) {
  std::vector<TableRow> rows;
  const auto damping = [&](double e, double t) {
    return neutrino_damping({e, t, d.neutrino_dm2_solar}, d.csl);
  };
  rows.push_back({"neutrino cosmogenic (lambda t)",
                  damping(1e19, 3e18), 2e-55, 3.0});
  rows.push_back({"neutrino solar (lambda t)", damping(1e6, 5e2), 4e-45, 3.0});
  rows.push_back({"neutrino laboratory (lambda t)",
                  damping(1e10, 2e-2), 2e-57, 3.0});

  const std::vector<std::pair<std::string, double>> meson_published = {
      {"K", 1.5e-38}, {"B", 1.4e-34}, {"Bs", 1.7e-31}, {"D", 3.2e-37}};
  for (const auto& [name, published] : meson_published) {
    const double dm_amu = d.meson_delta_m_mev.at(name) / constants::amu_mev;
    rows.push_back({"meson " + name + " (Hz)",
                    meson_rate({name, dm_amu}, d.csl), published, 3.0});
  }

  rows.push_back({"neutrino decoherence cosmogenic (lambda t)",
                  neutrino_cumulative_damping(1e19, 3e18,
                                              d.neutrino_atmosphere_time),
                  1e-5, 3.0});
  rows.push_back({"neutrino decoherence solar (lambda t)",
                  neutrino_cumulative_damping(1e6, 5e2,
                                              d.neutrino_atmosphere_time),
                  1e-18, 3.0});
  rows.push_back({"meson decoherence bound (Hz)",
                  meson_decoherence_bound(d.zeta), 8e7, 10.0});
  rows.push_back(
      {"chiral decoherence UHV low (Hz)",
       collisional_rate({d.density_uhv, d.gas_velocity, d.sigma_dec_min}),
       1e-6, 3.0});
  rows.push_back(
      {"chiral decoherence UHV high (Hz)",
       collisional_rate({d.density_uhv, d.gas_velocity, d.sigma_dec_max}),
       1e-4, 3.0});
  rows.push_back(
      {"chiral decoherence cryo low (Hz)",
       collisional_rate({d.density_cryo, d.gas_velocity, d.sigma_dec_min}),
       1e-11, 3.0});
  rows.push_back(
      {"chiral decoherence cryo high (Hz)",
       collisional_rate({d.density_cryo, d.gas_velocity, d.sigma_dec_max}),
       1e-9, 3.0});
  return rows;
}

std::vector<TableRow> table_two(const Defaults& d) {
  return {
      {"ammonia Lambda bound (Hz)", lambda_upper_bound(d.ammonia, d.csl.r_c),
       1e16, 10.0},
      {"carboxylic acid dimer Lambda bound (Hz)",
       lambda_upper_bound(d.carboxylic_dimer, d.csl.r_c), 1e8, 10.0},
      {"Ru-D2 complex Lambda bound (Hz)",
       lambda_upper_bound(d.ru_d2, d.csl.r_c), 1e5, 10.0},
  };
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Collapse-model rates and two-level collapse dynamics"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--config", g.config_path, "defaults file (key = value)");
  auto add_overrides = [&](CLI::App* cmd) {
    cmd->add_option("--gamma", [&g](const CLI::results_t& r) {
      g.gamma = std::stod(r[0]); return true; }, "collapse strength, cm^3/s");
    cmd->add_option("--r-c", [&g](const CLI::results_t& r) {
      g.r_c = std::stod(r[0]); return true; }, "correlation length, cm");
    cmd->add_option("--m0", [&g](const CLI::results_t& r) {
      g.m0 = std::stod(r[0]); return true; }, "reference mass, amu");
    cmd->add_option("--output", g.output, "write result to file");
    cmd->add_option("--format", g.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  // simulate
  SimulateOpts sim;
  auto* c_sim = app.add_subcommand("simulate", "two-level collapse dynamics");
  c_sim->add_option("--omega-x", sim.omega_x, "oscillation frequency, Hz")
      ->required();
  c_sim->add_option("--lambda", sim.lambda, "collapse rate, Hz")->required();
  c_sim->add_option("--psi0", sim.psi0, "plus|minus|balanced|weight=<p>");
  c_sim->add_option("--T", sim.total_time, "total time, s");
  c_sim->add_option("--dt", sim.dt, "time step, s");
  c_sim->add_option("--n", sim.n, "trajectory count");
  c_sim->add_option("--seed", sim.seed, "base RNG seed");
  add_overrides(c_sim);

  // rate neutrino|meson|chiral
  auto* c_rate = app.add_subcommand("rate", "CSL collapse rates");
  c_rate->require_subcommand(1);

  struct {
    double energy = 0.0, time = 0.0;
    std::optional<double> dm2, momentum;
    std::string splitting = "solar";
  } nu;
  auto* c_nu = c_rate->add_subcommand("neutrino", "Eq-style neutrino rate");
  c_nu->add_option("--energy", nu.energy, "neutrino energy, eV")->required();
  c_nu->add_option("--time", nu.time, "flight time, s");
  c_nu->add_option("--dm2", nu.dm2, "mass-squared splitting, eV^2");
  c_nu->add_option("--splitting", nu.splitting, "solar | atmospheric")
      ->check(CLI::IsMember({"solar", "atmospheric"}));
  c_nu->add_option("--momentum", nu.momentum,
                   "momentum, eV/c (exact-energy branch)");
  add_overrides(c_nu);

  struct {
    std::string name;
    std::optional<double> delta_m_mev;
  } ms;
  auto* c_ms = c_rate->add_subcommand("meson", "neutral-meson rate");
  c_ms->add_option("--name", ms.name, "K | B | Bs | D");
  c_ms->add_option("--delta-m-mev", ms.delta_m_mev, "mass splitting, MeV");
  add_overrides(c_ms);

  struct {
    std::string left, right;
    std::size_t center = 0;
    std::string method = "both";
    std::optional<double> mu, q0_angstrom;
    std::optional<double> v0_ev, omega_0, temperature;
  } ch;
  auto* c_ch = c_rate->add_subcommand("chiral", "chiral-molecule rate");
  c_ch->add_option("--left", ch.left, "left conformation XYZ file");
  c_ch->add_option("--right", ch.right, "right conformation XYZ file");
  c_ch->add_option("--center", ch.center, "chirality-center atom index");
  c_ch->add_option("--method", ch.method, "exact | dipole | both")
      ->check(CLI::IsMember({"exact", "dipole", "both"}));
  c_ch->add_option("--mu", ch.mu, "effective mass, amu (double-well form)");
  c_ch->add_option("--q0-angstrom", ch.q0_angstrom, "minima separation, A");
  c_ch->add_option("--v0-ev", ch.v0_ev, "barrier height, eV");
  c_ch->add_option("--omega-0", ch.omega_0, "well frequency, Hz");
  c_ch->add_option("--temperature", ch.temperature, "temperature, K");
  add_overrides(c_ch);

  // bound
  struct {
    double mu = 0.0, q0_angstrom = 0.0;
    std::optional<double> omega_x, resolution, mode_frequency;
  } bd;
  auto* c_bd = app.add_subcommand("bound", "upper bound on Lambda");
  c_bd->add_option("--mu", bd.mu, "effective mass, amu")->required();
  c_bd->add_option("--q0-angstrom", bd.q0_angstrom, "minima separation, A")
      ->required();
  c_bd->add_option("--omega-x", bd.omega_x, "tunnelling splitting, Hz");
  c_bd->add_option("--resolution", bd.resolution, "relative resolution R");
  c_bd->add_option("--mode-frequency", bd.mode_frequency, "mode frequency, Hz");
  add_overrides(c_bd);

  // decohere
  auto* c_dec = app.add_subcommand("decohere", "environmental dephasing");
  c_dec->require_subcommand(1);

  struct {
    std::optional<double> density, velocity, sigma;
    std::string vacuum = "uhv";
  } dch;
  auto* c_dch = c_dec->add_subcommand("chiral", "collisional rate n v sigma");
  c_dch->add_option("--density", dch.density, "gas density, m^-3");
  c_dch->add_option("--velocity", dch.velocity, "relative velocity, m/s");
  c_dch->add_option("--sigma", dch.sigma, "cross section, m^2");
  c_dch->add_option("--vacuum", dch.vacuum, "uhv | cryo")
      ->check(CLI::IsMember({"uhv", "cryo"}));
  add_overrides(c_dch);

  struct {
    double energy = 0.0, time = 0.0;
    std::optional<double> atm_time;
  } dnu;
  auto* c_dnu = c_dec->add_subcommand("neutrino", "medium dephasing");
  c_dnu->add_option("--energy", dnu.energy, "energy, eV")->required();
  c_dnu->add_option("--time", dnu.time, "total flight time, s")->required();
  c_dnu->add_option("--atm-time", dnu.atm_time, "time in atmosphere, s");
  add_overrides(c_dnu);

  struct {
    std::optional<double> zeta, stat, syst, cl, timescale;
  } dms;
  auto* c_dms = c_dec->add_subcommand("meson", "zeta-based upper bound");
  c_dms->add_option("--zeta-mean", dms.zeta, "zeta central value");
  c_dms->add_option("--sigma-stat", dms.stat, "statistical error");
  c_dms->add_option("--sigma-syst", dms.syst, "systematic error");
  c_dms->add_option("--confidence", dms.cl, "confidence level, (0,1)");
  c_dms->add_option("--timescale", dms.timescale, "timescale, s");
  add_overrides(c_dms);

  // table
  std::string table_name;
  bool strict = false;
  auto* c_tab = app.add_subcommand("table", "reproduce published tables");
  c_tab->add_option("which", table_name, "I | II")
      ->required()
      ->check(CLI::IsMember({"I", "II", "1", "2"}));
  c_tab->add_flag("--strict", strict, "nonzero exit on out-of-tolerance cells");
  add_overrides(c_tab);

  // compare
  struct {
    std::string system;
    std::string vacuum = "cryo";
    double energy = 1e6, time = 5e2;
  } cmp;
  auto* c_cmp = app.add_subcommand("compare", "collapse vs decoherence");
  c_cmp->add_option("--system", cmp.system, "neutrino | meson | chiral")
      ->required()
      ->check(CLI::IsMember({"neutrino", "meson", "chiral"}));
  c_cmp->add_option("--vacuum", cmp.vacuum, "uhv | cryo (chiral only)")
      ->check(CLI::IsMember({"uhv", "cryo"}));
  c_cmp->add_option("--energy", cmp.energy, "neutrino energy, eV");
  c_cmp->add_option("--time", cmp.time, "neutrino flight time, s");
  add_overrides(c_cmp);

  // CLI11 wants mutable char pointers.
  std::vector<std::string> args = argv;
  std::vector<char*> cargv;
  std::string prog = "cslosc";
  cargv.push_back(prog.data());
  for (auto& a : args) cargv.push_back(a.data());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Defaults d = g.defaults();

    if (*c_sim) {
      emit(g, out, run_simulate(sim, g));
      return 0;
    }

    if (*c_nu) {
      double dm2 = nu.dm2.value_or(nu.splitting == "atmospheric"
                                       ? d.neutrino_dm2_atmospheric
                                       : d.neutrino_dm2_solar);
      NeutrinoSpec spec{nu.energy, nu.time, dm2, nu.momentum};
      RateReport rep;
      rep.system = "neutrino";
      rep.inputs = {{"energy_ev", spec.energy},
                    {"flight_time_s", spec.flight_time},
                    {"delta_m2_ev2", spec.delta_m2}};
      rep.values = {{"lambda_csl_hz", neutrino_rate(spec, d.csl)},
                    {"damping_factor", neutrino_damping(spec, d.csl)}};
      emit(g, out, rep.to_json().dump(2) + "\n");
      return 0;
    }

    if (*c_ms) {
      if (ms.name.empty() == !ms.delta_m_mev.has_value()) {
        throw std::domain_error("meson: give exactly one of --name, "
                                "--delta-m-mev");
      }
      double dm_mev;
      if (ms.delta_m_mev) {
        dm_mev = *ms.delta_m_mev;
      } else {
        auto it = d.meson_delta_m_mev.find(ms.name);
        if (it == d.meson_delta_m_mev.end()) {
          throw std::domain_error("unknown meson name: " + ms.name);
        }
        dm_mev = it->second;
      }
      MesonSpec spec{ms.name.empty() ? "custom" : ms.name,
                     dm_mev / constants::amu_mev};
      RateReport rep;
      rep.system = "meson " + spec.name;
      rep.inputs = {{"delta_m_mev", dm_mev}};
      rep.values = {{"lambda_csl_hz", meson_rate(spec, d.csl)}};
      emit(g, out, rep.to_json().dump(2) + "\n");
      return 0;
    }

    if (*c_ch) {
      RateReport rep;
      rep.system = "chiral";
      if (ch.mu && ch.q0_angstrom) {
        DoubleWellSpec spec{*ch.mu, *ch.q0_angstrom * constants::angstrom_cm,
                            0.0, ch.v0_ev.value_or(0.0),
                            ch.omega_0.value_or(0.0)};
        rep.inputs = {{"mu_amu", spec.mu},
                      {"q0_angstrom", *ch.q0_angstrom}};
        rep.values = {{"lambda_csl_hz", chiral_rate_doublewell(spec, d.csl)}};
        if (ch.temperature) {
          rep.validity =
              validity_string(validate_twolevel(spec, *ch.temperature));
        }
      } else if (!ch.left.empty() && !ch.right.empty()) {
        const auto geom = build_pair(load_xyz_file(ch.left),
                                     load_xyz_file(ch.right), ch.center);
        rep.inputs = {{"left", ch.left},
                      {"right", ch.right},
                      {"center_index", ch.center},
                      {"n_superposed", geom.n_superposed},
                      {"nucleon_count", geom.nucleon_count}};
        if (ch.method == "exact" || ch.method == "both") {
          rep.values["lambda_csl_exact_hz"] = chiral_rate_exact(geom, d.csl);
        }
        if (ch.method == "dipole" || ch.method == "both") {
          rep.values["lambda_csl_dipole_hz"] = chiral_rate_dipole(geom, d.csl);
        }
        if (geom.max_displacement() > 0.1 * d.csl.r_c) {
          err << "warning: displacements exceed 0.1 r_C, dipole expansion "
                 "degrades\n";
        }
      } else {
        throw std::domain_error(
            "chiral: give --left/--right or --mu/--q0-angstrom");
      }
      emit(g, out, rep.to_json().dump(2) + "\n");
      return 0;
    }

    if (*c_bd) {
      DoubleWellSpec spec{bd.mu, bd.q0_angstrom * constants::angstrom_cm,
                          bd.omega_x.value_or(0.0), 0.0, 0.0};
      RateReport rep;
      rep.kind = "bound";
      rep.system = "double well";
      rep.inputs = {{"mu_amu", bd.mu}, {"q0_angstrom", bd.q0_angstrom}};
      double bound;
      if (bd.resolution || bd.mode_frequency) {
        if (!bd.resolution || !bd.mode_frequency) {
          throw std::domain_error(
              "bound: --resolution and --mode-frequency go together");
        }
        bound = bound_from_resolution(*bd.resolution, *bd.mode_frequency, spec,
                                      d.csl.r_c);
        rep.inputs["resolution"] = *bd.resolution;
        rep.inputs["mode_frequency_hz"] = *bd.mode_frequency;
      } else if (bd.omega_x) {
        bound = lambda_upper_bound(spec, d.csl.r_c);
        rep.inputs["omega_x_hz"] = *bd.omega_x;
      } else {
        throw std::domain_error(
            "bound: give --omega-x or --resolution/--mode-frequency");
      }
      rep.values = {{"lambda_max_hz", bound}};
      emit(g, out, rep.to_json().dump(2) + "\n");
      return 0;
    }

    if (*c_dch) {
      const double n = dch.density.value_or(
          dch.vacuum == "cryo" ? d.density_cryo : d.density_uhv);
      const double v = dch.velocity.value_or(d.gas_velocity);
      RateReport rep;
      rep.kind = "decoherence";
      rep.system = "chiral";
      rep.inputs = {{"density_m3", n}, {"velocity_m_s", v}};
      if (dch.sigma) {
        rep.inputs["sigma_m2"] = *dch.sigma;
        rep.values = {{"lambda_dec_hz", collisional_rate({n, v, *dch.sigma})}};
      } else {
        rep.inputs["sigma_m2_band"] = {d.sigma_dec_min, d.sigma_dec_max};
        rep.values = {
            {"lambda_dec_min_hz", collisional_rate({n, v, d.sigma_dec_min})},
            {"lambda_dec_max_hz", collisional_rate({n, v, d.sigma_dec_max})}};
      }
      emit(g, out, rep.to_json().dump(2) + "\n");
      return 0;
    }

    if (*c_dnu) {
      const double atm = dnu.atm_time.value_or(d.neutrino_atmosphere_time);
      RateReport rep;
      rep.kind = "decoherence";
      rep.system = "neutrino";
      rep.inputs = {{"energy_ev", dnu.energy},
                    {"total_time_s", dnu.time},
                    {"atmosphere_time_s", atm}};
      rep.values = {{"damping_factor",
                     neutrino_cumulative_damping(dnu.energy, dnu.time, atm)}};
      emit(g, out, rep.to_json().dump(2) + "\n");
      return 0;
    }

    if (*c_dms) {
      ZetaMeasurement zm = d.zeta;
      if (dms.zeta) zm.zeta_mean = *dms.zeta;
      if (dms.stat) zm.sigma_stat = *dms.stat;
      if (dms.syst) zm.sigma_syst = *dms.syst;
      if (dms.cl) zm.confidence_level = *dms.cl;
      if (dms.timescale) zm.timescale_s = *dms.timescale;
      RateReport rep;
      rep.kind = "decoherence";
      rep.system = "meson";
      rep.inputs = {{"zeta_mean", zm.zeta_mean},
                    {"sigma_stat", zm.sigma_stat},
                    {"sigma_syst", zm.sigma_syst},
                    {"confidence_level", zm.confidence_level},
                    {"timescale_s", zm.timescale_s}};
      rep.values = {{"lambda_dec_bound_hz", meson_decoherence_bound(zm)}};
      emit(g, out, rep.to_json().dump(2) + "\n");
      return 0;
    }

    if (*c_tab) {
      const bool one = table_name == "I" || table_name == "1";
      const auto rows = one ? table_one(d) : table_two(d);
      emit(g, out,
           render_table(one ? "Table I: collapse and decoherence rates"
                            : "Table II: bounds on Lambda",
                        rows, g.format == "json"));
      if (strict) {
        for (const auto& r : rows) {
          if (!r.ok()) return 3;
        }
      }
      return 0;
    }

    if (*c_cmp) {
      json j{{"system", cmp.system}};
      double csl_value = 0.0, dec_value = 0.0;
      if (cmp.system == "neutrino") {
        NeutrinoSpec spec{cmp.energy, cmp.time, d.neutrino_dm2_solar};
        csl_value = neutrino_damping(spec, d.csl);
        dec_value = neutrino_cumulative_damping(cmp.energy, cmp.time,
                                                d.neutrino_atmosphere_time);
        j["lambda_csl_damping"] = csl_value;
        j["lambda_dec_damping"] = dec_value;
      } else if (cmp.system == "meson") {
        const double dm_amu =
            d.meson_delta_m_mev.at("K") / constants::amu_mev;
        csl_value = meson_rate({"K", dm_amu}, d.csl);
        dec_value = meson_decoherence_bound(d.zeta);
        j["lambda_csl_hz"] = csl_value;
        j["lambda_dec_bound_hz"] = dec_value;
      } else {
        csl_value = chiral_rate_doublewell(d.sulfoxide_like, d.csl);
        const double density =
            cmp.vacuum == "cryo" ? d.density_cryo : d.density_uhv;
        dec_value =
            collisional_rate({density, d.gas_velocity, d.sigma_dec_min});
        j["lambda_csl_hz"] = csl_value;
        j["lambda_dec_min_hz"] = dec_value;
        j["lambda_dec_max_hz"] =
            collisional_rate({density, d.gas_velocity, d.sigma_dec_max});
        j["vacuum"] = cmp.vacuum;
      }
      j["verdict"] = dec_value > csl_value ? "decoherence dominates"
                                           : "collapse potentially observable";
      emit(g, out, j.dump(2) + "\n");
      return 0;
    }

    err << "no subcommand selected\n";
    return 2;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParameter& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UnitError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const GeometryError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const StepSizeError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cslosc
