// mgom: noise budgets and design checks for milligram-scale optomechanics.
//
// Subcommands: budget | criteria | design-pendulum | compare-torsion |
// levitation-check | simulate. Reports are deterministic "key: value" lines;
// derived quantities carry their defining formula in brackets. All CLI
// frequencies are in Hz.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mgom/config.hpp"
#include "mgom/criteria.hpp"
#include "mgom/langevin.hpp"
#include "mgom/levitation.hpp"
#include "mgom/mechanics.hpp"
#include "mgom/quantum_noise.hpp"
#include "mgom/textio.hpp"
#include "mgom/torsion.hpp"

namespace {

using namespace mgom;

bool g_quiet = false;

void line(const std::string& key, const std::string& value,
          const std::string& anchor = "") {
  std::cout << key << ": " << value;
  if (!anchor.empty()) std::cout << "  [" << anchor << "]";
  std::cout << "\n";
}

void line(const std::string& key, double value, const std::string& anchor = "") {
  line(key, format_sci(value), anchor);
}

void note(const std::string& text) {
  if (!g_quiet) std::cout << "# " << text << "\n";
}

MechanismSet parse_mechanisms(const std::string& spec) {
  MechanismSet set{false, false, false};
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    const std::string item =
        spec.substr(start, comma == std::string::npos ? spec.size() - start
                                                      : comma - start);
    if (item == "shot") set.shot = true;
    else if (item == "rad") set.radiation_pressure = true;
    else if (item == "thermal") set.thermal = true;
    else if (item == "none" || item.empty()) {}
    else throw ConfigError("unknown mechanism '" + item + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (set.none()) throw ConfigError("all noise mechanisms disabled");
  return set;
}

int cmd_budget(const SystemConfig& config, double f_min, double f_max,
               int points, const MechanismSet& mechanisms,
               const std::string& out_path) {
  const AssembledSystem sys = build_system(config);
  const QuantumNoiseInput qin = quantum_noise_input(
      sys.osc, sys.coupling, sys.resp, sys.drive.efficiency);
  const FrequencyGrid grid = FrequencyGrid::log_spaced_hz(f_min, f_max, points);
  const NoiseBudget budget =
      build_budget(sys.osc, qin, grid, mechanisms, sys.drive.detuning);

  std::vector<double> f_hz;
  f_hz.reserve(grid.size());
  for (double w : grid.omega) f_hz.push_back(w / constants::two_pi);

  auto asd = [](const std::vector<double>& psd) {
    std::vector<double> out;
    out.reserve(psd.size());
    for (double v : psd) out.push_back(std::sqrt(v));
    return out;
  };

  write_csv(out_path,
            {"f_hz", "shot_asd_m", "rad_asd_m", "thermal_asd_m", "total_asd_m",
             "shot_asd_n", "rad_asd_n", "thermal_asd_n", "total_asd_n"},
            {f_hz, asd(budget.displacement.at("shot")),
             asd(budget.displacement.at("radiation_pressure")),
             asd(budget.displacement.at("thermal")),
             asd(budget.displacement.at("total")), asd(budget.force.at("shot")),
             asd(budget.force.at("radiation_pressure")),
             asd(budget.force.at("thermal")), asd(budget.force.at("total"))});

  if (!g_quiet) {
    for (const auto& [k, v] : budget.metadata) note("budget " + k + " = " + v);
    const SqlFrequency sql = sql_touching_frequency(qin);
    line("omega_sql_rad_s", sql.omega, "sqrt(4 hbar G^2 n_circ / (M kappa))");
    line("f_sql_hz", sql.omega / constants::two_pi);
    if (!sql.free_mass_ok || !sql.cavity_pole_ok)
      note("omega_sql outside its free-mass Doppler window; closed form is "
           "approximate");
    line("csv", out_path);
  }
  return 0;
}

int cmd_criteria(const SystemConfig& config) {
  const AssembledSystem sys = build_system(config);
  const MechanicalOscillator& osc = sys.osc;

  const Cooperativity coop =
      cooperativity(osc, sys.coupling.g_squared(), sys.resp.kappa);
  line("cooperativity_C", coop.c, "2 g^2 / (gamma_m kappa)");
  if (coop.unbounded)
    line("quantum_cooperativity_Cqu", "unbounded (T = 0)", "C / n_th");
  else
    line("quantum_cooperativity_Cqu", coop.c_qu, "C / n_th");
  line("cqu_verdict", coop.c_qu > 1.0 ? "PASS" : "FAIL",
       "radiation-pressure force noise above thermal");

  const QuantumNoiseInput qin =
      quantum_noise_input(osc, sys.coupling, sys.resp, sys.drive.efficiency);
  const double s_imp = shot_noise_psd(qin, osc.omega_m);
  const double gamma_meas = measurement_rate(osc, s_imp);
  const double gamma_th = thermal_decoherence_rate(osc);
  line("measurement_rate_1_s", gamma_meas, "x_zpf^2 / (2 S_imp(omega_m))");
  line("thermal_decoherence_rate_1_s", gamma_th, "n_th gamma_m");
  line("measurement_rate_verdict",
       measurement_rate_sufficient(gamma_meas, gamma_th) ? "PASS" : "FAIL",
       "Gamma_meas >= Gamma_th / 8");
  line("minimum_phonon_doppler", minimum_phonon_doppler(sys.resp.kappa, osc.omega_m),
       "kappa / (2 omega_m)");

  if (config.environment) {
    const auto& es = *config.environment;
    const Environment env(es.pressure_pa, es.molecule_mass(), es.shape_c,
                          es.area());
    note("assumptions: gas = " + es.gas + ", shape_c = " +
         format_sci(es.shape_c, 3) + ", area_m2 = " + format_sci(es.area(), 4));
    const double gamma_gas = gas_damping(osc.mass, env, osc.temperature);
    line("gamma_gas_1_s", gamma_gas, "(p A / C m) sqrt(m_gas / k_B T)");
    line("q_gas_limit", osc.omega_m / gamma_gas, "omega_m / gamma_gas");
  }

  FqReport fq{};
  if (config.effective) {
    const auto& eff = *config.effective;
    const double omega_eff = constants::two_pi * eff.f_eff_hz;
    double q_eff = 0.0;
    if (eff.q_eff) {
      q_eff = *eff.q_eff;
      fq = fq_product_check(eff.f_eff_hz, q_eff, osc.temperature);
      note("effective-mode numbers quoted directly from the config");
    } else {
      EffectiveDynamics dyn{omega_eff, osc.damping_rate(osc.omega_m), true};
      fq = fq_criterion(osc, dyn);
      q_eff = omega_eff / osc.damping_rate(omega_eff);
      note("q_eff derived from the damping model at omega_eff");
    }
    line("f_eff_hz", eff.f_eff_hz);
    line("q_eff", q_eff, "omega_eff / gamma_m(omega_eff)");
  } else {
    EffectiveDynamics bare{osc.omega_m, osc.damping_rate(osc.omega_m), true};
    fq = fq_criterion(osc, bare);
    note("no [effective] section: f*Q evaluated without optical dilution");
  }
  line("fq_product_hz", fq.product_hz, "f Q");
  line("fq_threshold_hz", fq.threshold_hz,
       "(k_B T / h)(omega_m / omega_eff)^alpha");
  line("fq_margin", fq.margin, "product / threshold");
  line("fq_verdict", fq.pass ? "PASS" : "FAIL");
  return 0;
}

int cmd_design_pendulum(const SystemConfig& config, double f_v_min_hz) {
  if (!config.oscillator || !config.suspension)
    throw ConfigError("design-pendulum needs [oscillator] and [suspension]");
  const double mass = config.oscillator->mass_kg;
  const auto& ss = *config.suspension;

  DesignConstraints constraints{f_v_min_hz, ss.s_w, ss.n_w, 0.0};
  const MaxQDesign design = max_q_design(mass, ss.material, constraints);

  note("assumptions: s_w = " + format_sci(ss.s_w, 3) +
       ", n_w = " + std::to_string(ss.n_w) + ", material = " + ss.material.name);
  line("r_w_m", design.suspension.r_w, "sqrt(s_w T_w / (pi H_w))");
  line("l_w_m", design.suspension.l_w, "(1 / 2 f_v) sqrt(T_w / (rho pi r_w^2))");
  line("violin_hz", design.violin_hz);
  line("tensile_bound_active", design.tensile_bound_active ? "yes" : "no");
  line("k_grav_n_m", design.springs.k_grav, "m g / l_w");
  line("k_el_n_m", design.springs.k_el, "n_w sqrt(pi T E I) / (2 l_w^2)");
  line("dilution_lambda", design.springs.dilution,
       "(4 l_w / r_w^2) sqrt(m g / (pi n_w E))");
  line("q_el", ss.material.q_el(design.suspension.r_w));
  line("q_pendulum", design.q, "Lambda Q_el");
  line("f_m_hz", design.springs.omega_m / constants::two_pi,
       "sqrt((k_grav + k_el) / m) / 2 pi");
  return 0;
}

int cmd_compare_torsion(const SystemConfig& config) {
  if (!config.oscillator || !config.suspension || !config.torsion)
    throw ConfigError(
        "compare-torsion needs [oscillator], [suspension] and [torsion]");
  const double mass = config.oscillator->mass_kg;
  const auto& ts = *config.torsion;
  const Suspension susp = config.suspension->suspension();

  note("assumptions: a = " + format_sci(ts.a, 4) +
       ", s_w = " + format_sci(susp.safety_factor, 3) + ", nu = " +
       format_sci(susp.material.poisson_ratio, 3));

  const TorsionBar bar(mass, ts.d_m, ts.a);
  const TorsionDampingRatio ratio = damping_ratio(mass, ts.d_m, ts.a, susp);
  line("gamma_ratio_geometric", ratio.geometric,
       "l r^2 / (a (1+nu) d^2) sqrt(pi E / (m g))");
  line("gamma_ratio_tensile_form", ratio.tensile_form,
       "l s / (a (1+nu) H d^2) sqrt(m g E / pi)");
  line("cmr_requirement", common_mode_rejection_requirement(ratio.geometric),
       "sqrt(gamma_tor / gamma_pend)");
  line("sql_frequency_gain", 1.0 / std::sqrt(4.0 * ts.a),
       "omega_sql_tor / omega_sql = 1 / sqrt(4 a)");
  line("cqu_gain_equal_gamma", 1.0 / (4.0 * ts.a), "1 / (4 a)");

  const std::complex<double> k_tor = torsion_spring(susp);
  line("torsion_spring_n_m_rad", k_tor.real(),
       "pi E r^4 / (4 (1+nu) l)");
  line("torsion_spring_loss_angle", k_tor.imag() / k_tor.real(), "phi_el, undiluted");
  line("f_tor_hz", torsion_resonance(k_tor, bar) / constants::two_pi,
       "sqrt(Re K / I) / 2 pi");
  line("inertia_kg_m2", bar.inertia(), "a m d^2");
  return 0;
}

int cmd_levitation_check(const SystemConfig& config) {
  if (!config.oscillator || !config.cavity || !config.laser)
    throw ConfigError(
        "levitation-check needs [oscillator], [cavity] and [laser]");
  const double mass = config.oscillator->mass_kg;
  const auto& cs = *config.cavity;
  const double wavelength = config.laser->wavelength_m;

  const double p_lev = levitation_power(mass);
  line("p_lev_w", p_lev, "m g c / 2");

  const CavityResponse resp =
      cs.t_in ? cavity_response(OpticalCavity(cs.length_m, *cs.t_in,
                                              cs.extra_loss, cs.r1, cs.r2))
              : response_from_finesse(cs.length_m, *cs.finesse);
  const double omega_sql = levitation_sql_frequency(resp.finesse, wavelength);
  line("omega_sql_rad_s", omega_sql, "sqrt(16 F g / lambda)");
  line("f_sql_hz", omega_sql / constants::two_pi);
  const double bound = finesse_bound(cs.length_m, wavelength);
  line("finesse_bound", bound, "(pi^2 c^2 lambda / (64 L^2 g))^(1/3)");
  line("finesse_ratio", resp.finesse / bound, "advisory: keep below ~0.1");
  line("kappa_rad_s", resp.kappa);
  line("sql_below_cavity_pole", omega_sql < resp.kappa ? "yes" : "no");

  if (config.upper_cavity) {
    const auto& us = *config.upper_cavity;
    const LevitationCavity lower{
        OpticalCavity(cs.length_m, cs.t_in.value_or(1.0), cs.extra_loss, cs.r1,
                      cs.r2),
        p_lev, constants::two_pi * config.laser->detuning_hz};
    const LevitationCavity upper{
        OpticalCavity(us.length_m, 1.0, 0.0, us.r1, us.r2), us.p_circ_w,
        constants::two_pi * us.detuning_hz};
    const SandwichReport report = sandwich_stability_check(
        lower, upper, MirrorConvexity::convex_down);
    line("sandwich_vertical", report.vertical_trapped ? "PASS" : "FAIL");
    line("sandwich_rotational", report.rotational_trapped ? "PASS" : "FAIL");
    line("sandwich_horizontal", report.horizontal_trapped ? "PASS" : "FAIL",
         "net Sidles-Sigg stiffness > 0");
    for (const auto& n : report.notes) note(n);
  } else {
    note("no [upper_cavity] section: sandwich stability not evaluated");
  }
  return 0;
}

int cmd_simulate(const SystemConfig& config, double dt, double duration,
                 std::uint64_t seed, double feedback_gain, double x0, double v0,
                 const std::string& out_path, const std::string& psd_path,
                 int segments) {
  if (!config.oscillator) throw ConfigError("simulate needs [oscillator]");
  const auto& o = *config.oscillator;
  MechanicalOscillator osc(o.mass_kg, constants::two_pi * o.f_m_hz, o.q,
                           o.damping, o.temperature_k);
  SimConfig sim{osc, dt, duration, seed, feedback_gain, x0, v0};
  const Trajectory traj = simulate(sim);

  std::vector<double> t(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) t[i] = traj.time(i);
  write_csv(out_path, {"t", "x", "v"}, {t, traj.x, traj.v});
  if (!g_quiet) {
    line("samples", static_cast<double>(traj.size()));
    line("variance_x_m2", traj.variance_x(traj.size() / 10));
    line("csv", out_path);
  }
  if (!psd_path.empty()) {
    const PsdEstimate psd = psd_estimate(traj, segments);
    write_csv(psd_path, {"f_hz", "psd"}, {psd.f_hz, psd.psd});
    if (!g_quiet) line("psd_csv", psd_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noise budgets and design checks for milligram-scale "
               "optomechanical systems"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  app.add_option("--config", config_path, "Config file path")->required();
  app.add_option("--out", out_path, "Output path for commands that write files");
  app.add_flag("--quiet", g_quiet, "Suppress notes and summaries");

  auto* budget = app.add_subcommand("budget", "Noise-budget CSV over a log grid");
  double f_min = 1.0, f_max = 1e4;
  int points = 500;
  std::string mechanisms = "shot,rad,thermal";
  budget->add_option("--f-min-hz", f_min, "Grid start (Hz)");
  budget->add_option("--f-max-hz", f_max, "Grid end (Hz)");
  budget->add_option("--points", points, "Grid points");
  budget->add_option("--mechanisms", mechanisms,
                     "Comma list from shot,rad,thermal");

  auto* criteria = app.add_subcommand("criteria", "Quantum-regime criteria report");
  auto* design = app.add_subcommand("design-pendulum",
                                    "Max-Q suspension under a violin-mode floor");
  double f_v_min = 3000.0;
  design->add_option("--f-v-min-hz", f_v_min, "First violin mode floor (Hz)");

  auto* compare = app.add_subcommand("compare-torsion",
                                     "Torsion vs pendulum readout trade");
  auto* levitation = app.add_subcommand("levitation-check",
                                        "Levitation power, SQL and finesse bound");

  auto* simulate_cmd = app.add_subcommand("simulate",
                                          "Time-domain thermal-noise trajectory");
  double dt = 1e-3, duration = 0.0, feedback_gain = 0.0, x0 = 0.0, v0 = 0.0;
  std::uint64_t seed = 0;
  int segments = 16;
  std::string psd_path;
  simulate_cmd->add_option("--dt", dt, "Step (s)")->required();
  simulate_cmd->add_option("--duration", duration, "Length (s)")->required();
  simulate_cmd->add_option("--seed", seed, "RNG seed");
  simulate_cmd->add_option("--feedback-gain", feedback_gain,
                           "Cold-damping rate added to gamma (1/s)");
  simulate_cmd->add_option("--x0", x0, "Initial displacement (m)");
  simulate_cmd->add_option("--v0", v0, "Initial velocity (m/s)");
  simulate_cmd->add_option("--psd-out", psd_path, "Also write a PSD CSV here");
  simulate_cmd->add_option("--segments", segments, "PSD averaging segments");

  CLI11_PARSE(app, argc, argv);

  try {
    const mgom::SystemConfig config = mgom::load_config_file(config_path);
    if (budget->parsed()) {
      if (out_path.empty()) throw mgom::ConfigError("budget needs --out");
      return cmd_budget(config, f_min, f_max, points,
                        parse_mechanisms(mechanisms), out_path);
    }
    if (criteria->parsed()) return cmd_criteria(config);
    if (design->parsed()) return cmd_design_pendulum(config, f_v_min);
    if (compare->parsed()) return cmd_compare_torsion(config);
    if (levitation->parsed()) return cmd_levitation_check(config);
    if (simulate_cmd->parsed()) {
      if (out_path.empty()) throw mgom::ConfigError("simulate needs --out");
      return cmd_simulate(config, dt, duration, seed, feedback_gain, x0, v0,
                          out_path, psd_path, segments);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
