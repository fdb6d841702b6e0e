#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "mgom/cavity.hpp"
#include "mgom/constants.hpp"
#include "mgom/criteria.hpp"
#include "mgom/levitation.hpp"
#include "mgom/mechanics.hpp"
#include "mgom/quantum_noise.hpp"
#include "mgom/suspension.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mgom;
using mgom::testing::rel_diff;

TEST_SUITE("criteria") {

TEST_CASE("quantum cooperativity equals the force-noise ratio") {
  testing::Rng rng(4242);
  for (int i = 0; i < 200; ++i) {
    const auto sys = testing::make_doppler_system(rng);
    const auto coop =
        cooperativity(sys.osc, sys.coupling.g_squared(), sys.resp.kappa);
    const auto input = testing::quantum_input_of(sys);
    const double w = sys.osc.omega_m;  // well below kappa by construction
    const double ratio =
        displacement_to_force_psd(input, w, radiation_pressure_psd(input, w)) /
        thermal_force_psd(sys.osc, w);
    CHECK(rel_diff(coop.c_qu, ratio) < 1e-6);
  }
}

TEST_CASE("zero-temperature bath makes the quantum cooperativity unbounded") {
  MechanicalOscillator cold(1e-6, constants::two_pi, 1e5,
                            DampingModel::viscous, 0.0);
  const auto coop = cooperativity(cold, 1e10, 1e7);
  CHECK(coop.unbounded);
  CHECK(std::isinf(coop.c_qu));
}

TEST_CASE("levitated 0.2 mg mirror reaches a quantum cooperativity near 2e3") {
  // 0.2 mg mirror floated by its own readout beam (finesse 100, 1064 nm),
  // residual helium at 1e-5 Pa; plausibility band of a factor 3 around the
  // published 2e3.
  const double mass = 2e-7;
  const double length = 0.01;
  const Environment env(1e-5, *gas_molecule_mass("helium"), 1.0,
                        cylinder_area(0.35e-3, 0.23e-3));
  const double gamma_gas = gas_damping(mass, env, 300.0);
  CHECK(gamma_gas == doctest::Approx(8.0787e-8).epsilon(1e-4));

  const double omega_m = constants::two_pi * 340.0;
  MechanicalOscillator osc(mass, omega_m, omega_m / gamma_gas,
                           DampingModel::viscous, 300.0);
  const auto resp = response_from_finesse(length, 100.0);
  const auto coupling =
      coupling_params(osc, length, 1064e-9, levitation_power(mass));
  const auto coop = cooperativity(osc, coupling.g_squared(), resp.kappa);
  CHECK(coop.c_qu == doctest::Approx(1.16191e3).epsilon(1e-3));
  CHECK(coop.c_qu > 2e3 / 3.0);
  CHECK(coop.c_qu < 2e3 * 3.0);
}

TEST_CASE("measurement rate definition and scaling") {
  MechanicalOscillator osc(1e-6, constants::two_pi, 1e5,
                           DampingModel::viscous, 300.0);
  const double s_imp = 1e-30;
  const double rate = measurement_rate(osc, s_imp);
  const double x_zpf = zero_point_fluctuation(osc);
  CHECK(rate == doctest::Approx(x_zpf * x_zpf / (2.0 * s_imp)).epsilon(1e-12));
  CHECK(measurement_rate(osc, 2.0 * s_imp) == doctest::Approx(rate / 2.0));
  CHECK_THROWS_AS(measurement_rate(osc, 0.0), std::domain_error);
  CHECK_THROWS_AS(measurement_rate(osc, -1.0), std::domain_error);
}

TEST_CASE("shot-limited measurement rate reduces to C gamma_m") {
  testing::Rng rng(31337);
  for (int i = 0; i < 200; ++i) {
    const auto sys = testing::make_doppler_system(rng);
    const auto input = testing::quantum_input_of(sys);
    const double rate =
        measurement_rate(sys.osc, shot_noise_psd(input, sys.osc.omega_m));
    const auto coop =
        cooperativity(sys.osc, sys.coupling.g_squared(), sys.resp.kappa);
    CHECK(rel_diff(rate, coop.c * sys.osc.damping_rate(sys.osc.omega_m)) < 1e-6);
  }
}

TEST_CASE("measurement-rate verdict matches the cooperativity threshold") {
  testing::Rng rng(999);
  for (int i = 0; i < 200; ++i) {
    const auto sys = testing::make_doppler_system(rng);
    const auto input = testing::quantum_input_of(sys);
    const double rate =
        measurement_rate(sys.osc, shot_noise_psd(input, sys.osc.omega_m));
    const double gamma_th = thermal_decoherence_rate(sys.osc);
    const auto coop =
        cooperativity(sys.osc, sys.coupling.g_squared(), sys.resp.kappa);
    if (rel_diff(coop.c_qu, 0.125) < 1e-5) continue;  // knife edge
    CHECK(measurement_rate_sufficient(rate, gamma_th) == (coop.c_qu >= 0.125));
  }
}

TEST_CASE("f*Q threshold constant at room temperature") {
  MechanicalOscillator osc(1e-6, constants::two_pi, 1e5,
                           DampingModel::viscous, 300.0);
  const auto report =
      fq_criterion(osc, EffectiveDynamics{osc.omega_m,
                                          osc.damping_rate(osc.omega_m), true});
  CHECK(report.threshold_hz == doctest::Approx(6.25099e12).epsilon(1e-4));
  CHECK(rel_diff(report.threshold_hz, 6e12) < 0.05);
  CHECK(report.alpha == 2);
  CHECK_FALSE(report.pass);
}

TEST_CASE("quoted effective numbers pass with the published margin") {
  const auto report = fq_product_check(280.0, 3e10, 300.0);
  CHECK(report.product_hz == doctest::Approx(8.4e12).epsilon(1e-12));
  CHECK(report.margin == doctest::Approx(1.34379).epsilon(1e-4));
  CHECK(report.pass);
}

TEST_CASE("f*Q dilution exponent tracks the damping model") {
  const double f_eff = 280.0;
  MechanicalOscillator seth(7e-6, constants::two_pi * 2.2, 2e6,
                            DampingModel::structure, 300.0);
  const EffectiveDynamics dyn{constants::two_pi * f_eff,
                              seth.damping_rate(seth.omega_m), true};
  const auto report = fq_criterion(seth, dyn);
  CHECK(report.alpha == 3);
  // The effective product equals f_eff * Q_eff with Q_eff from the damping
  // model at omega_eff; both routes share one margin.
  const double q_eff = dyn.omega_eff / seth.damping_rate(dyn.omega_eff);
  CHECK(rel_diff(report.effective_product_hz, f_eff * q_eff) < 1e-9);
  CHECK(rel_diff(report.margin,
                 report.effective_product_hz /
                     (constants::boltzmann * 300.0 / constants::planck)) < 1e-9);
  CHECK(report.pass);

  MechanicalOscillator viscous(7e-6, constants::two_pi * 2.2, 2e6,
                               DampingModel::viscous, 300.0);
  const auto v_report = fq_criterion(viscous, dyn);
  CHECK(v_report.alpha == 2);
  // Structure damping gains more from the same optical dilution.
  CHECK(report.margin > v_report.margin);

  CHECK_THROWS_AS(fq_criterion(seth, EffectiveDynamics{seth.omega_m / 2.0,
                                                       1.0, true}),
                  std::domain_error);
}

TEST_CASE("effective occupancy") {
  MechanicalOscillator osc(1e-6, constants::two_pi, 1e5,
                           DampingModel::viscous, 300.0);
  const double gamma_m = osc.damping_rate(osc.omega_m);

  const auto none = effective_occupancy(osc, {osc.omega_m, gamma_m, true});
  CHECK(none.n_eff == doctest::Approx(osc.thermal_occupancy()).epsilon(1e-12));
  CHECK_FALSE(none.overdamped);

  // Structure damping drops faster with omega_eff than viscous.
  MechanicalOscillator structural(1e-6, constants::two_pi, 1e5,
                                  DampingModel::structure, 300.0);
  const EffectiveDynamics lifted{10.0 * osc.omega_m, 5.0 * gamma_m, true};
  const double n_v = effective_occupancy(osc, lifted).n_eff;
  const double n_s = effective_occupancy(structural, lifted).n_eff;
  CHECK(n_s == doctest::Approx(n_v / 10.0).epsilon(1e-9));

  const auto damped = effective_occupancy(osc, {osc.omega_m, osc.omega_m, true});
  CHECK(damped.overdamped);
  CHECK_THROWS_AS(effective_occupancy(osc, {osc.omega_m, 0.0, false}),
                  std::domain_error);
}

TEST_CASE("verdicts are invariant under a joint mass/power rescale") {
  testing::Rng rng(555);
  for (int i = 0; i < 50; ++i) {
    const auto sys = testing::make_doppler_system(rng);
    const double alpha = rng.log_uniform(0.1, 10.0);
    MechanicalOscillator scaled(sys.osc.mass * alpha, sys.osc.omega_m,
                                sys.osc.quality, sys.osc.model,
                                sys.osc.temperature);
    const auto scaled_coupling = coupling_params(
        scaled, sys.length, sys.wavelength, sys.p_circ * alpha);
    const auto a = cooperativity(sys.osc, sys.coupling.g_squared(), sys.resp.kappa);
    const auto b = cooperativity(scaled, scaled_coupling.g_squared(), sys.resp.kappa);
    CHECK(rel_diff(a.c_qu, b.c_qu) < 1e-9);
    CHECK(rel_diff(a.c, b.c) < 1e-9);
  }
}

}  // TEST_SUITE
