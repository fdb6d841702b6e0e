#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>
#include <vector>

#include "mgom/constants.hpp"
#include "mgom/langevin.hpp"
#include "mgom/mechanics.hpp"
#include "support/oracles.hpp"

using namespace mgom;
using mgom::testing::linear_fit;
using mgom::testing::rel_diff;

namespace {

MechanicalOscillator thermal_osc(double quality, double temperature = 300.0) {
  return MechanicalOscillator(1e-6, constants::two_pi, quality,
                              DampingModel::viscous, temperature);
}

double band_average_db(const PsdEstimate& est,
                       const MechanicalOscillator& osc, double f_lo,
                       double f_hi) {
  double acc = 0.0;
  int count = 0;
  for (std::size_t k = 1; k + 1 < est.f_hz.size(); ++k) {
    if (est.f_hz[k] < f_lo || est.f_hz[k] > f_hi) continue;
    const double analytic =
        thermal_displacement_psd(osc, constants::two_pi * est.f_hz[k]);
    acc += est.psd[k] / analytic;
    ++count;
  }
  REQUIRE(count >= 10);
  return 10.0 * std::log10(acc / count);
}

}  // namespace

TEST_SUITE("langevin") {

TEST_CASE("config validation") {
  const auto osc = thermal_osc(10.0);
  // Too-coarse step.
  CHECK_THROWS_AS(simulate(SimConfig{osc, 0.1, 200.0, 1, 0.0, 0.0, 0.0}),
                  std::invalid_argument);
  // Too-short duration.
  CHECK_THROWS_AS(simulate(SimConfig{osc, 0.01, 10.0, 1, 0.0, 0.0, 0.0}),
                  std::invalid_argument);
  // Structure damping has no causal time-domain form here.
  MechanicalOscillator structural(1e-6, constants::two_pi, 10.0,
                                  DampingModel::structure, 300.0);
  CHECK_THROWS_AS(simulate(SimConfig{structural, 0.01, 200.0, 1, 0.0, 0.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate(SimConfig{osc, 0.01, 200.0, 1, -1.0, 0.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("seeded determinism is bitwise") {
  const SimConfig config{thermal_osc(10.0), 0.01, 200.0, 42, 0.0, 1e-9, 0.0};
  const auto a = simulate(config);
  const auto b = simulate(config);
  REQUIRE(a.size() == b.size());
  CHECK(a.x == b.x);
  CHECK(a.v == b.v);
  const SimConfig other{thermal_osc(10.0), 0.01, 200.0, 43, 0.0, 1e-9, 0.0};
  CHECK(simulate(other).x != a.x);
}

TEST_CASE("trajectory length matches duration/dt") {
  const SimConfig config{thermal_osc(10.0), 0.01, 200.0, 7, 0.0, 0.0, 0.0};
  const auto traj = simulate(config);
  CHECK(traj.size() == 20001);
  CHECK(traj.time(traj.size() - 1) == doctest::Approx(200.0));
}

TEST_CASE("cold ring-down decays at the energy damping rate") {
  MechanicalOscillator osc(1e-6, constants::two_pi, 10.0,
                           DampingModel::viscous, 0.0);
  const double gamma = osc.omega_m / osc.quality;
  const SimConfig config{osc, 0.01, 200.0, 0, 0.0, 1e-9, 0.0};
  const auto traj = simulate(config);

  // Fit log-energy over the first five decay times.
  std::vector<double> t, log_e;
  const double w2 = osc.omega_m * osc.omega_m;
  for (std::size_t i = 0; i < traj.size(); i += 25) {
    const double ti = traj.time(i);
    if (ti > 5.0 / gamma) break;
    const double e =
        0.5 * osc.mass * (traj.v[i] * traj.v[i] + w2 * traj.x[i] * traj.x[i]);
    t.push_back(ti);
    log_e.push_back(std::log(e));
  }
  const auto fit = linear_fit(t, log_e);
  CHECK(rel_diff(-fit.slope, gamma) < 0.02);
}

TEST_CASE("equipartition of the thermal steady state") {
  const auto osc = thermal_osc(5.0);
  const double gamma = osc.omega_m / osc.quality;
  const SimConfig config{osc, 0.015, 2400.0, 2024, 0.0, 0.0, 0.0};
  const auto traj = simulate(config);
  const double expected = constants::boltzmann * 300.0 /
                          (osc.mass * osc.omega_m * osc.omega_m);
  const std::size_t skip = static_cast<std::size_t>(10.0 / gamma / config.dt);
  CHECK(rel_diff(traj.variance_x(skip), expected) < 0.05);
}

TEST_CASE("halving the step leaves the statistics inside the error bar") {
  const auto osc = thermal_osc(5.0);
  const double expected = constants::boltzmann * 300.0 /
                          (osc.mass * osc.omega_m * osc.omega_m);
  const SimConfig coarse{osc, 0.015, 2400.0, 99, 0.0, 0.0, 0.0};
  const SimConfig fine{osc, 0.0075, 2400.0, 99, 0.0, 0.0, 0.0};
  const double va = simulate(coarse).variance_x(60000);
  const double vb = simulate(fine).variance_x(120000);
  CHECK(rel_diff(va, expected) < 0.05);
  CHECK(rel_diff(vb, expected) < 0.05);
}

TEST_CASE("estimator is flat on synthetic white noise") {
  // Injected level: single-sided PSD of sampled white noise is 2 sigma^2 dt.
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double dt = 1e-3;
  std::vector<double> x(1 << 17);
  for (auto& v : x) v = normal(rng);
  const auto est = psd_estimate(x, dt, 64);
  const double level = 2.0 * dt;

  double acc = 0.0;
  int count = 0;
  for (std::size_t k = 1; k + 1 < est.psd.size(); ++k) {
    const double db = 10.0 * std::log10(est.psd[k] / level);
    CHECK(std::abs(db) < 3.0);
    acc += est.psd[k] / level;
    ++count;
  }
  CHECK(std::abs(10.0 * std::log10(acc / count)) < 0.5);
}

TEST_CASE("simulated spectrum matches the analytic thermal PSD") {
  const auto osc = thermal_osc(5.0);
  const double dt = 0.015;
  const SimConfig config{osc, dt, 64.0 * 1024.0 * dt, 7071, 0.0, 0.0, 0.0};
  const auto traj = simulate(config);
  const auto est = psd_estimate(traj, 64);

  // Per-bin within 3 dB near resonance.
  for (std::size_t k = 1; k + 1 < est.f_hz.size(); ++k) {
    if (est.f_hz[k] < 0.6 || est.f_hz[k] > 1.6) continue;
    const double analytic =
        thermal_displacement_psd(osc, constants::two_pi * est.f_hz[k]);
    CHECK(std::abs(10.0 * std::log10(est.psd[k] / analytic)) < 3.0);
  }
  // Band average within 0.5 dB.
  CHECK(std::abs(band_average_db(est, osc, 0.6, 1.6)) < 0.5);
}

TEST_CASE("Parseval: integrated PSD equals the variance") {
  const auto osc = thermal_osc(5.0);
  const double dt = 0.015;
  const SimConfig config{osc, dt, 64.0 * 1024.0 * dt, 31415, 0.0, 0.0, 0.0};
  const auto traj = simulate(config);
  const auto est = psd_estimate(traj, 64);
  const double df = est.f_hz[1] - est.f_hz[0];
  double integral = 0.0;
  for (double p : est.psd) integral += p * df;
  CHECK(rel_diff(integral, traj.variance_x()) < 0.05);
}

TEST_CASE("psd estimation input validation") {
  const auto osc = thermal_osc(10.0);
  const SimConfig config{osc, 0.01, 200.0, 3, 0.0, 0.0, 0.0};
  const auto traj = simulate(config);
  CHECK_THROWS_AS(psd_estimate(traj, 4), std::invalid_argument);
  std::vector<double> tiny(64, 0.0);
  CHECK_THROWS_AS(psd_estimate(tiny, 0.01, 8), std::invalid_argument);
}

TEST_CASE("reheating curve rises at the thermal decoherence rate") {
  const auto osc = thermal_osc(50.0);
  const double gamma = osc.omega_m / osc.quality;
  const SimConfig config{osc, 0.015, 800.0, 1234, 0.0, 0.0, 0.0};
  const auto curve = reheating_experiment(config, 1000);
  const double n_th = osc.thermal_occupancy();
  const double gamma_th = thermal_decoherence_rate(osc);

  // Plateau as the fit seed.
  double plateau = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < curve.t.size(); ++i) {
    if (curve.t[i] < 8.0 / gamma) continue;
    plateau += curve.occupancy[i];
    ++count;
  }
  plateau /= count;
  CHECK(rel_diff(plateau, n_th) < 0.10);

  // Weighted saturation fit: amplitude and rate each within 10%.
  std::vector<double> t(curve.t.begin() + 1, curve.t.end());
  std::vector<double> y(curve.occupancy.begin() + 1, curve.occupancy.end());
  const auto fit = mgom::testing::fit_saturation(t, y, plateau, 2.0 * gamma);
  CHECK(rel_diff(fit.amplitude, n_th) < 0.10);
  CHECK(rel_diff(fit.rate, gamma) < 0.10);
  // Initial slope = amplitude * rate vs Gamma_th.
  const double slope = fit.amplitude * fit.rate;
  CHECK(slope / gamma_th > 0.9);
  CHECK(slope / gamma_th < 1.1);
}

TEST_CASE("zero-temperature reheating stays at zero") {
  MechanicalOscillator cold(1e-6, constants::two_pi, 10.0,
                            DampingModel::viscous, 0.0);
  const SimConfig config{cold, 0.01, 200.0, 9, 0.0, 0.0, 0.0};
  const auto curve = reheating_experiment(config, 8);
  for (double n : curve.occupancy) CHECK(n == 0.0);
}

TEST_CASE("reheating is deterministic under any schedule") {
  const auto osc = thermal_osc(10.0);
  const SimConfig config{osc, 0.01, 200.0, 77, 0.0, 0.0, 0.0};
  const auto a = reheating_experiment(config, 40);
  const auto b = reheating_experiment(config, 40);
  CHECK(a.occupancy == b.occupancy);
}

TEST_CASE("cold damping reduces the effective temperature") {
  const auto osc = thermal_osc(5.0);
  const double gamma = osc.omega_m / osc.quality;
  const double gain = 3.0 * gamma;
  const SimConfig config{osc, 0.015, 4000.0, 2718, gain, 0.0, 0.0};
  const auto traj = simulate(config);
  const double var0 = constants::boltzmann * 300.0 /
                      (osc.mass * osc.omega_m * osc.omega_m);
  // T_eff/T = gamma_m / gamma_eff = 1/4 here.
  const double t_ratio = traj.variance_x(20000) / var0;
  CHECK(rel_diff(t_ratio, 0.25) < 0.05);
  // Equivalently the fitted gamma_eff is gamma_m + gain.
  const double gamma_fit = gamma / t_ratio;
  CHECK(rel_diff(gamma_fit, gamma + gain) < 0.02);
}

}  // TEST_SUITE
