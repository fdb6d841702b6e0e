#ifndef MGOM_LANGEVIN_HPP
#define MGOM_LANGEVIN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mgom/types.hpp"

namespace mgom {

/// Time-domain thermal-noise oracle: a viscously damped oscillator driven by
/// white Gaussian force noise of single-sided PSD 4 k_B T m gamma_m, with an
/// optional ideal cold-damping force -gain * m * v. The integrator is the
/// exact discrete-time update of the linear SDE, so statistics carry no
/// step-size bias.
struct SimConfig {
  MechanicalOscillator osc;  // viscous damping only
  double dt;                 // s
  double duration;           // s
  std::uint64_t seed = 0;
  double feedback_gain = 0.0;  // 1/s, adds to the damping rate, no added noise
  double x0 = 0.0;             // m
  double v0 = 0.0;             // m/s
};

struct Trajectory {
  double dt;
  std::vector<double> x;
  std::vector<double> v;

  std::size_t size() const { return x.size(); }
  double time(std::size_t i) const { return static_cast<double>(i) * dt; }

  /// Sample variance of x after dropping the first `skip` points.
  double variance_x(std::size_t skip = 0) const;
};

/// Reproducible for a fixed config (identical bits, any thread count).
/// Throws std::invalid_argument when the config violates the resolution
/// guard dt < 2 pi / (50 omega_m), the duration floor
/// 100 max(1/gamma_eff, 2 pi / omega_m), or uses structure damping.
Trajectory simulate(const SimConfig& config);

struct PsdEstimate {
  std::vector<double> f_hz;
  std::vector<double> psd;  // single-sided, (input unit)^2/Hz
};

/// Averaged periodogram (Welch): mean-subtracted, Hann-windowed,
/// non-overlapping power-of-two segments. With n segments the per-bin
/// relative standard deviation is about 1/sqrt(n); the Hann window trades
/// a factor ~1.5 in resolution for controlled leakage.
PsdEstimate psd_estimate(std::span<const double> x, double dt, int segments);

PsdEstimate psd_estimate(const Trajectory& traj, int segments);

struct ReheatingCurve {
  std::vector<double> t;
  std::vector<double> occupancy;  // ensemble mean energy / (hbar omega_m)
};

/// Ensemble of trials from (x, v) = (0, 0); per-trial seeds derive from
/// (config.seed, trial index), so the result is deterministic regardless of
/// scheduling.
ReheatingCurve reheating_experiment(const SimConfig& config, int n_trials);

}  // namespace mgom

#endif
