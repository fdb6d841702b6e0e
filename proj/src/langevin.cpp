#include "mgom/langevin.hpp"

#include <fftw3.h>

#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace mgom {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Box-Muller over the standard-pinned mt19937_64 stream, so trajectories
/// are bit-identical across standard libraries.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = constants::two_pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct Propagator {
  // x' = a x + b v + w1 ; v' = c x + d v + w2, with (w1, w2) drawn from the
  // exact process-noise covariance via its Cholesky factor.
  double a, b, c, d;
  double l11, l21, l22;
};

/// cos(w1 t) and sin(w1 t)/w1 for w1^2 = disc of either sign, with a series
/// fallback around the critically damped point.
void trig_pair(double disc, double t, double& c, double& s) {
  const double u = disc * t * t;
  if (std::abs(u) < 1e-10) {
    s = t * (1.0 - u / 6.0 + u * u / 120.0);
    c = 1.0 - u / 2.0 + u * u / 24.0;
  } else if (disc > 0.0) {
    const double w = std::sqrt(disc);
    c = std::cos(w * t);
    s = std::sin(w * t) / w;
  } else {
    const double w = std::sqrt(-disc);
    c = std::cosh(w * t);
    s = std::sinh(w * t) / w;
  }
}

Propagator make_propagator(const SimConfig& cfg) {
  const double omega0 = cfg.osc.omega_m;
  const double gamma_m = cfg.osc.omega_m / cfg.osc.quality;
  const double gamma = gamma_m + cfg.feedback_gain;
  const double beta = gamma / 2.0;
  const double t = cfg.dt;

  double c, s;
  trig_pair(omega0 * omega0 - beta * beta, t, c, s);
  const double decay = std::exp(-beta * t);

  Propagator p;
  p.a = decay * (c + beta * s);
  p.b = decay * s;
  p.c = -omega0 * omega0 * decay * s;
  p.d = decay * (c - beta * s);

  // Stationary covariance of the driven process; the per-step noise
  // covariance is S = Sigma - Phi Sigma Phi^T.
  const double diff = constants::boltzmann * cfg.osc.temperature * gamma_m /
                      cfg.osc.mass;
  if (diff == 0.0) {
    p.l11 = p.l21 = p.l22 = 0.0;
    return p;
  }
  const double sx = diff / (gamma * omega0 * omega0);
  const double sv = diff / gamma;
  const double s11 = sx - (p.a * p.a * sx + p.b * p.b * sv);
  const double s12 = -(p.a * p.c * sx + p.b * p.d * sv);
  const double s22 = sv - (p.c * p.c * sx + p.d * p.d * sv);

  p.l11 = std::sqrt(std::max(s11, 0.0));
  p.l21 = p.l11 > 0.0 ? s12 / p.l11 : 0.0;
  p.l22 = std::sqrt(std::max(s22 - p.l21 * p.l21, 0.0));
  return p;
}

void check_config(const SimConfig& cfg) {
  if (cfg.osc.model != DampingModel::viscous)
    throw std::invalid_argument(
        "time-domain simulation supports the viscous damping model only");
  if (!(cfg.dt > 0.0) || !(cfg.duration > 0.0))
    throw std::invalid_argument("dt and duration must be positive");
  if (!(cfg.feedback_gain >= 0.0))
    throw std::invalid_argument("feedback gain must be >= 0");
  const double period = constants::two_pi / cfg.osc.omega_m;
  if (!(cfg.dt < period / 50.0))
    throw std::invalid_argument("dt too coarse: need dt < 2 pi / (50 omega_m)");
  const double gamma_eff = cfg.osc.omega_m / cfg.osc.quality + cfg.feedback_gain;
  const double floor = 100.0 * std::max(1.0 / gamma_eff, period);
  if (!(cfg.duration >= floor))
    throw std::invalid_argument(
        "duration too short: need 100 max(1/gamma_eff, 2 pi / omega_m)");
}

Trajectory run(const SimConfig& cfg, std::uint64_t seed, double x0, double v0) {
  const Propagator p = make_propagator(cfg);
  const std::size_t steps =
      static_cast<std::size_t>(std::llround(cfg.duration / cfg.dt));
  GaussianStream noise(seed);
  const bool stochastic = p.l11 != 0.0 || p.l22 != 0.0;

  Trajectory traj;
  traj.dt = cfg.dt;
  traj.x.reserve(steps + 1);
  traj.v.reserve(steps + 1);
  double x = x0, v = v0;
  traj.x.push_back(x);
  traj.v.push_back(v);
  for (std::size_t i = 0; i < steps; ++i) {
    double w1 = 0.0, w2 = 0.0;
    if (stochastic) {
      const double z1 = noise.next();
      const double z2 = noise.next();
      w1 = p.l11 * z1;
      w2 = p.l21 * z1 + p.l22 * z2;
    }
    const double xn = p.a * x + p.b * v + w1;
    const double vn = p.c * x + p.d * v + w2;
    x = xn;
    v = vn;
    traj.x.push_back(x);
    traj.v.push_back(v);
  }
  return traj;
}

}  // namespace

double Trajectory::variance_x(std::size_t skip) const {
  if (skip + 2 > x.size())
    throw std::invalid_argument("not enough samples for a variance");
  double mean = 0.0;
  const std::size_t n = x.size() - skip;
  for (std::size_t i = skip; i < x.size(); ++i) mean += x[i];
  mean /= static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t i = skip; i < x.size(); ++i) {
    const double d = x[i] - mean;
    acc += d * d;
  }
  return acc / static_cast<double>(n);
}

Trajectory simulate(const SimConfig& config) {
  check_config(config);
  return run(config, config.seed, config.x0, config.v0);
}

PsdEstimate psd_estimate(std::span<const double> x, double dt, int segments) {
  if (segments < 8)
    throw std::invalid_argument("need at least 8 averaging segments");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");

  std::size_t nfft = 1;
  while (nfft * 2 * static_cast<std::size_t>(segments) <= x.size()) nfft *= 2;
  if (nfft < 16)
    throw std::invalid_argument("trajectory too short for a PSD estimate");
  const std::size_t n_seg = x.size() / nfft;

  // Periodic Hann window and its mean-square normalization.
  std::vector<double> window(nfft);
  double u = 0.0;
  for (std::size_t n = 0; n < nfft; ++n) {
    window[n] = 0.5 * (1.0 - std::cos(constants::two_pi *
                                      static_cast<double>(n) /
                                      static_cast<double>(nfft)));
    u += window[n] * window[n];
  }
  u /= static_cast<double>(nfft);

  std::vector<double> buf(nfft);
  std::vector<double> power(nfft / 2 + 1, 0.0);
  fftw_complex* spectrum = fftw_alloc_complex(nfft / 2 + 1);
  fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(nfft), buf.data(),
                                        spectrum, FFTW_ESTIMATE);

  for (std::size_t s = 0; s < n_seg; ++s) {
    const double* seg = x.data() + s * nfft;
    double mean = 0.0;
    for (std::size_t n = 0; n < nfft; ++n) mean += seg[n];
    mean /= static_cast<double>(nfft);
    for (std::size_t n = 0; n < nfft; ++n) buf[n] = (seg[n] - mean) * window[n];
    fftw_execute(plan);
    for (std::size_t k = 0; k <= nfft / 2; ++k)
      power[k] += spectrum[k][0] * spectrum[k][0] + spectrum[k][1] * spectrum[k][1];
  }
  fftw_destroy_plan(plan);
  fftw_free(spectrum);

  const double scale =
      2.0 * dt / (static_cast<double>(nfft) * u * static_cast<double>(n_seg));
  PsdEstimate out;
  out.f_hz.resize(nfft / 2 + 1);
  out.psd.resize(nfft / 2 + 1);
  for (std::size_t k = 0; k <= nfft / 2; ++k) {
    out.f_hz[k] = static_cast<double>(k) / (static_cast<double>(nfft) * dt);
    double p = power[k] * scale;
    if (k == 0 || k == nfft / 2) p *= 0.5;  // one-sided ends
    out.psd[k] = p;
  }
  return out;
}

PsdEstimate psd_estimate(const Trajectory& traj, int segments) {
  return psd_estimate(std::span<const double>(traj.x), traj.dt, segments);
}

ReheatingCurve reheating_experiment(const SimConfig& config, int n_trials) {
  check_config(config);
  if (n_trials < 1) throw std::invalid_argument("need at least one trial");

  const std::size_t steps =
      static_cast<std::size_t>(std::llround(config.duration / config.dt)) + 1;
  const double e_scale =
      0.5 * config.osc.mass /
      (constants::hbar * config.osc.omega_m * static_cast<double>(n_trials));
  const double w2 = config.osc.omega_m * config.osc.omega_m;

  // Fixed-size chunks keep the reduction order independent of thread count.
  constexpr int chunk_size = 16;
  const int n_chunks = (n_trials + chunk_size - 1) / chunk_size;
  std::vector<std::vector<double>> partial(
      static_cast<std::size_t>(n_chunks), std::vector<double>(steps, 0.0));

  std::atomic<int> next_chunk{0};
  auto worker = [&] {
    for (;;) {
      const int chunk = next_chunk.fetch_add(1);
      if (chunk >= n_chunks) return;
      auto& acc = partial[static_cast<std::size_t>(chunk)];
      const int t_begin = chunk * chunk_size;
      const int t_end = std::min(n_trials, t_begin + chunk_size);
      for (int trial = t_begin; trial < t_end; ++trial) {
        const std::uint64_t seed =
            splitmix64(config.seed + static_cast<std::uint64_t>(trial));
        const Trajectory traj = run(config, seed, 0.0, 0.0);
        for (std::size_t i = 0; i < steps; ++i)
          acc[i] += traj.v[i] * traj.v[i] + w2 * traj.x[i] * traj.x[i];
      }
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads =
      std::min<unsigned>(hw, static_cast<unsigned>(n_chunks));
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  ReheatingCurve curve;
  curve.t.resize(steps);
  curve.occupancy.assign(steps, 0.0);
  for (std::size_t i = 0; i < steps; ++i)
    curve.t[i] = static_cast<double>(i) * config.dt;
  for (const auto& acc : partial)
    for (std::size_t i = 0; i < steps; ++i) curve.occupancy[i] += acc[i];
  for (std::size_t i = 0; i < steps; ++i) curve.occupancy[i] *= e_scale;
  return curve;
}

}  // namespace mgom
