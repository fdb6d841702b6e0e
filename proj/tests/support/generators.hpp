// Seeded generators for randomized property checks.
#ifndef MGOM_TESTS_GENERATORS_HPP
#define MGOM_TESTS_GENERATORS_HPP

#include <cmath>
#include <random>

#include "mgom/cavity.hpp"
#include "mgom/coupling.hpp"
#include "mgom/quantum_noise.hpp"
#include "mgom/types.hpp"

namespace mgom::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  bool coin() { return engine_() & 1u; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// A random system deep in the Doppler regime, where the quantum-noise
/// closed forms and the cooperativity identities hold tightly.
struct RandomSystem {
  MechanicalOscillator osc;
  CavityResponse resp;
  double length;
  double wavelength;
  double p_circ;
  CouplingParams coupling;
};

inline RandomSystem make_doppler_system(Rng& rng,
                                        double min_kappa_ratio = 1e4,
                                        double max_kappa_ratio = 1e7) {
  const double mass = rng.log_uniform(1e-8, 1e-3);
  const double length = rng.log_uniform(0.01, 1.0);
  const double finesse = rng.log_uniform(10.0, 1e4);
  const CavityResponse resp = response_from_finesse(length, finesse);
  const double ratio = rng.log_uniform(min_kappa_ratio, max_kappa_ratio);
  const double omega_m = resp.kappa / ratio;
  const double quality = rng.log_uniform(1e2, 1e9);
  const double temperature = rng.uniform(1.0, 400.0);
  const auto model = rng.coin() ? DampingModel::viscous : DampingModel::structure;
  MechanicalOscillator osc(mass, omega_m, quality, model, temperature);

  const double wavelength = rng.log_uniform(5e-7, 2e-6);
  const double p_circ = rng.log_uniform(1e-6, 1e3);
  RandomSystem sys{osc, resp, length, wavelength, p_circ,
                   coupling_params(osc, length, wavelength, p_circ)};
  return sys;
}

inline QuantumNoiseInput quantum_input_of(const RandomSystem& sys,
                                          double eta = 1.0) {
  return quantum_noise_input(sys.osc, sys.coupling, sys.resp, eta);
}

}  // namespace mgom::testing

#endif
