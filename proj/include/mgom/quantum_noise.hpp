#ifndef MGOM_QUANTUM_NOISE_HPP
#define MGOM_QUANTUM_NOISE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgom/cavity.hpp"
#include "mgom/coupling.hpp"
#include "mgom/types.hpp"

namespace mgom {

/// Thrown when a shot-noise level is requested with no circulating light.
struct NoLightError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Which mass enters the quantum-noise susceptibility chi_M.
enum class MassConvention {
  single_cavity,  // movable mirror against a much heavier input mirror: M = m
  michelson,      // two identical cavities read differentially: M = m / 2
};

/// Everything quantum-noise evaluation needs, with the reduced mass already
/// folded into `mode`. Valid for zero cavity detuning.
struct QuantumNoiseInput {
  MechanicalOscillator mode;  // mass field holds the reduced mass M
  double frequency_pull;      // G, rad/s per m
  double n_circ;
  double kappa;               // rad/s
  double eta;                 // photon collection efficiency
};

QuantumNoiseInput quantum_noise_input(const MechanicalOscillator& osc,
                                      const CouplingParams& coupling,
                                      const CavityResponse& resp, double eta,
                                      MassConvention convention = MassConvention::single_cavity);

/// K = (4 hbar G^2 n_circ |chi_M| / kappa) / (1 + (omega/kappa)^2).
double kappa_factor(const QuantumNoiseInput& in, double omega);

/// x_SQL^2 = 2 hbar |chi_M(omega)|, in m^2/Hz.
double sql_displacement_psd(const QuantumNoiseInput& in, double omega);

/// Shot noise (kappa / 4 G^2 n_circ)(1 + (omega/kappa)^2) / eta, in m^2/Hz.
double shot_noise_psd(const QuantumNoiseInput& in, double omega);

/// Back-action noise |chi_M|^2 4 hbar^2 G^2 n_circ / kappa / (1 + (omega/kappa)^2).
double radiation_pressure_psd(const QuantumNoiseInput& in, double omega);

/// Total quantum noise (x_SQL^2 / 2)(1/(eta K) + K) = shot/eta + back-action.
double quantum_noise_displacement_psd(const QuantumNoiseInput& in, double omega);

/// Displacement -> force conversion through |chi_M|^2.
double displacement_to_force_psd(const QuantumNoiseInput& in, double omega,
                                 double s_x);

struct SqlFrequency {
  double omega;        // rad/s
  bool free_mass_ok;   // omega_m well below omega
  bool cavity_pole_ok; // omega well below kappa
};

/// Closed-form SQL-touching frequency sqrt(4 hbar G^2 n_circ / (M kappa)),
/// derived for the free-mass Doppler window omega_m << omega << kappa.
SqlFrequency sql_touching_frequency(const QuantumNoiseInput& in);

struct MechanismSet {
  bool shot = true;
  bool radiation_pressure = true;
  bool thermal = true;
  bool none() const { return !shot && !radiation_pressure && !thermal; }
};

/// Per-mechanism single-sided PSD columns over a frequency grid, in both
/// displacement (m^2/Hz) and force (N^2/Hz) views, plus a "total" column
/// with the power sum of the selected mechanisms.
struct NoiseBudget {
  FrequencyGrid grid;
  std::map<std::string, std::vector<double>> displacement;
  std::map<std::string, std::vector<double>> force;
  std::map<std::string, std::string> metadata;
};

/// Thermal column follows `osc`'s damping model; quantum columns use the
/// detuning-free formulas (a nonzero `detuning` is only recorded as an
/// approximation flag in the metadata).
NoiseBudget build_budget(const MechanicalOscillator& osc,
                         const QuantumNoiseInput& in, const FrequencyGrid& grid,
                         MechanismSet mechanisms, double detuning = 0.0);

}  // namespace mgom

#endif
