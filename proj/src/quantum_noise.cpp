#include "mgom/quantum_noise.hpp"

#include <cmath>

#include "mgom/mechanics.hpp"
#include "mgom/textio.hpp"

namespace mgom {

namespace {

double chi_m_abs(const QuantumNoiseInput& in, double omega) {
  return std::abs(susceptibility(in.mode, omega));
}

double cavity_rolloff(double omega, double kappa) {
  const double r = omega / kappa;
  return 1.0 + r * r;
}

}  // namespace

QuantumNoiseInput quantum_noise_input(const MechanicalOscillator& osc,
                                      const CouplingParams& coupling,
                                      const CavityResponse& resp, double eta,
                                      MassConvention convention) {
  const double reduced_mass =
      convention == MassConvention::michelson ? osc.mass / 2.0 : osc.mass;
  MechanicalOscillator mode(reduced_mass, osc.omega_m, osc.quality, osc.model,
                            osc.temperature);
  return QuantumNoiseInput{mode, coupling.frequency_pull, coupling.n_circ,
                           resp.kappa, eta};
}

double kappa_factor(const QuantumNoiseInput& in, double omega) {
  const double g2n = in.frequency_pull * in.frequency_pull * in.n_circ;
  return 4.0 * constants::hbar * g2n * chi_m_abs(in, omega) / in.kappa /
         cavity_rolloff(omega, in.kappa);
}

double sql_displacement_psd(const QuantumNoiseInput& in, double omega) {
  return 2.0 * constants::hbar * chi_m_abs(in, omega);
}

double shot_noise_psd(const QuantumNoiseInput& in, double omega) {
  if (!(in.n_circ > 0.0))
    throw NoLightError("shot noise undefined without circulating light");
  const double g2n = in.frequency_pull * in.frequency_pull * in.n_circ;
  return in.kappa / (4.0 * g2n) * cavity_rolloff(omega, in.kappa) / in.eta;
}

double radiation_pressure_psd(const QuantumNoiseInput& in, double omega) {
  const double chi = chi_m_abs(in, omega);
  const double g2n = in.frequency_pull * in.frequency_pull * in.n_circ;
  return chi * chi * 4.0 * constants::hbar * constants::hbar * g2n / in.kappa /
         cavity_rolloff(omega, in.kappa);
}

double quantum_noise_displacement_psd(const QuantumNoiseInput& in, double omega) {
  return shot_noise_psd(in, omega) + radiation_pressure_psd(in, omega);
}

double displacement_to_force_psd(const QuantumNoiseInput& in, double omega,
                                 double s_x) {
  const double chi = chi_m_abs(in, omega);
  return s_x / (chi * chi);
}

SqlFrequency sql_touching_frequency(const QuantumNoiseInput& in) {
  const double g2n = in.frequency_pull * in.frequency_pull * in.n_circ;
  SqlFrequency out;
  out.omega = std::sqrt(4.0 * constants::hbar * g2n / (in.mode.mass * in.kappa));
  out.free_mass_ok = in.mode.omega_m * 10.0 <= out.omega;
  out.cavity_pole_ok = out.omega * 10.0 <= in.kappa;
  return out;
}

NoiseBudget build_budget(const MechanicalOscillator& osc,
                         const QuantumNoiseInput& in, const FrequencyGrid& grid,
                         MechanismSet mechanisms, double detuning) {
  if (mechanisms.none())
    throw std::invalid_argument("noise budget needs at least one mechanism");

  NoiseBudget budget;
  budget.grid = grid;
  const std::size_t n = grid.size();

  std::vector<double> shot_x, rad_x, th_x, total_x;
  std::vector<double> shot_f, rad_f, th_f, total_f;
  shot_x.reserve(n); rad_x.reserve(n); th_x.reserve(n); total_x.reserve(n);
  shot_f.reserve(n); rad_f.reserve(n); th_f.reserve(n); total_f.reserve(n);

  for (double w : grid.omega) {
    const double chi2_m = std::norm(susceptibility(in.mode, w));
    double sx = 0.0, rx = 0.0, tf = 0.0;
    if (mechanisms.shot) sx = shot_noise_psd(in, w);
    if (mechanisms.radiation_pressure) rx = radiation_pressure_psd(in, w);
    if (mechanisms.thermal) tf = thermal_force_psd(osc, w);
    const double tx = tf * std::norm(susceptibility(osc, w));
    const double sf = sx / chi2_m;
    const double rf = rx / chi2_m;
    shot_x.push_back(sx); rad_x.push_back(rx); th_x.push_back(tx);
    total_x.push_back(sx + rx + tx);
    shot_f.push_back(sf); rad_f.push_back(rf); th_f.push_back(tf);
    total_f.push_back(sf + rf + tf);
  }

  budget.displacement["shot"] = std::move(shot_x);
  budget.displacement["radiation_pressure"] = std::move(rad_x);
  budget.displacement["thermal"] = std::move(th_x);
  budget.displacement["total"] = std::move(total_x);
  budget.force["shot"] = std::move(shot_f);
  budget.force["radiation_pressure"] = std::move(rad_f);
  budget.force["thermal"] = std::move(th_f);
  budget.force["total"] = std::move(total_f);

  budget.metadata["mass_convention"] = "single_cavity";
  budget.metadata["reduced_mass_kg"] = format_sci(in.mode.mass);
  budget.metadata["kappa_rad_s"] = format_sci(in.kappa);
  budget.metadata["n_circ"] = format_sci(in.n_circ);
  budget.metadata["eta"] = format_sci(in.eta);
  budget.metadata["damping_model"] =
      osc.model == DampingModel::viscous ? "viscous" : "structure";
  if (detuning != 0.0) {
    // Quantum columns are computed for zero detuning; flag the approximation.
    budget.metadata["detuned_quantum_approximation"] = "true";
    budget.metadata["detuning_rad_s"] = format_sci(detuning);
  }
  return budget;
}

}  // namespace mgom
