#include "mgom/torsion.hpp"

#include <cmath>
#include <numbers>

#include "mgom/mechanics.hpp"

namespace mgom {

namespace {

constexpr double pi = std::numbers::pi;

MechanicalOscillator inertial_mode(const TorsionBar& bar, double omega_m,
                                   double quality, DampingModel model,
                                   double temperature = 0.0) {
  // The angular mode obeys the linear-mode algebra with mass replaced by I.
  return MechanicalOscillator(bar.inertia(), omega_m, quality, model, temperature);
}

}  // namespace

TorsionBar::TorsionBar(double mass, double bar_length, double mass_factor)
    : mass(mass), bar_length(bar_length), mass_factor(mass_factor) {
  if (!(mass > 0.0) || !(bar_length > 0.0))
    throw std::invalid_argument("bar mass and length must be positive");
  if (!(mass_factor > 0.0) || !(mass_factor <= 0.25))
    throw std::invalid_argument("mass-distribution factor must be in (0, 1/4]");
}

std::complex<double> torsion_susceptibility(const TorsionBar& bar,
                                            double omega_m, double quality,
                                            DampingModel model, double omega) {
  return susceptibility(inertial_mode(bar, omega_m, quality, model), omega);
}

QuantumNoiseInput torsion_quantum_noise_input(const TorsionBar& bar,
                                              double omega_m, double quality,
                                              DampingModel model,
                                              const CouplingParams& coupling,
                                              const CavityResponse& resp,
                                              double eta) {
  return QuantumNoiseInput{inertial_mode(bar, omega_m, quality, model),
                           bar.bar_length / 2.0 * coupling.frequency_pull,
                           coupling.n_circ, resp.kappa, eta};
}

double torsion_cooperativity(double mass_factor, double s_rad_force,
                             double temperature, double mass, double gamma_tor) {
  if (!(gamma_tor > 0.0))
    throw std::domain_error("torsion damping rate must be positive");
  return 1.0 / (4.0 * mass_factor) * s_rad_force /
         (4.0 * constants::boltzmann * temperature * mass * gamma_tor);
}

std::complex<double> torsion_spring(const Suspension& susp) {
  if (susp.n_w != 1)
    throw std::invalid_argument("torsion spring is defined for a single wire");
  const auto& m = susp.material;
  const double r4 = susp.r_w * susp.r_w * susp.r_w * susp.r_w;
  const double k = pi * m.youngs_modulus * r4 /
                   (4.0 * (1.0 + m.poisson_ratio) * susp.l_w);
  const double phi_el = 1.0 / m.q_el(susp.r_w);
  return {k, k * phi_el};
}

double torsion_resonance(const std::complex<double>& stiffness,
                         const TorsionBar& bar) {
  return std::sqrt(stiffness.real() / bar.inertia());
}

TorsionDampingRatio damping_ratio(double mass, double bar_length,
                                  double mass_factor, const Suspension& susp) {
  const auto& m = susp.material;
  const double mg = mass * constants::standard_gravity;
  const double denom = mass_factor * (1.0 + m.poisson_ratio) * bar_length * bar_length;
  TorsionDampingRatio out;
  out.geometric = susp.l_w * susp.r_w * susp.r_w / denom *
                  std::sqrt(pi * m.youngs_modulus / mg);
  out.tensile_form = susp.l_w * susp.safety_factor /
                     (denom * m.tensile_strength) *
                     std::sqrt(mg * m.youngs_modulus / pi);
  return out;
}

double common_mode_rejection_requirement(double damping_ratio) {
  if (!(damping_ratio > 0.0))
    throw std::domain_error("damping ratio must be positive");
  return std::sqrt(damping_ratio);
}

OpticalLever::OpticalLever(double power, double beam_radius)
    : power(power), beam_radius(beam_radius) {
  if (!(power >= 0.0)) throw std::invalid_argument("lever power must be >= 0");
  if (!(beam_radius > 0.0))
    throw std::invalid_argument("beam radius must be positive");
}

double optical_lever_kappa(const OpticalLever& lever, double wavelength,
                           const TorsionBar& bar, double omega_m,
                           double quality, DampingModel model, double omega) {
  const double omega_l = constants::two_pi * constants::speed_of_light / wavelength;
  const double chi = std::abs(torsion_susceptibility(bar, omega_m, quality, model, omega));
  const double c = constants::speed_of_light;
  return 2.0 * omega_l * lever.power * lever.beam_radius * lever.beam_radius *
         chi / (c * c);
}

}  // namespace mgom
