#include "mgom/coupling.hpp"

#include <cmath>
#include <stdexcept>

#include "mgom/mechanics.hpp"

namespace mgom {

CouplingParams coupling_params(const MechanicalOscillator& osc, double length,
                               double wavelength, double p_circ) {
  if (!(p_circ >= 0.0))
    throw std::invalid_argument("circulating power must be >= 0");
  const double c = constants::speed_of_light;
  const double omega_l = constants::two_pi * c / wavelength;

  CouplingParams out;
  out.frequency_pull = omega_l / length;
  out.n_circ = intracavity_photon_number(length, wavelength, p_circ);

  const double g2_power = p_circ * omega_l / (osc.mass * length * c * osc.omega_m);
  const double g_zpf = out.frequency_pull * zero_point_fluctuation(osc) *
                       std::sqrt(out.n_circ);
  if (p_circ > 0.0) {
    const double rel = std::abs(g_zpf * g_zpf - g2_power) / g2_power;
    if (rel > 1e-9)
      throw std::logic_error("coupling strength routes disagree beyond 1e-9");
  }
  out.strength = std::sqrt(g2_power);
  return out;
}

OpticalSpring optical_spring_full(double g_squared, double kappa,
                                  double omega_m, double detuning) {
  const double k2 = kappa * kappa;
  const double plus = detuning + omega_m;
  const double minus = detuning - omega_m;
  const double dplus = k2 + plus * plus;
  const double dminus = k2 + minus * minus;
  OpticalSpring s;
  s.delta_omega = g_squared * (plus / dplus + minus / dminus);
  s.gamma = g_squared * (2.0 * kappa / dplus - 2.0 * kappa / dminus);
  return s;
}

OpticalSpring optical_spring_doppler(double g_squared, double kappa,
                                     double omega_m, double detuning) {
  const double d2 = kappa * kappa + detuning * detuning;
  OpticalSpring s;
  s.delta_omega = g_squared * 2.0 * detuning / d2;
  s.gamma = -g_squared * 8.0 * kappa * detuning * omega_m / (d2 * d2);
  return s;
}

EffectiveDynamics effective_dynamics(const MechanicalOscillator& osc,
                                     std::span<const OpticalSpring> springs) {
  EffectiveDynamics dyn;
  dyn.omega_eff = osc.omega_m;
  dyn.gamma_eff = osc.damping_rate(osc.omega_m);
  for (const auto& s : springs) {
    dyn.omega_eff += s.delta_omega;
    dyn.gamma_eff += s.gamma;
  }
  dyn.stable = dyn.omega_eff > 0.0 && dyn.gamma_eff > 0.0;
  return dyn;
}

double minimum_phonon_doppler(double kappa, double omega_m) {
  if (!(kappa > 0.0) || !(omega_m > 0.0))
    throw std::invalid_argument("kappa and omega_m must be positive");
  return kappa / (2.0 * omega_m);
}

double sidles_sigg_stiffness(const OpticalCavity& cav, double p_circ,
                             MovableMirror which) {
  const double g1 = cav.g1();
  const double g2 = cav.g2();
  const double gg = g1 * g2;
  if (gg >= 1.0)
    throw std::domain_error("Sidles-Sigg stiffness undefined: g1*g2 >= 1");
  const double g_movable = which == MovableMirror::mirror2 ? g2 : g1;
  return -(2.0 * p_circ * cav.length / constants::speed_of_light) * g_movable /
         (1.0 - gg);
}

}  // namespace mgom
