#ifndef MGOM_TORSION_HPP
#define MGOM_TORSION_HPP

#include <complex>

#include "mgom/quantum_noise.hpp"
#include "mgom/suspension.hpp"
#include "mgom/types.hpp"

namespace mgom {

/// Bar mirror suspended as a torsion pendulum. The mass-distribution factor
/// a sets the moment of inertia I = a m d^2: 1/12 for a uniform bar, 1/4 for
/// mass concentrated at the ends.
struct TorsionBar {
  double mass;        // kg
  double bar_length;  // m, d
  double mass_factor; // a in (0, 1/4]

  TorsionBar(double mass, double bar_length, double mass_factor = 1.0 / 12.0);

  double inertia() const { return mass_factor * mass * bar_length * bar_length; }
};

/// chi_I(omega) = 1 / (I [omega_m^2 - omega^2 + i gamma omega]), rad/(N m).
std::complex<double> torsion_susceptibility(const TorsionBar& bar,
                                            double omega_m, double quality,
                                            DampingModel model, double omega);

/// Quantum-noise input for the angular readout: same structure as the linear
/// case under (F, x, m) -> (tau, theta, I), with G_tor = (d/2) G.
QuantumNoiseInput torsion_quantum_noise_input(const TorsionBar& bar,
                                              double omega_m, double quality,
                                              DampingModel model,
                                              const CouplingParams& coupling,
                                              const CavityResponse& resp,
                                              double eta);

/// C_qu^tor = (1 / 4a) S_rad^F / (4 k_B T m gamma_tor).
double torsion_cooperativity(double mass_factor, double s_rad_force,
                             double temperature, double mass, double gamma_tor);

/// Complex torsional stiffness pi E r^4 / (4 (1 + nu) l) (1 + i phi_el);
/// no gravitational dissipation dilution applies to this mode.
std::complex<double> torsion_spring(const Suspension& susp);

/// Natural torsional resonance sqrt(Re K / I), rad/s.
double torsion_resonance(const std::complex<double>& stiffness,
                         const TorsionBar& bar);

struct TorsionDampingRatio {
  double geometric;     // l r^2 / (a (1+nu) d^2) sqrt(pi E / (m g))
  double tensile_form;  // l s / (a (1+nu) H d^2) sqrt(m g E / pi)
};

/// gamma_tor / gamma_pend under a common structural loss angle; the two
/// forms coincide exactly on the tensile boundary pi r^2 H = s T.
TorsionDampingRatio damping_ratio(double mass, double bar_length,
                                  double mass_factor, const Suspension& susp);

/// Required common-mode rejection (amplitude) to keep pendulum-mode thermal
/// noise out of a differential torsion readout: sqrt(gamma_tor/gamma_pend).
double common_mode_rejection_requirement(double damping_ratio);

struct OpticalLever {
  double power;        // W
  double beam_radius;  // m, at the mirror

  OpticalLever(double power, double beam_radius);
};

/// K factor of an optical-lever angular readout at pi/2 Gouy phase,
/// 2 omega_L P w^2 |chi_I| / c^2.
double optical_lever_kappa(const OpticalLever& lever, double wavelength,
                           const TorsionBar& bar, double omega_m,
                           double quality, DampingModel model, double omega);

}  // namespace mgom

#endif
