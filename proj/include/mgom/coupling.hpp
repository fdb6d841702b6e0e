#ifndef MGOM_COUPLING_HPP
#define MGOM_COUPLING_HPP

#include <span>

#include "mgom/cavity.hpp"
#include "mgom/types.hpp"

namespace mgom {

/// Optomechanical coupling of one oscillator to one pumped cavity.
struct CouplingParams {
  double frequency_pull;  // G = omega_L / L, rad/s per m
  double strength;        // g, rad/s
  double n_circ;          // mean intracavity photon number

  double g_squared() const { return strength * strength; }
};

/// Computes g both from the circulating-power form and from
/// G * x_zpf * sqrt(n_circ); the two routes must agree to 1e-9 relative
/// (a disagreement signals an implementation bug, not bad input).
CouplingParams coupling_params(const MechanicalOscillator& osc, double length,
                               double wavelength, double p_circ);

/// Resonance shift and damping contributed by one beam.
struct OpticalSpring {
  double delta_omega;  // rad/s
  double gamma;        // rad/s
};

/// Exact two-sideband spring/damping, valid in any regime.
OpticalSpring optical_spring_full(double g_squared, double kappa,
                                  double omega_m, double detuning);

/// Bad-cavity (kappa >> omega_m) approximation.
OpticalSpring optical_spring_doppler(double g_squared, double kappa,
                                     double omega_m, double detuning);

struct EffectiveDynamics {
  double omega_eff;  // rad/s
  double gamma_eff;  // rad/s
  bool stable;       // omega_eff > 0 and gamma_eff > 0
};

/// Springs from multiple beams add linearly on top of the bare oscillator.
EffectiveDynamics effective_dynamics(const MechanicalOscillator& osc,
                                     std::span<const OpticalSpring> springs);

/// Cooling floor kappa / (2 omega_m) of cavity cooling alone in the
/// unresolved-sideband regime.
double minimum_phonon_doppler(double kappa, double omega_m);

enum class MovableMirror { mirror1, mirror2 };

/// Radiation-pressure torsional stiffness on the movable mirror,
/// -(2 Pcirc L / c) * g_movable / (1 - g1 g2). Negative = anti-restoring.
double sidles_sigg_stiffness(const OpticalCavity& cav, double p_circ,
                             MovableMirror which = MovableMirror::mirror2);

}  // namespace mgom

#endif
