#ifndef MGOM_CAVITY_HPP
#define MGOM_CAVITY_HPP

#include "mgom/types.hpp"

namespace mgom {

enum class CouplingRegime { over, critical, under };

/// Static response of a Fabry-Perot cavity.
struct CavityResponse {
  double omega_fsr;  // rad/s
  double finesse;
  double kappa;      // rad/s, amplitude decay rate (cavity pole)
  double kappa_in;   // rad/s, input-coupling part of kappa
  CouplingRegime regime;
};

/// omega_fsr = pi c / L, kappa_in = T_in c / (4L), kappa adds the extra
/// round-trip loss symmetrically, finesse = omega_fsr / (2 kappa).
CavityResponse cavity_response(const OpticalCavity& cav);

/// Shorthand for a lossless, perfectly over-coupled cavity specified by its
/// finesse alone (kappa_in = kappa).
CavityResponse response_from_finesse(double length, double finesse);

/// Lorentzian circulating power, Pcirc = (2F/pi)(kappa_in/kappa) Pin / (1 + (delta/kappa)^2).
double circulating_power(const CavityResponse& resp, const LaserDrive& drive);

/// n_circ = (2L/c) Pcirc / (hbar omega_L).
double intracavity_photon_number(double length, double wavelength, double p_circ);

}  // namespace mgom

#endif
