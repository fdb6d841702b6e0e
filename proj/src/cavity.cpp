#include "mgom/cavity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mgom {

namespace {

CouplingRegime classify(double kappa_in, double kappa) {
  const double ratio = kappa_in / kappa;
  const double tol = 1e-12;
  if (ratio > 0.5 + tol) return CouplingRegime::over;
  if (ratio < 0.5 - tol) return CouplingRegime::under;
  return CouplingRegime::critical;
}

}  // namespace

CavityResponse cavity_response(const OpticalCavity& cav) {
  const double c = constants::speed_of_light;
  CavityResponse r;
  r.omega_fsr = std::numbers::pi * c / cav.length;
  r.kappa_in = cav.input_transmission * c / (4.0 * cav.length);
  r.kappa = r.kappa_in + cav.extra_loss * c / (4.0 * cav.length);
  r.finesse = r.omega_fsr / (2.0 * r.kappa);
  r.regime = classify(r.kappa_in, r.kappa);
  return r;
}

CavityResponse response_from_finesse(double length, double finesse) {
  if (!(length > 0.0) || !(finesse > 0.0))
    throw std::invalid_argument("length and finesse must be positive");
  CavityResponse r;
  r.omega_fsr = std::numbers::pi * constants::speed_of_light / length;
  r.kappa = r.omega_fsr / (2.0 * finesse);
  r.kappa_in = r.kappa;
  r.finesse = finesse;
  r.regime = CouplingRegime::over;
  return r;
}

double circulating_power(const CavityResponse& resp, const LaserDrive& drive) {
  const double lorentz = 1.0 + (drive.detuning / resp.kappa) * (drive.detuning / resp.kappa);
  return (2.0 * resp.finesse / std::numbers::pi) * (resp.kappa_in / resp.kappa) *
         drive.input_power / lorentz;
}

double intracavity_photon_number(double length, double wavelength, double p_circ) {
  if (!(p_circ >= 0.0))
    throw std::invalid_argument("circulating power must be >= 0");
  const double omega_l = constants::two_pi * constants::speed_of_light / wavelength;
  return (2.0 * length / constants::speed_of_light) * p_circ /
         (constants::hbar * omega_l);
}

}  // namespace mgom
