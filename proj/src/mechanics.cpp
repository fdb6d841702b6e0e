#include "mgom/mechanics.hpp"

#include <cmath>
#include <stdexcept>

namespace mgom {

namespace {

void require_positive_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::domain_error("evaluation frequency must be positive");
}

}  // namespace

std::complex<double> susceptibility(const MechanicalOscillator& osc, double omega) {
  require_positive_omega(omega);
  const double gamma = osc.damping_rate(omega);
  const std::complex<double> denom(osc.omega_m * osc.omega_m - omega * omega,
                                   gamma * omega);
  return 1.0 / (osc.mass * denom);
}

double thermal_force_psd(const MechanicalOscillator& osc, double omega) {
  require_positive_omega(omega);
  return 4.0 * constants::boltzmann * osc.temperature * osc.mass *
         osc.damping_rate(omega);
}

double thermal_displacement_psd(const MechanicalOscillator& osc, double omega) {
  return std::norm(susceptibility(osc, omega)) * thermal_force_psd(osc, omega);
}

double thermal_decoherence_rate(const MechanicalOscillator& osc) {
  return osc.thermal_occupancy() * osc.damping_rate(osc.omega_m);
}

double phonon_reheating(const MechanicalOscillator& osc, double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::domain_error("reheating time must be >= 0");
  const double gamma = osc.damping_rate(osc.omega_m);
  return osc.thermal_occupancy() * (-std::expm1(-gamma * t));
}

double zero_point_fluctuation(const MechanicalOscillator& osc) {
  return std::sqrt(constants::hbar / (2.0 * osc.mass * osc.omega_m));
}

}  // namespace mgom
