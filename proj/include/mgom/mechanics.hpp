#ifndef MGOM_MECHANICS_HPP
#define MGOM_MECHANICS_HPP

#include <complex>

#include "mgom/types.hpp"

namespace mgom {

/// chi_m(omega) = 1 / (m [omega_m^2 - omega^2 + i gamma_m(omega) omega]),
/// in m/N. Im(chi) <= 0 for omega > 0 (dissipative sign convention).
std::complex<double> susceptibility(const MechanicalOscillator& osc, double omega);

/// Single-sided thermal force PSD 4 k_B T m gamma_m(omega), in N^2/Hz.
double thermal_force_psd(const MechanicalOscillator& osc, double omega);

/// |chi_m|^2 * S_th^F, in m^2/Hz.
double thermal_displacement_psd(const MechanicalOscillator& osc, double omega);

/// Initial phonon reheating rate n_th * gamma_m(omega_m), in 1/s.
double thermal_decoherence_rate(const MechanicalOscillator& osc);

/// Phonon occupancy n_th (1 - exp(-gamma_m t)) after ground-state preparation.
double phonon_reheating(const MechanicalOscillator& osc, double t);

/// x_zpf = sqrt(hbar / (2 m omega_m)), in m.
double zero_point_fluctuation(const MechanicalOscillator& osc);

}  // namespace mgom

#endif
