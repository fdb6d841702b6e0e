#ifndef MGOM_CONSTANTS_HPP
#define MGOM_CONSTANTS_HPP

#include <numbers>

namespace mgom::constants {

// CODATA 2018 / SI exact values.
inline constexpr double planck = 6.62607015e-34;            // J s
inline constexpr double hbar = planck / (2.0 * std::numbers::pi);
inline constexpr double boltzmann = 1.380649e-23;           // J/K
inline constexpr double speed_of_light = 299792458.0;       // m/s
inline constexpr double standard_gravity = 9.80665;         // m/s^2
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg

inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace mgom::constants

#endif
