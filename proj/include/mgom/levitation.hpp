#ifndef MGOM_LEVITATION_HPP
#define MGOM_LEVITATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "mgom/types.hpp"

namespace mgom {

/// Circulating power needed to float a mirror, m g c / 2 (sum of the power
/// impinging on the mirror projected onto the vertical).
double levitation_power(double mass);

/// SQL-touching frequency sqrt(16 F g / lambda) when the levitating beam
/// also reads out the vertical motion; independent of the mass.
double levitation_sql_frequency(double finesse, double wavelength);

/// Finesse scale (pi^2 c^2 lambda / (64 L^2 g))^(1/3) that the cavity must
/// stay well below to keep omega_SQL under the cavity pole. Callers apply
/// their own margin; ratios below ~0.1 are comfortable.
double finesse_bound(double length, double wavelength);

enum class MirrorConvexity { convex_down, convex_up, flat };

/// One cavity of the sandwich arrangement with its own drive state.
struct LevitationCavity {
  OpticalCavity cavity;
  double p_circ;    // W
  double detuning;  // rad/s
};

struct SandwichReport {
  bool vertical_trapped;
  bool rotational_trapped;
  bool horizontal_trapped;
  std::vector<std::string> notes;
  bool all_trapped() const {
    return vertical_trapped && rotational_trapped && horizontal_trapped;
  }
};

/// Sign checks for levitating a mirror between a lower and an (optional)
/// upper cavity: an optical spring must trap the vertical motion, gravity
/// the rotations (convex-down mirror), and the net radiation-pressure
/// torsional stiffness of the pair the horizontal motion.
SandwichReport sandwich_stability_check(
    const std::optional<LevitationCavity>& lower,
    const std::optional<LevitationCavity>& upper, MirrorConvexity convexity);

}  // namespace mgom

#endif
