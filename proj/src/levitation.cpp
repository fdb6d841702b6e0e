#include "mgom/levitation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mgom/coupling.hpp"

namespace mgom {

double levitation_power(double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  return mass * constants::standard_gravity * constants::speed_of_light / 2.0;
}

double levitation_sql_frequency(double finesse, double wavelength) {
  if (!(finesse > 0.0) || !(wavelength > 0.0))
    throw std::invalid_argument("finesse and wavelength must be positive");
  return std::sqrt(16.0 * finesse * constants::standard_gravity / wavelength);
}

double finesse_bound(double length, double wavelength) {
  if (!(length > 0.0) || !(wavelength > 0.0))
    throw std::invalid_argument("length and wavelength must be positive");
  const double c = constants::speed_of_light;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return std::cbrt(pi2 * c * c * wavelength /
                   (64.0 * length * length * constants::standard_gravity));
}

SandwichReport sandwich_stability_check(
    const std::optional<LevitationCavity>& lower,
    const std::optional<LevitationCavity>& upper, MirrorConvexity convexity) {
  SandwichReport report{false, false, false, {}};

  if (!lower.has_value()) {
    report.notes.push_back("no lower cavity: nothing supports the mirror");
    return report;
  }

  // Vertical: a positive optical spring needs light and a detuning of the
  // spring-forming sign.
  if (lower->p_circ > 0.0 && lower->detuning > 0.0) {
    report.vertical_trapped = true;
  } else if (lower->p_circ <= 0.0) {
    report.notes.push_back("vertical: no circulating power in the lower cavity");
  } else {
    report.notes.push_back(
        "vertical: lower-cavity detuning does not form a positive optical spring");
  }

  if (convexity == MirrorConvexity::convex_down) {
    report.rotational_trapped = true;
  } else {
    report.notes.push_back(
        "rotational: gravity restores rotations only for a convex-down mirror");
  }

  // Horizontal: net torsional stiffness of the pair, each cavity evaluated
  // for its movable (levitated) mirror.
  double k_net = 0.0;
  bool any_light = false;
  for (const auto* side : {&lower, &upper}) {
    if (!side->has_value()) continue;
    const auto& lc = side->value();
    if (lc.p_circ <= 0.0) continue;
    any_light = true;
    try {
      k_net += sidles_sigg_stiffness(lc.cavity, lc.p_circ, MovableMirror::mirror2);
    } catch (const std::domain_error&) {
      report.notes.push_back(
          "horizontal: cavity geometry outside the stability range (g1 g2 >= 1)");
    }
  }
  if (!any_light) {
    report.notes.push_back("horizontal: no circulating power anywhere");
  } else if (k_net > 0.0) {
    report.horizontal_trapped = true;
  } else {
    report.notes.push_back(
        "horizontal: net radiation-pressure torsional stiffness is not restoring");
  }
  return report;
}

}  // namespace mgom
