#ifndef MGOM_SUSPENSION_HPP
#define MGOM_SUSPENSION_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "mgom/types.hpp"

namespace mgom {

/// Infeasible or over-stressed suspension designs; the message names the
/// binding constraint.
struct DesignError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WireMaterial {
  std::string name;
  double youngs_modulus;        // Pa
  double density;               // kg/m^3
  double tensile_strength;      // Pa
  double poisson_ratio;
  double thermal_expansion;     // 1/K
  double specific_heat;         // J/(kg K)
  double thermal_conductivity;  // W/(m K)
  double q_intrinsic;           // intrinsic Q of the wire loss
  // When > 0, the thin-wire surface-loss rule applies: Q_el = coeff * r_w.
  double q_surface_coeff = 0.0;  // 1/m

  double q_el(double r_w) const {
    return q_surface_coeff > 0.0 ? q_surface_coeff * r_w : q_intrinsic;
  }

  static WireMaterial fused_silica();
  static WireMaterial tungsten();
  static WireMaterial silicon();
  static WireMaterial sapphire();
  static WireMaterial carbon_fiber();
  static std::optional<WireMaterial> by_name(const std::string& name);
};

struct Suspension {
  WireMaterial material;
  double r_w;                 // m, wire radius
  double l_w;                 // m, wire length
  int n_w = 1;                // number of wires
  double safety_factor = 3.0; // tensile safety factor s_w > 1
  double bond_loss_angle = 0.0;
  bool thermoelastic_nulled = false;

  double tension(double mass) const;        // per wire, m g / n_w
  double cross_section_inertia() const;     // I_w = pi r_w^4 / 4
};

struct PendulumSprings {
  double k_grav;     // N/m
  double k_el;       // N/m
  double dilution;   // Lambda, Q enhancement factor
  double q_pendulum; // Lambda * Q_el
  double omega_m;    // rad/s, sqrt((k_grav + k_el)/m)
};

/// Errors when pi r_w^2 H_w < s_w T_w (tensile constraint).
PendulumSprings pendulum_springs(double mass, const Suspension& susp);

/// First violin mode (Hz), f_v = (1 / 2 l_w) sqrt(T_w / (rho pi r_w^2)).
double violin_frequency(double mass, const Suspension& susp);

struct DesignConstraints {
  double f_v_min_hz;          // keep the first violin mode at or above this
  double safety_factor = 3.0;
  int n_w = 1;
  double r_w_min = 0.0;       // optional fabrication floor on the radius
};

struct MaxQDesign {
  Suspension suspension;
  PendulumSprings springs;
  double violin_hz;
  double q;                   // achieved pendulum Q
  bool tensile_bound_active;  // radius sits on the tensile boundary
};

/// Deterministic closed-form optimum: radius on the tensile boundary,
/// length placing the first violin mode at f_v_min.
MaxQDesign max_q_design(double mass, const WireMaterial& material,
                        const DesignConstraints& constraints);

/// Thermoelastic loss angle Delta_r omega tau_r / (1 + (omega tau_r)^2).
double thermoelastic_loss(const Suspension& susp, double temperature, double omega);

/// Relaxation time of the thermoelastic peak, (1/2pi) rho C r^2 / (0.539 k).
double thermoelastic_relaxation_time(const Suspension& susp);

/// Residual-gas energy damping rate (p A / C m) sqrt(m_gas / k_B T), viscous.
double gas_damping(double mass, const Environment& env, double temperature);

/// Frequency-resolved damping decomposition for the pendulum mode. Elastic
/// loss angles (wire + bond + thermoelastic) add before dissipation dilution;
/// gas damping is undiluted and viscous.
struct DampingBreakdown {
  double omega_m;       // pendulum resonance used for the conversion
  double gamma_wire;    // rad/s
  double gamma_bond;
  double gamma_thermoelastic;
  double gamma_gas;
  double total() const {
    return gamma_wire + gamma_bond + gamma_thermoelastic + gamma_gas;
  }
};

DampingBreakdown total_pendulum_damping(double mass, const Suspension& susp,
                                        const Environment& env,
                                        double temperature, double omega);

/// Named residual-gas molecule masses (kg): helium, hydrogen, nitrogen,
/// air, argon, water, xenon.
std::optional<double> gas_molecule_mass(const std::string& gas);

/// Default exposed area of a cylindrical mirror, 2 pi r^2 + 2 pi r t.
double cylinder_area(double radius, double thickness);

}  // namespace mgom

#endif
