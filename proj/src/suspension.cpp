#include "mgom/suspension.hpp"

#include <cmath>
#include <numbers>

namespace mgom {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double g0 = constants::standard_gravity;

void check_suspension(const Suspension& s) {
  if (!(s.r_w > 0.0) || !(s.l_w > 0.0))
    throw std::invalid_argument("wire radius and length must be positive");
  if (s.n_w < 1) throw std::invalid_argument("need at least one wire");
  if (!(s.safety_factor > 1.0))
    throw std::invalid_argument("safety factor must exceed unity");
  if (!(s.bond_loss_angle >= 0.0))
    throw std::invalid_argument("bond loss angle must be >= 0");
}

}  // namespace

WireMaterial WireMaterial::fused_silica() {
  // Room-temperature fiber values; tensile strength is for thin drawn fibers.
  return {"fused_silica", 72e9, 2200.0, 4.0e9, 0.17, 5.5e-7, 746.0, 1.38, 1e6, 0.0};
}

WireMaterial WireMaterial::tungsten() {
  return {"tungsten", 411e9, 19300.0, 3.5e9, 0.28, 4.5e-6, 134.0, 173.0, 3e3, 0.0};
}

WireMaterial WireMaterial::silicon() {
  return {"silicon", 150e9, 2330.0, 1.0e9, 0.22, 2.6e-6, 700.0, 150.0, 1e7, 0.0};
}

WireMaterial WireMaterial::sapphire() {
  return {"sapphire", 400e9, 3980.0, 2.0e9, 0.29, 5.4e-6, 760.0, 40.0, 1e7, 0.0};
}

WireMaterial WireMaterial::carbon_fiber() {
  return {"carbon_fiber", 230e9, 1800.0, 4.0e9, 0.20, 1e-7, 710.0, 10.0, 1e4, 0.0};
}

std::optional<WireMaterial> WireMaterial::by_name(const std::string& name) {
  if (name == "fused_silica" || name == "silica") return fused_silica();
  if (name == "tungsten") return tungsten();
  if (name == "silicon") return silicon();
  if (name == "sapphire") return sapphire();
  if (name == "carbon_fiber" || name == "carbon") return carbon_fiber();
  return std::nullopt;
}

double Suspension::tension(double mass) const {
  return mass * g0 / n_w;
}

double Suspension::cross_section_inertia() const {
  return pi * r_w * r_w * r_w * r_w / 4.0;
}

PendulumSprings pendulum_springs(double mass, const Suspension& susp) {
  check_suspension(susp);
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");

  const double t_w = susp.tension(mass);
  const double capacity = pi * susp.r_w * susp.r_w * susp.material.tensile_strength;
  // Tolerate rounding right on the boundary.
  if (capacity < susp.safety_factor * t_w * (1.0 - 1e-12))
    throw DesignError("tensile constraint violated: pi r_w^2 H_w < s_w T_w");

  PendulumSprings out;
  out.k_grav = mass * g0 / susp.l_w;
  out.k_el = susp.n_w *
             std::sqrt(pi * t_w * susp.material.youngs_modulus *
                       susp.cross_section_inertia()) /
             (2.0 * susp.l_w * susp.l_w);
  out.dilution = 4.0 * susp.l_w / (susp.r_w * susp.r_w) *
                 std::sqrt(mass * g0 /
                           (pi * susp.n_w * susp.material.youngs_modulus));
  out.q_pendulum = out.dilution * susp.material.q_el(susp.r_w);
  out.omega_m = std::sqrt((out.k_grav + out.k_el) / mass);
  return out;
}

double violin_frequency(double mass, const Suspension& susp) {
  check_suspension(susp);
  const double t_w = susp.tension(mass);
  return 1.0 / (2.0 * susp.l_w) *
         std::sqrt(t_w / (susp.material.density * pi * susp.r_w * susp.r_w));
}

MaxQDesign max_q_design(double mass, const WireMaterial& material,
                        const DesignConstraints& constraints) {
  if (!(mass > 0.0)) throw DesignError("mass must be positive");
  if (!(constraints.f_v_min_hz > 0.0))
    throw DesignError("violin-mode floor must be positive");
  if (!(constraints.safety_factor > 1.0))
    throw DesignError("safety factor must exceed unity");
  if (constraints.n_w < 1) throw DesignError("need at least one wire");

  const double t_w = mass * g0 / constraints.n_w;
  // Q grows monotonically as the wire thins and lengthens, so the optimum
  // pins the radius to the tensile boundary and the length to the violin
  // floor.
  const double r_tensile =
      std::sqrt(constraints.safety_factor * t_w / (pi * material.tensile_strength));
  const double r_w = std::max(r_tensile, constraints.r_w_min);
  const double l_w =
      1.0 / (2.0 * constraints.f_v_min_hz) *
      std::sqrt(t_w / (material.density * pi * r_w * r_w));

  MaxQDesign out;
  out.suspension = Suspension{material, r_w, l_w, constraints.n_w,
                              constraints.safety_factor, 0.0, false};
  out.springs = pendulum_springs(mass, out.suspension);
  out.violin_hz = violin_frequency(mass, out.suspension);
  out.q = out.springs.q_pendulum;
  out.tensile_bound_active = r_w == r_tensile;
  return out;
}

double thermoelastic_relaxation_time(const Suspension& susp) {
  const auto& m = susp.material;
  return 1.0 / (2.0 * pi) * m.density * m.specific_heat * susp.r_w * susp.r_w /
         (0.539 * m.thermal_conductivity);
}

double thermoelastic_loss(const Suspension& susp, double temperature,
                          double omega) {
  if (!(omega > 0.0))
    throw std::domain_error("thermoelastic loss requires omega > 0");
  if (susp.thermoelastic_nulled) return 0.0;
  const auto& m = susp.material;
  const double delta_r = m.youngs_modulus * m.thermal_expansion *
                         m.thermal_expansion * temperature /
                         (m.density * m.specific_heat);
  const double wt = omega * thermoelastic_relaxation_time(susp);
  return delta_r * wt / (1.0 + wt * wt);
}

double gas_damping(double mass, const Environment& env, double temperature) {
  if (!(temperature > 0.0))
    throw std::domain_error("gas damping requires temperature > 0");
  return env.pressure * env.exposed_area / (env.shape_constant * mass) *
         std::sqrt(env.molecule_mass / (constants::boltzmann * temperature));
}

DampingBreakdown total_pendulum_damping(double mass, const Suspension& susp,
                                        const Environment& env,
                                        double temperature, double omega) {
  if (!(omega > 0.0))
    throw std::domain_error("damping decomposition requires omega > 0");
  const PendulumSprings springs = pendulum_springs(mass, susp);

  // Structure-type loss angles, diluted, then converted through
  // gamma = phi * omega_m^2 / omega.
  const double w2_over_w = springs.omega_m * springs.omega_m / omega;
  const double dilute = 1.0 / springs.dilution;
  const double phi_wire = dilute / susp.material.q_el(susp.r_w);
  const double phi_bond = dilute * susp.bond_loss_angle;
  const double phi_te = dilute * thermoelastic_loss(susp, temperature, omega);

  DampingBreakdown out;
  out.omega_m = springs.omega_m;
  out.gamma_wire = phi_wire * w2_over_w;
  out.gamma_bond = phi_bond * w2_over_w;
  out.gamma_thermoelastic = phi_te * w2_over_w;
  out.gamma_gas = gas_damping(mass, env, temperature);
  return out;
}

std::optional<double> gas_molecule_mass(const std::string& gas) {
  const double u = constants::atomic_mass_unit;
  if (gas == "helium") return 4.002602 * u;
  if (gas == "hydrogen") return 2.016 * u;
  if (gas == "nitrogen") return 28.0134 * u;
  if (gas == "air") return 28.97 * u;
  if (gas == "argon") return 39.948 * u;
  if (gas == "water") return 18.015 * u;
  if (gas == "xenon") return 131.293 * u;
  return std::nullopt;
}

double cylinder_area(double radius, double thickness) {
  return 2.0 * pi * radius * radius + 2.0 * pi * radius * thickness;
}

}  // namespace mgom
