#ifndef MGOM_CONFIG_HPP
#define MGOM_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mgom/cavity.hpp"
#include "mgom/coupling.hpp"
#include "mgom/suspension.hpp"
#include "mgom/types.hpp"

namespace mgom {

/// Parse or schema failure, with line/section context in the message.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plain-text config: bracketed [section] headers, key = value lines,
// '#' comments. Keys carry their unit as a suffix; frequency inputs are in
// Hz and are converted to angular frequency at this boundary. Unknown keys
// and sections are rejected.

struct OscillatorSection {
  double mass_kg;
  double f_m_hz;
  double q;
  DampingModel damping = DampingModel::viscous;
  double temperature_k = 300.0;
};

struct CavitySection {
  double length_m;
  std::optional<double> finesse;  // lossless over-coupled shorthand
  std::optional<double> t_in;     // with optional extra_loss
  double extra_loss = 0.0;
  Curvature r1 = Curvature::flat();
  Curvature r2 = Curvature::flat();
};

struct LaserSection {
  double wavelength_m;
  std::optional<double> power_in_w;  // exactly one of these two
  std::optional<double> p_circ_w;
  double detuning_hz = 0.0;
  double efficiency = 1.0;
};

struct EnvironmentSection {
  double pressure_pa;
  std::string gas = "helium";
  std::optional<double> gas_mass_kg;  // overrides the named gas
  double shape_c = 1.0;
  std::optional<double> area_m2;      // absent = "auto" from mirror geometry
  std::optional<double> mirror_radius_m;
  std::optional<double> mirror_thickness_m;

  double molecule_mass() const;
  /// Resolved exposed area; "auto" uses the cylinder 2 pi r^2 + 2 pi r t.
  double area() const;
};

struct SuspensionSection {
  WireMaterial material;
  double r_w_m;
  double l_w_m;
  int n_w = 1;
  double s_w = 3.0;
  double bond_loss = 0.0;
  bool thermoelastic_nulled = false;

  Suspension suspension() const {
    return Suspension{material, r_w_m, l_w_m, n_w, s_w, bond_loss,
                      thermoelastic_nulled};
  }
};

struct TorsionSection {
  double d_m;
  double a = 1.0 / 12.0;
};

struct LevitationSection {
  bool enabled = false;
};

/// Externally quoted effective-mode numbers (e.g. an optically trapped
/// resonance) used by the criteria report instead of computed springs.
struct EffectiveSection {
  double f_eff_hz;
  std::optional<double> q_eff;
};

/// Second cavity for the sandwich-levitation stability check.
struct UpperCavitySection {
  double length_m;
  double p_circ_w = 0.0;
  double detuning_hz = 0.0;
  Curvature r1 = Curvature::flat();
  Curvature r2 = Curvature::flat();
};

struct SystemConfig {
  std::optional<OscillatorSection> oscillator;
  std::optional<CavitySection> cavity;
  std::optional<LaserSection> laser;
  std::optional<EnvironmentSection> environment;
  std::optional<SuspensionSection> suspension;
  std::optional<TorsionSection> torsion;
  std::optional<LevitationSection> levitation;
  std::optional<EffectiveSection> effective;
  std::optional<UpperCavitySection> upper_cavity;
};

SystemConfig parse_config(std::string_view text);
SystemConfig load_config_file(const std::string& path);

/// Canonical text form; parse(serialize(c)) reproduces c.
std::string serialize_config(const SystemConfig& config);

/// Oscillator + cavity + laser resolved into physics objects.
struct AssembledSystem {
  MechanicalOscillator osc;
  CavityResponse resp;
  std::optional<OpticalCavity> geometry;  // present when t_in route was given
  LaserDrive drive;
  double length;
  double p_circ;
  CouplingParams coupling;
};

/// Requires the oscillator, cavity and laser sections.
AssembledSystem build_system(const SystemConfig& config);

}  // namespace mgom

#endif
