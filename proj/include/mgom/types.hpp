#ifndef MGOM_TYPES_HPP
#define MGOM_TYPES_HPP

#include <string>
#include <vector>

#include "mgom/constants.hpp"

namespace mgom {

/// Frequency-dependence of the energy damping rate gamma_m(omega).
/// Viscous: gamma constant. Structure: loss angle constant, gamma ~ 1/omega.
enum class DampingModel { viscous, structure };

/// Single mechanical eigenmode coupled to a thermal bath.
/// All frequencies are angular (rad/s).
struct MechanicalOscillator {
  double mass;         // kg
  double omega_m;      // rad/s
  double quality;      // Q at the mechanical resonance
  DampingModel model;
  double temperature;  // K, bath temperature

  MechanicalOscillator(double mass, double omega_m, double quality,
                       DampingModel model = DampingModel::viscous,
                       double temperature = 0.0);

  /// gamma_m(omega); for the structure model this diverges as omega -> 0,
  /// so evaluation requires omega > 0.
  double damping_rate(double omega) const;

  /// Loss angle phi = gamma(omega) * omega / omega_m^2.
  double loss_angle(double omega) const;

  /// High-temperature occupancy k_B T / (hbar omega_m).
  double thermal_occupancy() const;
};

/// Mirror radius of curvature; flat mirrors are an explicit state rather
/// than an infinite sentinel. Finite radii are signed (negative = convex
/// towards the cavity).
class Curvature {
 public:
  static Curvature flat() { return Curvature(true, 0.0); }
  static Curvature finite(double radius_m);

  bool is_flat() const { return flat_; }
  double radius() const;  // throws for flat mirrors

  /// g = 1 - L/R; exactly 1 for a flat mirror.
  double g_factor(double cavity_length) const;

 private:
  Curvature(bool flat, double radius) : flat_(flat), radius_(radius) {}
  bool flat_;
  double radius_;
};

/// Two-mirror Fabry-Perot cavity geometry and loss budget. Mirror 1 is the
/// fixed/input mirror, mirror 2 the movable one.
struct OpticalCavity {
  double length;              // m
  double input_transmission;  // intensity transmission of the input mirror
  double extra_loss;          // equivalent round-trip intensity loss besides T_in
  Curvature r1;
  Curvature r2;

  OpticalCavity(double length, double input_transmission, double extra_loss,
                Curvature r1, Curvature r2);

  double g1() const { return r1.g_factor(length); }
  double g2() const { return r2.g_factor(length); }
};

/// Pump laser parameters. detuning = omega_L - omega_cav.
struct LaserDrive {
  double wavelength;   // m
  double input_power;  // W
  double detuning;     // rad/s
  double efficiency;   // photon collection efficiency in (0, 1]

  LaserDrive(double wavelength, double input_power, double detuning = 0.0,
             double efficiency = 1.0);

  double omega_laser() const {
    return constants::two_pi * constants::speed_of_light / wavelength;
  }
};

/// Residual-gas environment around the oscillator.
struct Environment {
  double pressure;        // Pa
  double molecule_mass;   // kg
  double shape_constant;  // order-unity geometry factor
  double exposed_area;    // m^2

  Environment(double pressure, double molecule_mass, double shape_constant,
              double exposed_area);
};

/// Strictly increasing grid of positive angular frequencies.
struct FrequencyGrid {
  std::vector<double> omega;  // rad/s

  static FrequencyGrid log_spaced_hz(double f_min_hz, double f_max_hz, int points);
  static FrequencyGrid from_angular(std::vector<double> omega);

  std::size_t size() const { return omega.size(); }
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

/// Pure cross-checks over an assembled system; never mutates inputs.
ValidationReport validate_system(const MechanicalOscillator& osc,
                                 const OpticalCavity& cav,
                                 const LaserDrive& drive);

}  // namespace mgom

#endif
