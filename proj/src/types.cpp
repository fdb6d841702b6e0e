#include "mgom/types.hpp"

#include <cmath>
#include <stdexcept>

namespace mgom {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

MechanicalOscillator::MechanicalOscillator(double mass, double omega_m,
                                           double quality, DampingModel model,
                                           double temperature)
    : mass(mass), omega_m(omega_m), quality(quality), model(model),
      temperature(temperature) {
  require(finite_positive(mass), "oscillator mass must be positive");
  require(finite_positive(omega_m), "oscillator resonance must be positive");
  require(finite_positive(quality), "oscillator Q must be positive");
  require(std::isfinite(temperature) && temperature >= 0.0,
          "bath temperature must be >= 0");
}

double MechanicalOscillator::damping_rate(double omega) const {
  switch (model) {
    case DampingModel::viscous:
      return omega_m / quality;
    case DampingModel::structure:
      if (!(omega > 0.0))
        throw std::domain_error("structure damping rate requires omega > 0");
      return omega_m * omega_m / (omega * quality);
  }
  throw std::logic_error("unreachable damping model");
}

double MechanicalOscillator::loss_angle(double omega) const {
  return damping_rate(omega) * omega / (omega_m * omega_m);
}

double MechanicalOscillator::thermal_occupancy() const {
  return constants::boltzmann * temperature / (constants::hbar * omega_m);
}

Curvature Curvature::finite(double radius_m) {
  if (!std::isfinite(radius_m) || radius_m == 0.0)
    throw std::invalid_argument("radius of curvature must be finite and nonzero");
  return Curvature(false, radius_m);
}

double Curvature::radius() const {
  if (flat_) throw std::logic_error("flat mirror has no finite radius");
  return radius_;
}

double Curvature::g_factor(double cavity_length) const {
  return flat_ ? 1.0 : 1.0 - cavity_length / radius_;
}

OpticalCavity::OpticalCavity(double length, double input_transmission,
                             double extra_loss, Curvature r1, Curvature r2)
    : length(length), input_transmission(input_transmission),
      extra_loss(extra_loss), r1(r1), r2(r2) {
  require(finite_positive(length), "cavity length must be positive");
  require(std::isfinite(input_transmission) && input_transmission > 0.0 &&
              input_transmission <= 1.0,
          "input transmission must be in (0, 1]");
  require(std::isfinite(extra_loss) && extra_loss >= 0.0,
          "extra round-trip loss must be >= 0");
}

LaserDrive::LaserDrive(double wavelength, double input_power, double detuning,
                       double efficiency)
    : wavelength(wavelength), input_power(input_power), detuning(detuning),
      efficiency(efficiency) {
  require(finite_positive(wavelength), "wavelength must be positive");
  require(std::isfinite(input_power) && input_power >= 0.0,
          "input power must be >= 0");
  require(std::isfinite(detuning), "detuning must be finite");
  require(std::isfinite(efficiency) && efficiency > 0.0 && efficiency <= 1.0,
          "collection efficiency must be in (0, 1]");
}

Environment::Environment(double pressure, double molecule_mass,
                         double shape_constant, double exposed_area)
    : pressure(pressure), molecule_mass(molecule_mass),
      shape_constant(shape_constant), exposed_area(exposed_area) {
  require(std::isfinite(pressure) && pressure >= 0.0, "pressure must be >= 0");
  require(finite_positive(molecule_mass), "gas molecule mass must be positive");
  require(finite_positive(shape_constant), "shape constant must be positive");
  require(std::isfinite(exposed_area) && exposed_area >= 0.0,
          "exposed area must be >= 0");
}

FrequencyGrid FrequencyGrid::log_spaced_hz(double f_min_hz, double f_max_hz,
                                           int points) {
  require(finite_positive(f_min_hz), "grid minimum must be positive");
  require(std::isfinite(f_max_hz) && f_max_hz >= f_min_hz,
          "grid maximum must be >= minimum");
  require(points >= 1, "grid needs at least one point");

  std::vector<double> omega;
  omega.reserve(static_cast<std::size_t>(points));
  if (points == 1) {
    omega.push_back(constants::two_pi * f_min_hz);
  } else {
    require(f_max_hz > f_min_hz, "multi-point grid needs f_max > f_min");
    const double log_min = std::log(f_min_hz);
    const double step = (std::log(f_max_hz) - log_min) / (points - 1);
    for (int i = 0; i < points; ++i)
      omega.push_back(constants::two_pi * std::exp(log_min + i * step));
    omega.back() = constants::two_pi * f_max_hz;
  }
  return from_angular(std::move(omega));
}

FrequencyGrid FrequencyGrid::from_angular(std::vector<double> omega) {
  require(!omega.empty(), "frequency grid must not be empty");
  double prev = 0.0;
  for (double w : omega) {
    require(std::isfinite(w) && w > prev,
            "frequency grid must be strictly increasing and positive");
    prev = w;
  }
  FrequencyGrid g;
  g.omega = std::move(omega);
  return g;
}

ValidationReport validate_system(const MechanicalOscillator& osc,
                                 const OpticalCavity& cav,
                                 const LaserDrive& drive) {
  ValidationReport report;
  if (!(osc.mass > 0.0)) report.violations.push_back("oscillator mass must be positive");
  if (!(drive.efficiency > 0.0 && drive.efficiency <= 1.0))
    report.violations.push_back("collection efficiency out of (0, 1]");

  const double gg = cav.g1() * cav.g2();
  if (gg < 0.0 || gg > 1.0) {
    report.violations.push_back("cavity unstable: g1*g2 outside [0, 1]");
  } else if (gg == 1.0) {
    report.warnings.push_back("cavity marginally stable: g1*g2 = 1");
  }
  return report;
}

}  // namespace mgom
