#ifndef MGOM_CRITERIA_HPP
#define MGOM_CRITERIA_HPP

#include "mgom/coupling.hpp"
#include "mgom/types.hpp"

namespace mgom {

struct Cooperativity {
  double c;       // 2 g^2 / (gamma_m kappa)
  double c_qu;    // c / n_th; +inf when the bath is at T = 0
  bool unbounded; // true at T = 0
};

/// gamma_m is taken at the mechanical resonance.
Cooperativity cooperativity(const MechanicalOscillator& osc, double g_squared,
                            double kappa);

/// Gamma_meas = x_zpf^2 / (2 S_imp), the inverse time to resolve the zero
/// point fluctuation against imprecision noise S_imp (m^2/Hz, at omega_m).
double measurement_rate(const MechanicalOscillator& osc, double s_imp);

/// Ground-state-cooling requirement Gamma_meas >= Gamma_th / 8.
bool measurement_rate_sufficient(double gamma_meas, double gamma_th);

struct FqReport {
  double product_hz;            // f_m * Q_m
  double threshold_hz;          // (k_B T / h)(omega_m / omega_eff)^alpha
  double margin;                // product / threshold
  int alpha;                    // 2 viscous, 3 structure
  double effective_product_hz;  // f_eff * Q_eff, same verdict by construction
  bool pass;
};

/// f*Q test for ground-state cooling; optical-spring dilution enters through
/// omega_eff with the damping-model exponent.
FqReport fq_criterion(const MechanicalOscillator& osc,
                      const EffectiveDynamics& dynamics);

/// Same test evaluated directly from quoted effective numbers.
FqReport fq_product_check(double f_eff_hz, double q_eff, double temperature);

struct Occupancy {
  double n_eff;     // k_B T / (hbar omega_eff) * gamma_m(omega_eff) / gamma_eff
  bool overdamped;  // gamma_eff >= omega_eff
};

Occupancy effective_occupancy(const MechanicalOscillator& osc,
                              const EffectiveDynamics& dynamics);

}  // namespace mgom

#endif
