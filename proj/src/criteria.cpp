#include "mgom/criteria.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mgom/mechanics.hpp"

namespace mgom {

Cooperativity cooperativity(const MechanicalOscillator& osc, double g_squared,
                            double kappa) {
  Cooperativity out;
  out.c = 2.0 * g_squared / (osc.damping_rate(osc.omega_m) * kappa);
  const double n_th = osc.thermal_occupancy();
  out.unbounded = n_th == 0.0;
  out.c_qu = out.unbounded ? std::numeric_limits<double>::infinity()
                           : out.c / n_th;
  return out;
}

double measurement_rate(const MechanicalOscillator& osc, double s_imp) {
  if (!(s_imp > 0.0))
    throw std::domain_error("imprecision PSD must be positive");
  const double x_zpf = zero_point_fluctuation(osc);
  return x_zpf * x_zpf / (2.0 * s_imp);
}

bool measurement_rate_sufficient(double gamma_meas, double gamma_th) {
  return gamma_meas >= gamma_th / 8.0;
}

namespace {

FqReport make_report(double product_hz, double threshold_hz, int alpha,
                     double effective_product_hz) {
  FqReport r;
  r.product_hz = product_hz;
  r.threshold_hz = threshold_hz;
  r.margin = product_hz / threshold_hz;
  r.alpha = alpha;
  r.effective_product_hz = effective_product_hz;
  r.pass = product_hz > threshold_hz;
  return r;
}

}  // namespace

FqReport fq_criterion(const MechanicalOscillator& osc,
                      const EffectiveDynamics& dynamics) {
  if (!(dynamics.omega_eff >= osc.omega_m))
    throw std::domain_error("f*Q dilution requires omega_eff >= omega_m");
  const int alpha = osc.model == DampingModel::viscous ? 2 : 3;
  const double kbt_h = constants::boltzmann * osc.temperature / constants::planck;
  const double ratio = osc.omega_m / dynamics.omega_eff;
  const double product = (osc.omega_m / constants::two_pi) * osc.quality;
  const double threshold = kbt_h * std::pow(ratio, alpha);
  const double effective = product * std::pow(1.0 / ratio, alpha);
  return make_report(product, threshold, alpha, effective);
}

FqReport fq_product_check(double f_eff_hz, double q_eff, double temperature) {
  if (!(f_eff_hz > 0.0) || !(q_eff > 0.0))
    throw std::domain_error("effective frequency and Q must be positive");
  const double kbt_h = constants::boltzmann * temperature / constants::planck;
  const double product = f_eff_hz * q_eff;
  return make_report(product, kbt_h, 0, product);
}

Occupancy effective_occupancy(const MechanicalOscillator& osc,
                              const EffectiveDynamics& dynamics) {
  if (!(dynamics.gamma_eff > 0.0))
    throw std::domain_error("effective occupancy undefined for gamma_eff <= 0");
  Occupancy out;
  out.n_eff = constants::boltzmann * osc.temperature /
              (constants::hbar * dynamics.omega_eff) *
              osc.damping_rate(dynamics.omega_eff) / dynamics.gamma_eff;
  out.overdamped = dynamics.gamma_eff >= dynamics.omega_eff;
  return out;
}

}  // namespace mgom
