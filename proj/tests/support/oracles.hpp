// Independent numerical oracles used to freeze expected values; these stay
// off the library's implementation paths on purpose.
#ifndef MGOM_TESTS_ORACLES_HPP
#define MGOM_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace mgom::testing {

/// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double lo,
                     double hi, int iterations = 200) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::runtime_error("bisect: no sign change on the bracket");
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Least-squares slope/intercept of y against x.
struct LinearFit {
  double slope;
  double intercept;
};

inline LinearFit linear_fit(const std::vector<double>& x,
                            const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::runtime_error("linear_fit: bad inputs");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

/// Weighted Gauss-Newton fit of y = A (1 - exp(-b t)), with relative
/// weights matching the chi-squared-like scatter of ensemble energies.
struct SaturationFit {
  double amplitude;
  double rate;
};

inline SaturationFit fit_saturation(const std::vector<double>& t,
                                    const std::vector<double>& y, double a0,
                                    double b0) {
  if (t.size() != y.size() || t.size() < 8)
    throw std::runtime_error("fit_saturation: bad inputs");
  double a = a0, b = b0;
  for (int iter = 0; iter < 50; ++iter) {
    double haa = 0.0, hab = 0.0, hbb = 0.0, ga = 0.0, gb = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double decay = std::exp(-b * t[i]);
      const double model = a * (1.0 - decay);
      const double sigma = std::max(y[i], 1e-3 * a0);
      const double w = 1.0 / (sigma * sigma);
      const double ja = 1.0 - decay;
      const double jb = a * t[i] * decay;
      const double r = y[i] - model;
      haa += w * ja * ja;
      hab += w * ja * jb;
      hbb += w * jb * jb;
      ga += w * ja * r;
      gb += w * jb * r;
    }
    const double det = haa * hbb - hab * hab;
    if (det == 0.0) break;
    const double da = (hbb * ga - hab * gb) / det;
    const double db = (haa * gb - hab * ga) / det;
    a += da;
    b += db;
    if (std::abs(da) < 1e-12 * std::abs(a) && std::abs(db) < 1e-12 * std::abs(b))
      break;
  }
  return {a, b};
}

}  // namespace mgom::testing

#endif
