#include "hmmeb/entropy.hpp"

#include <cmath>

#include "hmmeb/errors.hpp"

namespace hmmeb {

double binary_entropy(double p) {
  detail::require_unit_interval(p, "p");
  if (p == 0.0 || p == 1.0) return 0.0;  // 0 log 0 = 0 convention
  return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

double binary_entropy_inv(double t) {
  detail::require_unit_interval(t, "t");
  if (t == 0.0) return 0.0;
  if (t == 1.0) return 0.5;
  // Bisection keeps unconditional convergence; Newton is unusable near t=0
  // where h' diverges.
  double lo = 0.0, hi = 0.5;
  for (int i = 0; i < 50 && hi - lo > 0.25e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double convolve(double a, double b) {
  detail::require_unit_interval(a, "a");
  detail::require_unit_interval(b, "b");
  return a + b - 2.0 * a * b;
}

double mgl_phi(double t, double alpha) {
  return binary_entropy(convolve(alpha, binary_entropy_inv(t)));
}

}  // namespace hmmeb
