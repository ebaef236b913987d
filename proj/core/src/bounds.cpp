#include "hmmeb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hmmeb/entropy.hpp"
#include "hmmeb/errors.hpp"

namespace hmmeb {

namespace {

constexpr double kSeriesTermTol = 1e-15;
constexpr double kGeometricTailTol = 1e-14;
// Guard for q near {0,1}, where (1-2q)^{2k} decays arbitrarily slowly and the
// series degenerates toward the harmonic-like sum log2(e)/(2k(2k-1)).
constexpr long kSeriesMaxTerms = 100'000'000;

double clamp_unit(double x) { return std::min(1.0, std::max(0.0, x)); }

void require_lambda(double lambda) {
  if (lambda == 0.0) {
    throw InfiniteNoiseError("lambda = 0 (alpha = 1/2): beta is undefined");
  }
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw std::domain_error("lambda must lie in (0,1]");
  }
}

}  // namespace

NoiseLevel::NoiseLevel(double a) : alpha(a) {
  detail::require_unit_interval(a, "alpha");
  lambda = (1.0 - 2.0 * a) * (1.0 - 2.0 * a);
}

double mgl_bound(double q, double alpha) {
  return binary_entropy(convolve(alpha, q));
}

double beta_symmetric(double q, double lambda, BetaMethod method) {
  detail::require_unit_interval(q, "q");
  require_lambda(lambda);
  const double t = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
  if (method == BetaMethod::series) {
    if (t == 1.0) return 0.0;  // q in {0,1}: h(q^{*g}) = 0 for every g
    double sum = 0.0;
    double tk = 1.0;
    for (long k = 1; k <= kSeriesMaxTerms; ++k) {
      tk *= t;
      const double term = kLog2E / (2.0 * k * (2.0 * k - 1.0)) * lambda * tk /
                          (1.0 - (1.0 - lambda) * tk);
      sum += term;
      if (term < kSeriesTermTol) break;
    }
    return clamp_unit(1.0 - sum);
  }
  // direct
  const double step = 1.0 - 2.0 * q;
  double sum = 0.0;
  double weight = lambda;  // lambda (1-lambda)^{g-1}
  double tail = 1.0;       // (1-lambda)^g
  double d = 1.0;          // (1-2q)^g
  for (long g = 1;; ++g) {
    d *= step;
    sum += weight * binary_entropy(0.5 * (1.0 - d));
    weight *= 1.0 - lambda;
    tail *= 1.0 - lambda;
    if (tail < kGeometricTailTol) break;
  }
  return clamp_unit(sum);
}

double samorodnitsky_bound(double q, double alpha) {
  const NoiseLevel noise(alpha);
  if (noise.lambda == 0.0) return 1.0;  // pure noise: H(Y) rate is exactly 1
  return mgl_phi(beta_symmetric(q, noise.lambda), alpha);
}

double beta_nonsymmetric(const ChainSpec& chain, double lambda) {
  require_lambda(lambda);
  const auto [pi0, pi1] = stationary(chain);
  const double r = chain.decay();
  double sum = 0.0;
  double weight = lambda;
  double tail = 1.0;
  double rg = 1.0;  // decay^g
  for (long g = 1;; ++g) {
    rg *= r;
    const double q01g = pi1 * (1.0 - rg);
    const double q10g = pi0 * (1.0 - rg);
    sum += weight * (pi0 * binary_entropy(clamp_unit(q01g)) +
                     pi1 * binary_entropy(clamp_unit(q10g)));
    weight *= 1.0 - lambda;
    tail *= 1.0 - lambda;
    if (tail < kGeometricTailTol) break;
  }
  return clamp_unit(sum);
}

double nonsymmetric_bound(const ChainSpec& chain, double alpha) {
  const NoiseLevel noise(alpha);
  if (noise.lambda == 0.0) return 1.0;
  return mgl_phi(beta_nonsymmetric(chain, noise.lambda), alpha);
}

double rll_gamma(double q, double alpha) {
  detail::require_unit_interval(q, "q");
  const NoiseLevel noise(alpha);
  const double h0 = binary_entropy(1.0 / (1.0 + q));
  if (noise.lambda == 0.0) {
    // alpha = 1/2 limit of the coefficient: 0 for q < 1, 1/2 at q = 1.
    return q == 1.0 ? 0.0 : h0;
  }
  const double coeff = noise.lambda * q /
                       ((1.0 + q) * (1.0 - 4.0 * alpha * (1.0 - alpha) * q));
  const double bracket = 2.0 * h0 - binary_entropy((1.0 - q) / (1.0 + q));
  return clamp_unit(h0 - coeff * bracket);
}

double rll_bound(double q, double alpha) {
  return mgl_phi(rll_gamma(q, alpha), alpha);
}

double single_letter_ub(const ChainSpec& chain, double alpha) {
  return binary_entropy(convolve(alpha, chain.pi1()));
}

double very_noisy_constant(double q) {
  detail::require_unit_interval(q, "q");
  if (q == 0.0 || q == 1.0) {
    throw std::domain_error("very_noisy_constant diverges at q in {0,1}");
  }
  const double t = (1.0 - 2.0 * q) * (1.0 - 2.0 * q);
  if (t == 0.0) return 0.0;
  double sum = 0.0;
  double tk = 1.0;
  for (long k = 1; k <= kSeriesMaxTerms; ++k) {
    tk *= t;
    const double term = kLog2E / (2.0 * k * (2.0 * k - 1.0)) * tk / (1.0 - tk);
    sum += term;
    if (term < kSeriesTermTol) break;
  }
  return 16.0 * sum;
}

double fast_transitions_deficit(double alpha) {
  detail::require_unit_interval(alpha, "alpha");
  const double d = 1.0 - 2.0 * alpha;
  return 2.0 * kLog2E * d * d * d * d;
}

double rll_very_noisy_deficit(double q) {
  detail::require_unit_interval(q, "q");
  const double r = (1.0 - q) / (1.0 + q);  // 1 - 2*pi1
  return 2.0 * kLog2E * r * r;
}

BoundReport bound_report(const ChainSpec& chain, double alpha) {
  const NoiseLevel noise(alpha);
  BoundReport report;
  report.mgl = mgl_phi(markov_entropy_rate(chain), alpha);
  if (noise.lambda == 0.0) {
    report.beta = 1.0;
    report.new_bound = 1.0;
  } else {
    report.beta = chain.is_symmetric()
                      ? beta_symmetric(chain.q01(), noise.lambda)
                      : beta_nonsymmetric(chain, noise.lambda);
    report.new_bound = mgl_phi(report.beta, alpha);
  }
  report.single_letter_ub = single_letter_ub(chain, alpha);
  if (chain.q10() == 1.0) {
    report.has_gamma = true;
    report.gamma = rll_gamma(chain.q01(), alpha);
    report.rll = rll_bound(chain.q01(), alpha);
  }
  return report;
}

}  // namespace hmmeb
