#pragma once

#include "hmmeb/markov.hpp"

namespace hmmeb {

/// BSC crossover probability together with the subset-sampling rate
/// lambda = (1-2*alpha)^2 it induces.
struct NoiseLevel {
  double alpha;
  double lambda;
  explicit NoiseLevel(double a);
};

enum class BetaMethod { series, direct };

/// Classical MGL lower bound for a symmetric chain: h(alpha * q).
double mgl_bound(double q, double alpha);

/// beta = E h(q^{*G}) for G ~ Geometric(lambda).
///   series: term-by-term Taylor/geometric-expectation sum, truncated when a
///           term drops below 1e-15 (terms decay in (1-2q)^{2k}).
///   direct: sum_g lambda (1-lambda)^{g-1} h(q^{*g}), truncated when the tail
///           mass (1-lambda)^g < 1e-14 (h <= 1 bounds the tail).
/// Throws InfiniteNoiseError when lambda = 0.
double beta_symmetric(double q, double lambda,
                      BetaMethod method = BetaMethod::series);

/// Strengthened-MGL lower bound for a symmetric chain:
/// h(alpha * h^{-1}(beta_symmetric(q, (1-2*alpha)^2))); exactly 1 at alpha=1/2.
double samorodnitsky_bound(double q, double alpha);

/// pi0 E h(q01^{#G}) + pi1 E h(q10^{#G}) for G ~ Geometric(lambda).
double beta_nonsymmetric(const ChainSpec& chain, double lambda);

/// Strengthened-MGL lower bound for a general two-state chain.
double nonsymmetric_bound(const ChainSpec& chain, double alpha);

/// Closed-form concavity relaxation of beta for the RLL chain.
double rll_gamma(double q, double alpha);

/// RLL lower bound h(alpha * h^{-1}(gamma)).
double rll_bound(double q, double alpha);

/// Single-letter upper bound h(alpha * pi1).
double single_letter_ub(const ChainSpec& chain, double alpha);

/// Very-noisy deficit constant C(q) with
/// 1 - bound(q, 1/2-eps) = C(q) eps^4 + o(eps^4). Diverges at q in {0,1}.
double very_noisy_constant(double q);

/// eps^2-coefficient of 1 - bound(1/2-eps, alpha): 2 log2(e) (1-2*alpha)^4.
double fast_transitions_deficit(double alpha);

/// eps^2-coefficient of 1 - entropy rate for the very noisy RLL chain:
/// 2 log2(e) ((1-q)/(1+q))^2; returns 0 at q = 1 (outside the stated range).
double rll_very_noisy_deficit(double q);

/// Named bound values for one (chain, alpha) pair.
struct BoundReport {
  double mgl;               // MGL applied to the chain's entropy rate
  double new_bound;         // strengthened-MGL bound (Samorodnitsky-type)
  double beta;              // E h(q^{#G}) expectation behind new_bound
  double single_letter_ub;  // h(alpha * pi1)
  bool has_gamma = false;   // set for RLL chains
  double gamma = 0.0;
  double rll = 0.0;         // rll_bound when has_gamma
};

BoundReport bound_report(const ChainSpec& chain, double alpha);

}  // namespace hmmeb
