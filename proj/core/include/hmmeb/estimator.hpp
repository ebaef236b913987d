#pragma once

#include <cstdint>
#include <span>

#include "hmmeb/markov.hpp"

namespace hmmeb {

struct EstimateResult {
  double estimate;      // entropy rate estimate, bits/symbol
  double ci_halfwidth;  // 95% confidence half-width
  long long samples;    // post-burn-in samples per chain
  long long burnin;
  int chains;
  std::uint64_t seed;
};

/// Monte Carlo estimate of the entropy rate of the chain observed through
/// BSC(alpha): simulate (X_t, Y_t), track the belief P(X_t = 1 | Y^t), and
/// average the predictive log-loss -log2 P(Y_{t+1} | Y^t) after burn-in over
/// independent chains. Deterministic given the inputs. Degenerate alpha in
/// {0,1} returns the exact Markov entropy rate with a zero-width interval.
EstimateResult estimate_entropy_rate(const ChainSpec& chain, double alpha,
                                     long long samples, long long burnin,
                                     int chains, std::uint64_t seed,
                                     int max_threads = 0);

/// log2 P(y_1..y_n) accumulated from the one-step predictive probabilities of
/// the belief recursion, starting from the stationary belief.
double sequence_log2_prob(const ChainSpec& chain, double alpha,
                          std::span<const std::uint8_t> y);

}  // namespace hmmeb
