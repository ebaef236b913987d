#include "hmmeb/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "hmmeb/entropy.hpp"
#include "hmmeb/errors.hpp"
#include "hmmeb/parallel.hpp"
#include "hmmeb/rng.hpp"

namespace hmmeb {

namespace {

constexpr int kBatchesPerChain = 32;

struct ChainStats {
  double mean = 0.0;
  std::vector<double> batch_means;
};

// One simulated chain of predictive log-losses. The belief is kept in plain
// probability space; with two states and nondegenerate alpha the predictive
// probability is bounded away from 0 by min(alpha, 1-alpha).
ChainStats run_chain(const ChainSpec& chain, double alpha, long long samples,
                     long long burnin, CounterRng rng) {
  const double q01 = chain.q01();
  const double q10 = chain.q10();
  const double pi1 = chain.pi1();

  ChainStats stats;
  const long long batch_len = samples / kBatchesPerChain;
  stats.batch_means.reserve(kBatchesPerChain);

  std::uint8_t x = rng.bernoulli(pi1) ? 1 : 0;
  double belief = pi1;  // P(X_t = 1 | Y^t), before the first observation the
                        // stationary prior doubles as the prediction
  double total = 0.0;
  double batch = 0.0;
  long long in_batch = 0;
  bool first = true;
  for (long long t = 0; t < burnin + samples; ++t) {
    double pred1;
    if (first) {
      pred1 = pi1;
      first = false;
    } else {
      if (rng.bernoulli(x ? q10 : q01)) x ^= 1;
      pred1 = belief * (1.0 - q10) + (1.0 - belief) * q01;
    }
    const std::uint8_t y = static_cast<std::uint8_t>(
        x ^ (rng.bernoulli(alpha) ? 1 : 0));
    const double py1 = pred1 * (1.0 - alpha) + (1.0 - pred1) * alpha;
    double py = y ? py1 : 1.0 - py1;
    py = std::clamp(py, 1e-300, 1.0);
    belief = (y ? pred1 * (1.0 - alpha) : pred1 * alpha) / py;
    if (t >= burnin) {
      const double loss = -std::log2(py);
      total += loss;
      batch += loss;
      if (++in_batch == batch_len &&
          static_cast<long long>(stats.batch_means.size()) <
              kBatchesPerChain) {
        stats.batch_means.push_back(batch / static_cast<double>(batch_len));
        batch = 0.0;
        in_batch = 0;
      }
    }
  }
  stats.mean = total / static_cast<double>(samples);
  return stats;
}

double t_quantile_975(int df) {
  return boost::math::quantile(boost::math::students_t(df), 0.975);
}

// 95% half-width from a set of (approximately independent) means.
double ci_from_means(const std::vector<double>& means) {
  const std::size_t m = means.size();
  double mu = 0.0;
  for (double v : means) mu += v;
  mu /= static_cast<double>(m);
  double var = 0.0;
  for (double v : means) var += (v - mu) * (v - mu);
  var /= static_cast<double>(m - 1);
  const double ci =
      t_quantile_975(static_cast<int>(m) - 1) *
      std::sqrt(var / static_cast<double>(m));
  return std::max(ci, 1e-15);
}

}  // namespace

EstimateResult estimate_entropy_rate(const ChainSpec& chain, double alpha,
                                     long long samples, long long burnin,
                                     int chains, std::uint64_t seed,
                                     int max_threads) {
  detail::require_unit_interval(alpha, "alpha");
  if (samples < 10'000) {
    throw std::invalid_argument("samples must be >= 10000");
  }
  if (burnin < 100) throw std::invalid_argument("burnin must be >= 100");
  if (chains < 1) throw std::invalid_argument("chains must be >= 1");

  if (alpha == 0.0 || alpha == 1.0) {
    // The belief collapses to a point mass and the entropy rate is the
    // chain's own: pi0 h(q01) + pi1 h(q10).
    return {markov_entropy_rate(chain), 0.0, samples, burnin, chains, seed};
  }
  stationary(chain);  // reject degenerate chains up front

  std::vector<ChainStats> stats(chains);
  parallel_for_index(
      static_cast<std::size_t>(chains),
      [&](std::size_t c) {
        stats[c] = run_chain(chain, alpha, samples, burnin,
                             CounterRng(seed, c));
      },
      max_threads);

  double estimate = 0.0;
  for (const auto& s : stats) estimate += s.mean;
  estimate /= static_cast<double>(chains);

  double ci;
  if (chains >= 8) {
    std::vector<double> means;
    means.reserve(chains);
    for (const auto& s : stats) means.push_back(s.mean);
    ci = ci_from_means(means);
  } else {
    // Too few chains for a between-chain variance; fall back to batch means,
    // which absorb the autocorrelation of the log-loss sequence.
    std::vector<double> means;
    means.reserve(static_cast<std::size_t>(chains) * kBatchesPerChain);
    for (const auto& s : stats) {
      means.insert(means.end(), s.batch_means.begin(), s.batch_means.end());
    }
    ci = ci_from_means(means);
  }
  return {estimate, ci, samples, burnin, chains, seed};
}

double sequence_log2_prob(const ChainSpec& chain, double alpha,
                          std::span<const std::uint8_t> y) {
  detail::require_unit_interval(alpha, "alpha");
  const double q01 = chain.q01();
  const double q10 = chain.q10();
  double belief = chain.pi1();
  double logp = 0.0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    const double pred1 =
        t == 0 ? belief : belief * (1.0 - q10) + (1.0 - belief) * q01;
    const double py1 = pred1 * (1.0 - alpha) + (1.0 - pred1) * alpha;
    double py = y[t] ? py1 : 1.0 - py1;
    py = std::clamp(py, 1e-300, 1.0);
    belief = (y[t] ? pred1 * (1.0 - alpha) : pred1 * alpha) / py;
    logp += std::log2(py);
  }
  return logp;
}

}  // namespace hmmeb
