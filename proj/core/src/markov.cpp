#include "hmmeb/markov.hpp"

#include <cmath>
#include <stdexcept>

#include "hmmeb/entropy.hpp"
#include "hmmeb/errors.hpp"
#include "hmmeb/rng.hpp"

namespace hmmeb {

ChainSpec::ChainSpec(double q01, double q10) : q01_(q01), q10_(q10) {
  detail::require_unit_interval(q01, "q01");
  detail::require_unit_interval(q10, "q10");
}

double ChainSpec::pi0() const { return stationary(*this).first; }
double ChainSpec::pi1() const { return stationary(*this).second; }

std::pair<double, double> stationary(const ChainSpec& chain) {
  if (chain.is_degenerate()) {
    throw DegenerateChainError(
        "q01 = q10 = 0: every distribution is stationary");
  }
  const double s = chain.q01() + chain.q10();
  return {chain.q10() / s, chain.q01() / s};
}

double markov_entropy_rate(const ChainSpec& chain) {
  const auto [pi0, pi1] = stationary(chain);
  return pi0 * binary_entropy(chain.q01()) + pi1 * binary_entropy(chain.q10());
}

double k_step_symmetric(double q, long k) {
  detail::require_unit_interval(q, "q");
  if (k < 1) throw std::domain_error("k must be >= 1");
  return 0.5 * (1.0 - std::pow(1.0 - 2.0 * q, static_cast<double>(k)));
}

KStepProb k_step_general(const ChainSpec& chain, long k) {
  if (k < 1) throw std::domain_error("k must be >= 1");
  const auto [pi0, pi1] = stationary(chain);
  const double rk = std::pow(chain.decay(), static_cast<double>(k));
  KStepProb out;
  out.k = k;
  out.p[0][1] = pi1 * (1.0 - rk);
  out.p[1][0] = pi0 * (1.0 - rk);
  out.p[0][0] = 1.0 - out.p[0][1];
  out.p[1][1] = 1.0 - out.p[1][0];
  return out;
}

KStepProb k_step_matrix_power(const ChainSpec& chain, long k) {
  if (k < 1) throw std::domain_error("k must be >= 1");
  if (chain.is_degenerate()) {
    throw DegenerateChainError("matrix power of a degenerate chain");
  }
  double p[2][2] = {{1.0 - chain.q01(), chain.q01()},
                    {chain.q10(), 1.0 - chain.q10()}};
  double acc[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
  for (long i = 0; i < k; ++i) {
    double next[2][2];
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        next[a][b] = acc[a][0] * p[0][b] + acc[a][1] * p[1][b];
      }
    }
    acc[0][0] = next[0][0];
    acc[0][1] = next[0][1];
    acc[1][0] = next[1][0];
    acc[1][1] = next[1][1];
  }
  KStepProb out;
  out.k = k;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) out.p[a][b] = acc[a][b];
  }
  return out;
}

std::vector<std::uint8_t> sample_path(const ChainSpec& chain, std::size_t n,
                                      std::uint64_t seed,
                                      std::uint64_t stream) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  CounterRng rng(seed, stream);
  std::vector<std::uint8_t> path(n);
  // The stationary law is unique except for the all-frozen chain, which just
  // repeats whatever state it starts from.
  const double pi1 = chain.is_degenerate() ? 0.5 : chain.pi1();
  std::uint8_t x = rng.bernoulli(pi1) ? 1 : 0;
  path[0] = x;
  for (std::size_t i = 1; i < n; ++i) {
    const double flip = x ? chain.q10() : chain.q01();
    if (rng.bernoulli(flip)) x ^= 1;
    path[i] = x;
  }
  return path;
}

}  // namespace hmmeb
