#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace hmmeb {

/// Two-state stationary Markov chain with transition matrix
///   P = [[1-q01, q01], [q10, 1-q10]].
/// Immutable after construction.
class ChainSpec {
 public:
  ChainSpec(double q01, double q10);

  static ChainSpec symmetric(double q) { return ChainSpec(q, q); }
  /// (1,inf)-RLL chain: q01 = q, q10 = 1 (no two consecutive ones).
  static ChainSpec rll(double q) { return ChainSpec(q, 1.0); }

  double q01() const { return q01_; }
  double q10() const { return q10_; }
  bool is_symmetric() const { return q01_ == q10_; }
  bool is_degenerate() const { return q01_ == 0.0 && q10_ == 0.0; }

  /// Second eigenvalue of P; the k-step matrices relax to the stationary
  /// distribution like decay()^k.
  double decay() const { return 1.0 - q01_ - q10_; }

  /// Stationary probabilities (q10, q01)/(q01+q10). Throws
  /// DegenerateChainError when q01 = q10 = 0.
  double pi0() const;
  double pi1() const;

 private:
  double q01_, q10_;
};

/// Stationary distribution (pi0, pi1); throws DegenerateChainError for the
/// all-frozen chain q01 = q10 = 0.
std::pair<double, double> stationary(const ChainSpec& chain);

/// Entropy rate of the chain itself: pi0 h(q01) + pi1 h(q10).
double markov_entropy_rate(const ChainSpec& chain);

/// k-step transition probabilities (P^k)_{ij}.
struct KStepProb {
  long k;
  double p[2][2];
  double operator()(int i, int j) const { return p[i][j]; }
};

/// k-fold self-convolution of q: (1 - (1-2q)^k) / 2.
double k_step_symmetric(double q, long k);

/// Eigenvalue closed form for P^k (eigenvalues 1 and decay()).
KStepProb k_step_general(const ChainSpec& chain, long k);

/// Iterated 2x2 matrix multiplication; cross-check for k_step_general.
KStepProb k_step_matrix_power(const ChainSpec& chain, long k);

/// Stationary path sample X_1..X_n; deterministic given (seed, stream).
/// A degenerate chain keeps its initial state, drawn from a fair coin.
std::vector<std::uint8_t> sample_path(const ChainSpec& chain, std::size_t n,
                                      std::uint64_t seed,
                                      std::uint64_t stream = 0);

}  // namespace hmmeb
