#pragma once

#include "hmmeb/markov.hpp"

namespace hmmeb {

enum class ExactMethod { forward, brute };
enum class ProjectedMethod { closed, brute };

/// Cover-Thomas conditional-entropy sandwich at block length n:
/// lower = H(Y_n | Y^{n-1}, X_1) <= entropy rate <= upper = H(Y_n | Y^{n-1}).
struct ExactEntropyResult {
  int n;
  double joint_entropy;  // H(Y^n)
  double upper;
  double lower;
};

struct ProjectedEntropyResult {
  long n;
  double lambda;
  double normalized;  // H(X_S|S) / (lambda n)
};

/// Exact H(Y_1..Y_n) for the chain observed through BSC(alpha).
///   forward: per output sequence, a two-state forward recursion; O(2^n)
///            total over the output prefix tree, n <= 24.
///   brute:   full enumeration over input and output sequences, O(n 4^n),
///            n <= 12; the independent oracle for the forward method.
double exact_output_entropy(const ChainSpec& chain, double alpha, int n,
                            ExactMethod method = ExactMethod::forward);

/// H(Y^n | X_1) = sum_x pi_x H(Y^n | X_1 = x), forward method with the
/// initial state pinned.
double exact_output_entropy_pinned(const ChainSpec& chain, double alpha,
                                   int n);

/// Both sandwich bounds at block length n (2 <= n <= 20).
ExactEntropyResult sandwich_bounds(const ChainSpec& chain, double alpha,
                                   int n);

/// Exact finite-n H(X_S|S)/(lambda n) for S sampled i.i.d. with rate lambda.
///   closed: O(n) gap-count decomposition, valid at any n.
///   brute:  2^n subset enumeration (n <= 14); the independent oracle.
ProjectedEntropyResult projected_entropy_finite(
    const ChainSpec& chain, double lambda, long n,
    ProjectedMethod method = ProjectedMethod::closed);

/// Finite-n slack of the strengthened MGL inequality:
/// H(Y^n) - n h(alpha * h^{-1}(H(X_S|S)/(lambda n))), lambda = (1-2*alpha)^2.
double verify_prop1(const ChainSpec& chain, double alpha, int n);

}  // namespace hmmeb
