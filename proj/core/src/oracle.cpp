#include "hmmeb/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmmeb/entropy.hpp"
#include "hmmeb/errors.hpp"

namespace hmmeb {

namespace {

constexpr int kForwardCap = 24;
constexpr int kBruteCap = 12;
constexpr int kSandwichCap = 20;
constexpr int kProjectedBruteCap = 14;

void require_size(int n, int lo, int cap, const char* what) {
  if (n < lo || n > cap) {
    throw SizeError(std::string(what) + ": n must lie in [" +
                    std::to_string(lo) + "," + std::to_string(cap) +
                    "], got " + std::to_string(n));
  }
}

struct ForwardCtx {
  double P[2][2];  // transition
  double e[2][2];  // e[x][y] = P(y|x)
  int n;
  double acc;
};

// DFS over output sequences; (f0, f1) are joint masses P(y^depth, X_depth=x),
// rescaled by their sum each level with the log of the scale accumulated so
// that P(y^n) = 2^logp at the leaves.
void forward_dfs(ForwardCtx& ctx, int depth, double f0, double f1,
                 double logp) {
  const double s = f0 + f1;
  if (s <= 0.0) return;  // zero-probability branch, contributes 0 log 0 = 0
  logp += std::log2(s);
  if (depth == ctx.n) {
    ctx.acc -= std::exp2(logp) * logp;
    return;
  }
  f0 /= s;
  f1 /= s;
  const double m0 = f0 * ctx.P[0][0] + f1 * ctx.P[1][0];
  const double m1 = f0 * ctx.P[0][1] + f1 * ctx.P[1][1];
  for (int y = 0; y < 2; ++y) {
    forward_dfs(ctx, depth + 1, m0 * ctx.e[0][y], m1 * ctx.e[1][y], logp);
  }
}

double forward_entropy(const ChainSpec& chain, double alpha, int n,
                       double init0, double init1) {
  ForwardCtx ctx{{{1.0 - chain.q01(), chain.q01()},
                  {chain.q10(), 1.0 - chain.q10()}},
                 {{1.0 - alpha, alpha}, {alpha, 1.0 - alpha}},
                 n,
                 0.0};
  for (int y = 0; y < 2; ++y) {
    forward_dfs(ctx, 1, init0 * ctx.e[0][y], init1 * ctx.e[1][y], 0.0);
  }
  return ctx.acc;
}

double brute_entropy(const ChainSpec& chain, double alpha, int n) {
  const auto [pi0, pi1] = stationary(chain);
  const double P[2][2] = {{1.0 - chain.q01(), chain.q01()},
                          {chain.q10(), 1.0 - chain.q10()}};
  const std::uint32_t size = 1u << n;
  std::vector<double> px(size);
  for (std::uint32_t x = 0; x < size; ++x) {
    double p = (x & 1u) ? pi1 : pi0;
    for (int i = 1; i < n; ++i) {
      p *= P[(x >> (i - 1)) & 1u][(x >> i) & 1u];
    }
    px[x] = p;
  }
  std::vector<double> flip(n + 1);
  for (int d = 0; d <= n; ++d) {
    flip[d] = std::pow(alpha, d) * std::pow(1.0 - alpha, n - d);
  }
  double acc = 0.0;
  for (std::uint32_t y = 0; y < size; ++y) {
    double py = 0.0;
    for (std::uint32_t x = 0; x < size; ++x) {
      py += px[x] * flip[std::popcount(x ^ y)];
    }
    if (py > 0.0) acc -= py * std::log2(py);
  }
  return acc;
}

}  // namespace

double exact_output_entropy(const ChainSpec& chain, double alpha, int n,
                            ExactMethod method) {
  detail::require_unit_interval(alpha, "alpha");
  if (method == ExactMethod::brute) {
    require_size(n, 1, kBruteCap, "exact_output_entropy(brute)");
    return brute_entropy(chain, alpha, n);
  }
  require_size(n, 1, kForwardCap, "exact_output_entropy(forward)");
  const auto [pi0, pi1] = stationary(chain);
  return forward_entropy(chain, alpha, n, pi0, pi1);
}

double exact_output_entropy_pinned(const ChainSpec& chain, double alpha,
                                   int n) {
  detail::require_unit_interval(alpha, "alpha");
  require_size(n, 1, kForwardCap, "exact_output_entropy_pinned");
  const auto [pi0, pi1] = stationary(chain);
  return pi0 * forward_entropy(chain, alpha, n, 1.0, 0.0) +
         pi1 * forward_entropy(chain, alpha, n, 0.0, 1.0);
}

ExactEntropyResult sandwich_bounds(const ChainSpec& chain, double alpha,
                                   int n) {
  require_size(n, 2, kSandwichCap, "sandwich_bounds");
  const double hn = exact_output_entropy(chain, alpha, n);
  const double hn1 = exact_output_entropy(chain, alpha, n - 1);
  const double cn = exact_output_entropy_pinned(chain, alpha, n);
  const double cn1 = exact_output_entropy_pinned(chain, alpha, n - 1);
  return {n, hn, hn - hn1, cn - cn1};
}

ProjectedEntropyResult projected_entropy_finite(const ChainSpec& chain,
                                                double lambda, long n,
                                                ProjectedMethod method) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw std::domain_error("lambda must lie in (0,1]");
  }
  if (n < 1) throw std::domain_error("n must be >= 1");
  const auto [pi0, pi1] = stationary(chain);
  const double h1 = binary_entropy(pi1);
  const double r = chain.decay();

  // H(X_{g+1} | X_1) per gap length g.
  auto step_entropy = [&, pi0 = pi0, pi1 = pi1](double rg) {
    return pi0 * binary_entropy(std::clamp(pi1 * (1.0 - rg), 0.0, 1.0)) +
           pi1 * binary_entropy(std::clamp(pi0 * (1.0 - rg), 0.0, 1.0));
  };

  if (method == ProjectedMethod::closed) {
    // Expected gap-pair counts: E[N_g] = (n-g) lambda^2 (1-lambda)^{g-1},
    // plus the nonempty-subset probability for the first selected element.
    double total = (1.0 - std::pow(1.0 - lambda, static_cast<double>(n))) * h1;
    double w = lambda * lambda;  // lambda^2 (1-lambda)^{g-1}
    double rg = 1.0;
    for (long g = 1; g < n; ++g) {
      rg *= r;
      total += static_cast<double>(n - g) * w * step_entropy(rg);
      w *= 1.0 - lambda;
      if (w * static_cast<double>(n) < 1e-18) break;  // negligible tail
    }
    return {n, lambda, total / (lambda * static_cast<double>(n))};
  }

  if (n > kProjectedBruteCap) {
    throw SizeError("projected_entropy_finite(brute): n must be <= " +
                    std::to_string(kProjectedBruteCap));
  }
  std::vector<double> hstep(n);  // hstep[g] = H(X_{g+1}|X_1)
  {
    double rg = 1.0;
    for (long g = 1; g < n; ++g) {
      rg *= r;
      hstep[g] = step_entropy(rg);
    }
  }
  const std::uint32_t size = 1u << n;
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    const int m = std::popcount(mask);
    const double weight =
        std::pow(lambda, m) * std::pow(1.0 - lambda, static_cast<double>(n - m));
    if (mask == 0) continue;  // H of the empty projection is 0
    double hs = h1;  // chain rule over the ordered selected indices
    int prev = -1;
    for (int i = 0; i < n; ++i) {
      if (!((mask >> i) & 1u)) continue;
      if (prev >= 0) hs += hstep[i - prev];
      prev = i;
    }
    total += weight * hs;
  }
  return {n, lambda, total / (lambda * static_cast<double>(n))};
}

double verify_prop1(const ChainSpec& chain, double alpha, int n) {
  require_size(n, 1, kSandwichCap, "verify_prop1");
  const double lambda = (1.0 - 2.0 * alpha) * (1.0 - 2.0 * alpha);
  const double hy = exact_output_entropy(chain, alpha, n);
  if (lambda == 0.0) return hy - n;  // phi(t) = 1 at alpha = 1/2
  const double projected =
      std::min(1.0, projected_entropy_finite(chain, lambda, n).normalized);
  return hy - n * mgl_phi(projected, alpha);
}

}  // namespace hmmeb
