#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hmmeb/entropy.hpp"
#include "hmmeb/errors.hpp"
#include "hmmeb/markov.hpp"

using namespace hmmeb;

TEST_CASE("stationary distribution") {
  SUBCASE("symmetric chain") {
    const auto [pi0, pi1] = stationary(ChainSpec::symmetric(0.23));
    CHECK(pi0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pi1 == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("hand-solved pi P = pi") {
    const auto [pi0, pi1] = stationary(ChainSpec(0.3, 0.6));
    CHECK(pi0 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(pi1 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  }
  SUBCASE("RLL chain: pi0 = 1/(1+q)") {
    const auto chain = ChainSpec::rll(0.2);
    CHECK(chain.pi0() == doctest::Approx(1.0 / 1.2).epsilon(1e-14));
    CHECK(chain.pi1() == doctest::Approx(0.2 / 1.2).epsilon(1e-14));
  }
  SUBCASE("degenerate chain rejected") {
    CHECK_THROWS_AS(stationary(ChainSpec(0.0, 0.0)), DegenerateChainError);
  }
  SUBCASE("fixed point of P within 1e-12") {
    for (double q01 : {0.1, 0.45, 1.0}) {
      for (double q10 : {0.05, 0.7, 1.0}) {
        const ChainSpec c(q01, q10);
        const auto [pi0, pi1] = stationary(c);
        CHECK(pi0 + pi1 == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(pi0 * (1 - q01) + pi1 * q10 == doctest::Approx(pi0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("k_step_symmetric") {
  CHECK(k_step_symmetric(0.37, 1) == doctest::Approx(0.37).epsilon(1e-15));
  CHECK(k_step_symmetric(0.5, 7) == 0.5);
  // equals convolve(0.11, 0.11): cross-module consistency
  CHECK(k_step_symmetric(0.11, 2) == doctest::Approx(0.1958).epsilon(1e-14));

  SUBCASE("matches k-fold iterated convolution") {
    for (double q : {0.11, 0.3, 0.49}) {
      double c = q;
      for (long k = 1; k <= 32; ++k) {
        CHECK(std::fabs(k_step_symmetric(q, k) - c) <= 1e-12);
        c = convolve(c, q);
      }
    }
  }
}

TEST_CASE("k_step_general closed form") {
  SUBCASE("k = 1 is P itself") {
    const ChainSpec c(0.3, 0.6);
    const auto m = k_step_general(c, 1);
    CHECK(m(0, 1) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(m(1, 0) == doctest::Approx(0.6).epsilon(1e-14));
  }
  SUBCASE("RLL q=0.2, k=2: paper's closed form and explicit squaring") {
    const auto m = k_step_general(ChainSpec::rll(0.2), 2);
    // q^{#k}_{01} = (q + (-q)^{k+1})/(1+q), q^{#k}_{10} = (1-(-q)^k)/(1+q)
    CHECK(m(0, 1) == doctest::Approx(0.16).epsilon(1e-14));
    CHECK(m(1, 0) == doctest::Approx(0.8).epsilon(1e-14));
  }
  SUBCASE("symmetric chain specializes to k_step_symmetric") {
    for (long k : {1L, 3L, 10L}) {
      const auto m = k_step_general(ChainSpec::symmetric(0.11), k);
      CHECK(m(0, 1) == doctest::Approx(k_step_symmetric(0.11, k)).epsilon(1e-13));
    }
  }
  SUBCASE("agrees with matrix power, rows sum to 1") {
    for (double q01 : {0.05, 0.3, 0.95}) {
      for (double q10 : {0.1, 0.6, 1.0}) {
        const ChainSpec c(q01, q10);
        for (long k = 1; k <= 64; ++k) {
          const auto closed = k_step_general(c, k);
          const auto power = k_step_matrix_power(c, k);
          for (int i = 0; i < 2; ++i) {
            CHECK(std::fabs(closed(i, 0) + closed(i, 1) - 1.0) <= 1e-12);
            for (int j = 0; j < 2; ++j) {
              CHECK(std::fabs(closed(i, j) - power(i, j)) <= 1e-12);
            }
          }
        }
      }
    }
  }
  SUBCASE("Chapman-Kolmogorov") {
    const ChainSpec c(0.25, 0.55);
    for (long j : {1L, 4L}) {
      for (long k : {2L, 9L}) {
        const auto a = k_step_general(c, j);
        const auto b = k_step_general(c, k);
        const auto ab = k_step_general(c, j + k);
        for (int i = 0; i < 2; ++i) {
          for (int l = 0; l < 2; ++l) {
            const double prod = a(i, 0) * b(0, l) + a(i, 1) * b(1, l);
            CHECK(std::fabs(prod - ab(i, l)) <= 1e-12);
          }
        }
      }
    }
  }
  SUBCASE("ergodic limit with geometric ratio |decay|") {
    const ChainSpec c(0.3, 0.5);
    const double pi1 = c.pi1();
    const double r = std::fabs(c.decay());
    for (long k : {5L, 10L, 20L}) {
      CHECK(std::fabs(k_step_general(c, k)(0, 1) - pi1) <=
            std::pow(r, k) + 1e-14);
    }
  }
}

TEST_CASE("sample_path") {
  SUBCASE("degenerate chain yields a constant sequence") {
    const auto path = sample_path(ChainSpec(0.0, 0.0), 100, 7);
    for (auto b : path) CHECK(b == path[0]);
  }
  SUBCASE("RLL path has no two consecutive ones") {
    const auto path = sample_path(ChainSpec::rll(0.45), 20000, 3);
    for (std::size_t i = 1; i < path.size(); ++i) {
      CHECK(!(path[i - 1] == 1 && path[i] == 1));
    }
  }
  SUBCASE("deterministic given seed and stream") {
    const auto a = sample_path(ChainSpec::symmetric(0.3), 1000, 42, 5);
    const auto b = sample_path(ChainSpec::symmetric(0.3), 1000, 42, 5);
    const auto c = sample_path(ChainSpec::symmetric(0.3), 1000, 42, 6);
    CHECK(a == b);
    CHECK(a != c);
  }
  SUBCASE("empirical transition frequency within 3 sigma") {
    const std::size_t n = 1'000'000;
    const double q = 0.11;
    const auto path = sample_path(ChainSpec::symmetric(q), n, 12345);
    std::size_t flips = 0;
    for (std::size_t i = 1; i < n; ++i) flips += path[i] != path[i - 1];
    const double freq = static_cast<double>(flips) / (n - 1);
    const double sigma = std::sqrt(q * (1 - q) / (n - 1));
    CHECK(std::fabs(freq - q) <= 3 * sigma);
  }
}

TEST_CASE("markov_entropy_rate") {
  CHECK(markov_entropy_rate(ChainSpec::symmetric(0.11)) ==
        doctest::Approx(binary_entropy(0.11)).epsilon(1e-14));
  // deterministic alternation carries no entropy
  CHECK(markov_entropy_rate(ChainSpec(1.0, 1.0)) == 0.0);
}
