#include "verify_suites.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hmmeb/bounds.hpp"
#include "hmmeb/entropy.hpp"
#include "hmmeb/markov.hpp"
#include "hmmeb/oracle.hpp"

namespace hmmeb::cli {

namespace {

using nlohmann::json;

struct Suite {
  json checks = json::array();
  bool pass = true;

  // slack >= -tolerance passes; slack is "how far on the safe side".
  void check(const std::string& name, double slack, double tolerance) {
    const bool ok = slack >= -tolerance;
    pass = pass && ok;
    checks.push_back(
        {{"name", name}, {"slack", slack}, {"tolerance", tolerance},
         {"pass", ok}});
  }

  json report(const std::string& suite) const {
    return {{"suite", suite}, {"pass", pass}, {"checks", checks}};
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

json suite_dominance() {
  Suite s;
  for (int iq = 1; iq <= 24; ++iq) {
    const double q = 0.02 * iq;
    for (int ia = 1; ia <= 24; ++ia) {
      const double alpha = 0.02 * ia;
      const double gap =
          samorodnitsky_bound(q, alpha) - mgl_bound(q, alpha);
      s.check("new_bound-mgl q=" + fmt(q) + " alpha=" + fmt(alpha), gap,
              1e-12);
    }
  }
  return s.report("dominance");
}

json suite_prop1() {
  Suite s;
  const double grid[] = {0.02, 0.24, 0.48};
  for (double q : grid) {
    for (double alpha : grid) {
      const auto chain = ChainSpec::symmetric(q);
      for (int n : {4, 8, 12, 16}) {
        const double slack = verify_prop1(chain, alpha, n);
        s.check("prop1 q=" + fmt(q) + " alpha=" + fmt(alpha) +
                    " n=" + std::to_string(n),
                slack, 1e-9);
      }
    }
  }
  return s.report("prop1");
}

json suite_prop2() {
  Suite s;
  for (double q : {0.11, 0.3}) {
    for (double lambda : {0.25, 0.6084}) {
      const auto chain = ChainSpec::symmetric(q);
      const double beta = beta_symmetric(q, lambda);
      double prev_gap = 2.0;
      for (long n : {10L, 100L, 1000L}) {
        const double gap = std::fabs(
            projected_entropy_finite(chain, lambda, n).normalized - beta);
        s.check("prop2 nonincreasing q=" + fmt(q) + " lambda=" + fmt(lambda) +
                    " n=" + std::to_string(n),
                prev_gap - gap, 0.0);
        prev_gap = gap;
      }
      s.check("prop2 gap(n=1000)<1e-2 q=" + fmt(q) + " lambda=" + fmt(lambda),
              1e-2 - prev_gap, 0.0);
    }
  }
  return s.report("prop2");
}

json suite_asymptotics() {
  Suite s;
  for (double q : {0.15, 0.25, 0.35}) {
    const double constant = very_noisy_constant(q);
    double prev_err = 1.0;
    for (double eps : {0.05, 0.02, 0.01}) {
      const double ratio =
          (1.0 - samorodnitsky_bound(q, 0.5 - eps)) / (eps * eps * eps * eps);
      const double rel = std::fabs(ratio / constant - 1.0);
      s.check("very_noisy err nonincreasing q=" + fmt(q) + " eps=" + fmt(eps),
              prev_err - rel, 0.0);
      prev_err = rel;
    }
    s.check("very_noisy rel err < 3% q=" + fmt(q) + " eps=0.01",
            0.03 - prev_err, 0.0);
  }
  for (double alpha : {0.11, 0.25}) {
    const double deficit = fast_transitions_deficit(alpha);
    const double eps = 0.01;
    const double ratio =
        (1.0 - samorodnitsky_bound(0.5 - eps, alpha)) / (eps * eps);
    s.check("fast_transitions rel err < 3% alpha=" + fmt(alpha),
            0.03 - std::fabs(ratio / deficit - 1.0), 0.0);
  }
  return s.report("asymptotics");
}

json suite_oracles() {
  Suite s;
  // forward vs brute H(Y^n)
  for (double q01 : {0.11, 0.45}) {
    for (double q10 : {0.11, 0.8}) {
      const ChainSpec chain(q01, q10);
      for (double alpha : {0.11, 0.3}) {
        for (int n : {4, 8}) {
          const double diff = std::fabs(
              exact_output_entropy(chain, alpha, n, ExactMethod::forward) -
              exact_output_entropy(chain, alpha, n, ExactMethod::brute));
          s.check("H(Y^n) forward=brute q01=" + fmt(q01) + " q10=" +
                      fmt(q10) + " alpha=" + fmt(alpha) +
                      " n=" + std::to_string(n),
                  1e-10 - diff, 0.0);
        }
      }
    }
  }
  // closed vs brute projected entropy
  for (const ChainSpec& chain :
       {ChainSpec::symmetric(0.11), ChainSpec::rll(0.2)}) {
    for (double lambda : {0.25, 0.6084}) {
      const double diff = std::fabs(
          projected_entropy_finite(chain, lambda, 10,
                                   ProjectedMethod::closed).normalized -
          projected_entropy_finite(chain, lambda, 10,
                                   ProjectedMethod::brute).normalized);
      s.check("projected closed=brute q01=" + fmt(chain.q01()) + " q10=" +
                  fmt(chain.q10()) + " lambda=" + fmt(lambda),
              1e-10 - diff, 0.0);
    }
  }
  // k-step closed form vs matrix power
  for (double q01 : {0.11, 0.45}) {
    for (double q10 : {0.2, 1.0}) {
      const ChainSpec chain(q01, q10);
      double worst = 0.0;
      for (long k = 1; k <= 64; ++k) {
        const auto closed = k_step_general(chain, k);
        const auto power = k_step_matrix_power(chain, k);
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            worst = std::max(worst, std::fabs(closed(i, j) - power(i, j)));
          }
        }
      }
      s.check("k_step closed=power q01=" + fmt(q01) + " q10=" + fmt(q10),
              1e-12 - worst, 0.0);
    }
  }
  return s.report("oracles");
}

}  // namespace

json run_verify_suite(const std::string& suite) {
  if (suite == "dominance") return suite_dominance();
  if (suite == "prop1") return suite_prop1();
  if (suite == "prop2") return suite_prop2();
  if (suite == "asymptotics") return suite_asymptotics();
  if (suite == "oracles") return suite_oracles();
  throw std::invalid_argument(
      "unknown suite '" + suite +
      "' (expected prop1|prop2|dominance|asymptotics|oracles)");
}

}  // namespace hmmeb::cli
