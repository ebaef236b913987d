// hmmeb: entropy-rate lower bounds for binary hidden Markov processes.
//
// Subcommands: bound, sweep, estimate, verify, expand. Exit codes: 0 success,
// 1 verification failure, 2 invalid input, 3 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmmeb/bounds.hpp"
#include "hmmeb/entropy.hpp"
#include "hmmeb/estimator.hpp"
#include "hmmeb/markov.hpp"
#include "hmmeb/parallel.hpp"
#include "verify_suites.hpp"

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChainFlags {
  bool symmetric = false;
  bool rll = false;
  double q = NAN;
  double q01 = NAN;
  double q10 = NAN;
};

void add_chain_flags(CLI::App* cmd, ChainFlags& f) {
  cmd->add_flag("--symmetric", f.symmetric,
                "symmetric chain (q01 = q10 = --q)");
  cmd->add_flag("--rll", f.rll, "(1,inf)-RLL chain (q01 = --q, q10 = 1)");
  cmd->add_option("--q", f.q, "transition probability for --symmetric/--rll");
  cmd->add_option("--q01", f.q01, "0->1 transition probability");
  cmd->add_option("--q10", f.q10, "1->0 transition probability");
}

hmmeb::ChainSpec make_chain(const ChainFlags& f) {
  if (f.symmetric && f.rll) {
    throw std::invalid_argument("--symmetric and --rll are exclusive");
  }
  if (f.symmetric || f.rll) {
    if (std::isnan(f.q)) {
      throw std::invalid_argument("--q is required with --symmetric/--rll");
    }
    return f.symmetric ? hmmeb::ChainSpec::symmetric(f.q)
                       : hmmeb::ChainSpec::rll(f.q);
  }
  if (std::isnan(f.q01) || std::isnan(f.q10)) {
    throw std::invalid_argument(
        "chain requires --symmetric/--rll with --q, or both --q01 and --q10");
  }
  return {f.q01, f.q10};
}

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// ---------------------------------------------------------------- bound ----

int cmd_bound(const ChainFlags& flags, double alpha,
              const std::string& format) {
  const auto chain = make_chain(flags);
  const auto report = hmmeb::bound_report(chain, alpha);
  json j = {{"q01", chain.q01()},
            {"q10", chain.q10()},
            {"alpha", alpha},
            {"mgl", report.mgl},
            {"new_bound", report.new_bound},
            {"beta", report.beta},
            {"single_letter_ub", report.single_letter_ub}};
  if (report.has_gamma) {
    j["gamma"] = report.gamma;
    j["rll_bound"] = report.rll;
  }
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::printf("%-18s %s\n", "mgl", fmt12(report.mgl).c_str());
  std::printf("%-18s %s\n", "new_bound", fmt12(report.new_bound).c_str());
  std::printf("%-18s %s\n", "beta", fmt12(report.beta).c_str());
  if (report.has_gamma) {
    std::printf("%-18s %s\n", "gamma", fmt12(report.gamma).c_str());
    std::printf("%-18s %s\n", "rll_bound", fmt12(report.rll).c_str());
  }
  std::printf("%-18s %s\n", "single_letter_ub",
              fmt12(report.single_letter_ub).c_str());
  return 0;
}

// ---------------------------------------------------------------- sweep ----

struct SweepOpts {
  ChainFlags chain;
  std::string swept;  // "q" or "alpha"
  double start = NAN, stop = NAN, step = NAN;
  double alpha = NAN;  // fixed alpha when sweeping q
  std::vector<std::string> columns;
  std::string out;
  long long samples = 200'000;
  long long burnin = 1'000;
  int chains = 4;
  std::uint64_t seed = 1;
};

const std::vector<std::string> kKnownColumns = {
    "alpha",    "q",         "mgl",      "new_bound", "nonsym_bound",
    "rll_bound", "single_letter_ub", "estimate", "ci"};

void validate_sweep(const SweepOpts& o) {
  if (o.swept != "q" && o.swept != "alpha") {
    throw std::invalid_argument("--sweep must be q or alpha");
  }
  if (!(o.start < o.stop)) throw std::invalid_argument("--start must be < --stop");
  if (!(o.step > 0.0)) throw std::invalid_argument("--step must be > 0");
  if (o.columns.empty()) throw std::invalid_argument("--columns must not be empty");
  for (const auto& c : o.columns) {
    if (std::find(kKnownColumns.begin(), kKnownColumns.end(), c) ==
        kKnownColumns.end()) {
      throw std::invalid_argument("unknown column '" + c + "'");
    }
  }
  if (o.swept == "q") {
    if (!(o.chain.symmetric || o.chain.rll)) {
      throw std::invalid_argument(
          "sweeping q requires --symmetric or --rll");
    }
    if (std::isnan(o.alpha)) {
      throw std::invalid_argument("sweeping q requires a fixed --alpha");
    }
  }
  if (o.out.empty()) throw std::invalid_argument("--out is required");
}

int cmd_sweep(SweepOpts o) {
  validate_sweep(o);
  // Grid by index; no accumulation drift in the swept axis.
  const long count =
      static_cast<long>(std::floor((o.stop - o.start) / o.step + 1e-9)) + 1;

  const bool want_estimate =
      std::find(o.columns.begin(), o.columns.end(), "estimate") !=
          o.columns.end() ||
      std::find(o.columns.begin(), o.columns.end(), "ci") != o.columns.end();

  std::vector<std::string> rows(count);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  hmmeb::parallel_for_index(count, [&](std::size_t i) {
    try {
      const double v = o.start + static_cast<double>(i) * o.step;
      double q, alpha;
      ChainFlags f = o.chain;
      if (o.swept == "q") {
        q = v;
        alpha = o.alpha;
        f.q = v;
      } else {
        alpha = v;
        q = !std::isnan(o.chain.q) ? o.chain.q : o.chain.q01;
      }
      const auto chain = make_chain(f);
      std::optional<hmmeb::EstimateResult> est;
      if (want_estimate) {
        est = hmmeb::estimate_entropy_rate(chain, alpha, o.samples, o.burnin,
                                           o.chains, o.seed + i,
                                           /*max_threads=*/1);
      }
      const auto report = hmmeb::bound_report(chain, alpha);
      std::string line;
      for (std::size_t c = 0; c < o.columns.size(); ++c) {
        const std::string& col = o.columns[c];
        double value;
        if (col == "alpha") {
          value = alpha;
        } else if (col == "q") {
          value = q;
        } else if (col == "mgl") {
          value = report.mgl;
        } else if (col == "new_bound") {
          value = report.new_bound;
        } else if (col == "nonsym_bound") {
          value = hmmeb::nonsymmetric_bound(chain, alpha);
        } else if (col == "rll_bound") {
          if (!report.has_gamma) {
            throw std::invalid_argument(
                "column rll_bound requires an --rll chain");
          }
          value = report.rll;
        } else if (col == "single_letter_ub") {
          value = report.single_letter_ub;
        } else if (col == "estimate") {
          value = est->estimate;
        } else {  // ci
          value = est->ci_halfwidth;
        }
        line += fmt12(value);
        if (c + 1 < o.columns.size()) line += ',';
      }
      rows[i] = std::move(line);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  std::ofstream csv(o.out, std::ios::binary);
  if (!csv) throw IoError("cannot open '" + o.out + "' for writing");
  for (std::size_t c = 0; c < o.columns.size(); ++c) {
    csv << o.columns[c];
    if (c + 1 < o.columns.size()) csv << ',';
  }
  csv << '\n';
  for (const auto& row : rows) csv << row << '\n';
  csv.flush();
  if (!csv) throw IoError("write to '" + o.out + "' failed");

  // Effective-configuration sidecar for reproducibility of figure data.
  json meta = {{"command", "sweep"},
               {"swept", o.swept},
               {"start", o.start},
               {"stop", o.stop},
               {"step", o.step},
               {"rows", count},
               {"columns", o.columns},
               {"samples", o.samples},
               {"burnin", o.burnin},
               {"chains", o.chains},
               {"seed", o.seed},
               {"out", o.out}};
  if (o.chain.symmetric) meta["family"] = "symmetric";
  else if (o.chain.rll) meta["family"] = "rll";
  else meta["family"] = "general";
  if (o.swept == "q") meta["alpha"] = o.alpha;
  else if (!std::isnan(o.chain.q)) meta["q"] = o.chain.q;
  else meta["q01"] = o.chain.q01, meta["q10"] = o.chain.q10;
  std::ofstream side(o.out + ".meta.json", std::ios::binary);
  if (!side) throw IoError("cannot open '" + o.out + ".meta.json'");
  side << meta.dump(2) << '\n';
  if (!side) throw IoError("write to '" + o.out + ".meta.json' failed");
  return 0;
}

// ------------------------------------------------------------- estimate ----

int cmd_estimate(const ChainFlags& flags, double alpha, long long samples,
                 long long burnin, int chains, std::uint64_t seed) {
  const auto chain = make_chain(flags);
  const auto r =
      hmmeb::estimate_entropy_rate(chain, alpha, samples, burnin, chains, seed);
  const json j = {{"estimate", r.estimate}, {"ci", r.ci_halfwidth},
                  {"samples", r.samples},   {"burnin", r.burnin},
                  {"chains", r.chains},     {"seed", r.seed}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

// --------------------------------------------------------------- verify ----

int cmd_verify(const std::string& suite, const std::string& out) {
  const json report = hmmeb::cli::run_verify_suite(suite);
  if (out.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw IoError("cannot open '" + out + "' for writing");
    f << report.dump(2) << "\n";
    if (!f) throw IoError("write to '" + out + "' failed");
  }
  return report.at("pass").get<bool>() ? 0 : 1;
}

// --------------------------------------------------------------- expand ----

int cmd_expand(double q, double alpha) {
  if (std::isnan(q) && std::isnan(alpha)) {
    throw std::invalid_argument("expand requires --q and/or --alpha");
  }
  json j;
  if (!std::isnan(q)) {
    j["q"] = q;
    j["very_noisy_constant"] = hmmeb::very_noisy_constant(q);
    j["rll_very_noisy_deficit"] = hmmeb::rll_very_noisy_deficit(q);
  }
  if (!std::isnan(alpha)) {
    j["alpha"] = alpha;
    j["fast_transitions_deficit"] = hmmeb::fast_transitions_deficit(alpha);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds on the entropy rate of binary hidden Markov "
               "processes (binary Markov chains through a BSC)"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  ChainFlags bound_chain;
  double bound_alpha = NAN;
  std::string bound_format = "table";
  auto* bound = app.add_subcommand("bound", "bounds for one (chain, alpha)");
  add_chain_flags(bound, bound_chain);
  bound->add_option("--alpha", bound_alpha, "BSC crossover probability")
      ->required();
  bound->add_option("--format", bound_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  SweepOpts sweep;
  auto* sw = app.add_subcommand("sweep", "parameter sweep to CSV");
  add_chain_flags(sw, sweep.chain);
  sw->add_option("--sweep", sweep.swept, "swept parameter: q|alpha")
      ->required();
  sw->add_option("--start", sweep.start)->required();
  sw->add_option("--stop", sweep.stop)->required();
  sw->add_option("--step", sweep.step)->required();
  sw->add_option("--alpha", sweep.alpha, "fixed alpha when sweeping q");
  sw->add_option("--columns", sweep.columns,
                 "comma-separated columns from alpha,q,mgl,new_bound,"
                 "nonsym_bound,rll_bound,single_letter_ub,estimate,ci")
      ->delimiter(',');
  sw->add_option("--out", sweep.out, "output CSV path")->required();
  sw->add_option("--samples", sweep.samples);
  sw->add_option("--burnin", sweep.burnin);
  sw->add_option("--chains", sweep.chains);
  sw->add_option("--seed", sweep.seed);

  ChainFlags est_chain;
  double est_alpha = NAN;
  long long est_samples = 1'000'000, est_burnin = 1'000;
  int est_chains = 8;
  std::uint64_t est_seed = 1;
  auto* est = app.add_subcommand("estimate", "Monte Carlo entropy-rate "
                                             "estimate as JSON");
  add_chain_flags(est, est_chain);
  est->add_option("--alpha", est_alpha)->required();
  est->add_option("--samples", est_samples);
  est->add_option("--burnin", est_burnin);
  est->add_option("--chains", est_chains);
  est->add_option("--seed", est_seed);

  std::string verify_suite, verify_out;
  auto* ver = app.add_subcommand("verify", "run an invariant suite");
  ver->add_option("suite", verify_suite,
                  "prop1|prop2|dominance|asymptotics|oracles")
      ->required();
  ver->add_option("--out", verify_out, "write the JSON report here");

  double expand_q = NAN, expand_alpha = NAN;
  auto* exp = app.add_subcommand("expand", "asymptotic deficit constants");
  exp->add_option("--q", expand_q);
  exp->add_option("--alpha", expand_alpha);

  try {
    app.parse(argc, argv);
    if (*bound) return cmd_bound(bound_chain, bound_alpha, bound_format);
    if (*sw) return cmd_sweep(sweep);
    if (*est) {
      return cmd_estimate(est_chain, est_alpha, est_samples, est_burnin,
                          est_chains, est_seed);
    }
    if (*ver) return cmd_verify(verify_suite, verify_out);
    if (*exp) return cmd_expand(expand_q, expand_alpha);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
