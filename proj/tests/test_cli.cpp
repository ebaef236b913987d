// Exercises the installed command surface end to end: exit codes, JSON
// shapes, CSV validation. The CLI binary path comes from HMMEB_CLI.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string cli_path() {
  const char* p = std::getenv("HMMEB_CLI");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
    out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("bound subcommand") {
  const auto r = run("bound --symmetric --q 0.11 --alpha 0.11 --format json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["mgl"].get<double>() == doctest::Approx(0.713448).epsilon(1e-5));
  CHECK(j["new_bound"].get<double>() >= j["mgl"].get<double>());

  const auto rll = run("bound --rll --q 1.0 --alpha 0.3 --format json");
  CHECK(rll.exit_code == 0);
  CHECK(json::parse(rll.out)["rll_bound"].get<double>() ==
        doctest::Approx(0.8812908992306927).epsilon(1e-10));  // h(0.3)

  const auto iid = run("bound --symmetric --q 0.5 --alpha 0.2 --format json");
  const json ji = json::parse(iid.out);
  for (const char* k : {"mgl", "new_bound", "single_letter_ub"}) {
    CHECK(ji[k].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("invalid input exits 2 naming the parameter") {
  CHECK(run("bound --symmetric --q 1.5 --alpha 0.11").exit_code == 2);
  CHECK(run("bound --alpha 0.11").exit_code == 2);
  CHECK(run("bound --symmetric --q 0.2 --alpha 2.0").exit_code == 2);
}

TEST_CASE("sweep validation") {
  const auto tmp = std::filesystem::temp_directory_path() / "hmmeb_cli_test";
  std::filesystem::create_directories(tmp);
  const std::string out = (tmp / "s.csv").string();
  // empty column list
  CHECK(run("sweep --symmetric --sweep q --start 0.1 --stop 0.3 --step 0.1 "
            "--alpha 0.11 --out " + out).exit_code == 2);
  // bad range
  CHECK(run("sweep --symmetric --sweep q --start 0.3 --stop 0.1 --step 0.1 "
            "--alpha 0.11 --columns q,mgl --out " + out).exit_code == 2);
  // unwritable path
  CHECK(run("sweep --symmetric --sweep q --start 0.1 --stop 0.3 --step 0.1 "
            "--alpha 0.11 --columns q,mgl --out /nonexistent/dir/x.csv")
            .exit_code == 3);
  // a valid small sweep: header + 3 rows, bounds ordered below the UB
  const auto ok = run(
      "sweep --symmetric --sweep q --start 0.1 --stop 0.3 --step 0.1 "
      "--alpha 0.11 --columns q,mgl,new_bound,single_letter_ub --out " + out);
  CHECK(ok.exit_code == 0);
  std::ifstream csv(out);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "q,mgl,new_bound,single_letter_ub");
  int rows = 0;
  std::string line;
  while (std::getline(csv, line)) {
    double q, mgl, nb, ub;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &q, &mgl, &nb,
                        &ub) == 4);
    CHECK(mgl <= nb + 1e-12);
    CHECK(nb <= ub + 1e-12);
    ++rows;
  }
  CHECK(rows == 3);
  // sidecar with the effective configuration
  CHECK(std::filesystem::exists(out + ".meta.json"));
}

TEST_CASE("estimate is deterministic JSON") {
  const std::string args =
      "estimate --symmetric --q 0.11 --alpha 0.11 --samples 50000 "
      "--chains 4 --seed 3";
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j["estimate"].get<double>() > 0.7);
  CHECK(j["estimate"].get<double>() < 0.9);
  CHECK(j["seed"].get<std::uint64_t>() == 3);

  // exact route at alpha = 0
  const json e = json::parse(
      run("estimate --symmetric --q 0.11 --alpha 0 --samples 50000").out);
  CHECK(e["estimate"].get<double>() ==
        doctest::Approx(0.4999159581645280).epsilon(1e-12));  // h(0.11)
  CHECK(e["ci"].get<double>() == 0.0);
}

TEST_CASE("verify exit code mirrors the JSON pass flag") {
  for (const char* suite : {"dominance", "prop2", "asymptotics", "oracles"}) {
    const auto r = run(std::string("verify ") + suite);
    const json j = json::parse(r.out);
    CHECK(j["pass"].get<bool>());
    CHECK(r.exit_code == 0);
    CHECK(j["checks"].size() > 0);
    for (const auto& c : j["checks"]) {
      CHECK(c["pass"].get<bool>());
    }
  }
  CHECK(run("verify nosuchsuite").exit_code == 2);
}

TEST_CASE("expand emits the asymptotic constants") {
  const json j = json::parse(run("expand --q 0.25 --alpha 0.11").out);
  CHECK(j["very_noisy_constant"].get<double>() ==
        doctest::Approx(3.9895590777815707).epsilon(1e-12));
  CHECK(j["fast_transitions_deficit"].get<double>() ==
        doctest::Approx(1.0680287545885454).epsilon(1e-12));
  CHECK(run("expand").exit_code == 2);
}
