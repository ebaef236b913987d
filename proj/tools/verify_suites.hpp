#pragma once

#include <string>

#include <json.hpp>

namespace hmmeb::cli {

/// Runs one named invariant suite at desk scale and returns a machine
/// readable report: {"suite", "pass", "checks": [{name, slack, tolerance,
/// pass}, ...]}. A check passes when slack >= -tolerance.
nlohmann::json run_verify_suite(const std::string& suite);

}  // namespace hmmeb::cli
