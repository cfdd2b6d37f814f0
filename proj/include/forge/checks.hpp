#pragma once

#include <functional>

#include "forge/json_io.hpp"
#include "forge/sampler.hpp"

namespace forge {

struct CheckContext {
  Ring ring;
  std::uint64_t seed = 0;
  int trials = 100;
};

struct CheckResult {
  std::string name;
  std::string anchor;  // the identity the check verifies, in formula form
  bool pass = false;
  std::string counterexample;  // empty when passing
};

struct Check {
  std::string name;
  std::string anchor;
  std::function<bool(const CheckContext&, Sampler&, std::string&)> run;
};

/// Checks of one suite: suslin, epin, vaserstein, composition, or all.
std::vector<Check> suite_checks(const std::string& suite);

/// Runs a suite with a bounded worker pool (SUSLIN_FORGE_THREADS caps it;
/// results are slot-ordered, so the outcome is schedule-independent).
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const CheckContext& ctx);

json report_to_json(const std::string& command, const json& config,
                    const std::vector<CheckResult>& results,
                    std::optional<double> wall_ms);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace forge
