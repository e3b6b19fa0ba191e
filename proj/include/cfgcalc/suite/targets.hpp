#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cfgcalc/report.hpp"

namespace cfgcalc::suite {

/// A named verification run. `default_n_max` is sized to finish in a few
/// seconds; `max_n` is the largest accepted value.
struct Target {
  std::string name;
  std::string description;
  long default_n_max;
  long max_n;
  std::function<VerificationReport(long n_max)> run;
};

/// All targets, sorted by name.
const std::vector<Target>& targets();

/// Throws std::invalid_argument for an unknown name.
const Target& find_target(std::string_view name);

/// Runs one target. Throws std::out_of_range if n_max exceeds the target's
/// budget or is below 1.
VerificationReport run_target(const Target& target, std::optional<long> n_max = std::nullopt);

/// Runs every target, clamping n_max to each target's budget. Targets run
/// concurrently when `parallel`; the result order is always target order.
std::vector<VerificationReport> run_all(std::optional<long> n_max = std::nullopt,
                                        bool parallel = true);

bool all_passed(const std::vector<VerificationReport>& reports);

nlohmann::json to_json(const std::vector<VerificationReport>& reports);

}  // namespace cfgcalc::suite
