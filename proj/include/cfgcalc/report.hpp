#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cfgcalc/algebra/bigint.hpp"

namespace cfgcalc {

/// First coefficient at which a computed expansion disagrees with the
/// expected value.
struct Mismatch {
  long k;
  algebra::BigInt expected;
  algebra::BigInt actual;
};

struct CheckResult {
  std::string label;
  long n;
  bool passed;
  std::string detail;
  std::optional<Mismatch> mismatch;
};

/// Ordered list of per-n outcomes. Failures are recorded, never thrown.
class VerificationReport {
 public:
  explicit VerificationReport(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool passed() const;
  std::size_t failure_count() const;

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void pass(std::string label, long n, std::string detail = {});
  void fail(std::string label, long n, std::string detail,
            std::optional<Mismatch> mismatch = std::nullopt);
  void append(const VerificationReport& other);

 private:
  std::string name_;
  std::vector<CheckResult> checks_;
};

nlohmann::json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace cfgcalc
