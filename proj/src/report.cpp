#include "cfgcalc/report.hpp"

#include <algorithm>
#include <sstream>

namespace cfgcalc {

bool VerificationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::size_t VerificationReport::failure_count() const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; }));
}

void VerificationReport::pass(std::string label, long n, std::string detail) {
  checks_.push_back({std::move(label), n, true, std::move(detail), std::nullopt});
}

void VerificationReport::fail(std::string label, long n, std::string detail,
                              std::optional<Mismatch> mismatch) {
  checks_.push_back({std::move(label), n, false, std::move(detail), std::move(mismatch)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks()) {
    nlohmann::json j = {{"label", c.label}, {"n", c.n}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.mismatch) {
      j["mismatch"] = {{"k", c.mismatch->k},
                       {"expected", algebra::to_decimal(c.mismatch->expected)},
                       {"actual", algebra::to_decimal(c.mismatch->actual)}};
    }
    checks.push_back(std::move(j));
  }
  return {{"name", report.name()},
          {"passed", report.passed()},
          {"failures", report.failure_count()},
          {"checks", std::move(checks)}};
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << report.name() << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
     << report.checks().size() - report.failure_count() << "/" << report.checks().size()
     << " checks)\n";
  for (const auto& c : report.checks()) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.label << " n=" << c.n;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

}  // namespace cfgcalc
