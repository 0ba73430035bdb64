#include "confcoh/report.hpp"

#include <algorithm>

namespace confcoh {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
    case CheckStatus::SkippedOpen: return "SKIPPED-OPEN";
  }
  return "?";
}

bool VerificationReport::check(int m, int degree, const std::string& label, const std::string& expected,
                               const std::string& computed) {
  bool ok = expected == computed;
  records_.push_back({suite_, m, degree, label, expected, computed, ok ? CheckStatus::Pass : CheckStatus::Fail});
  return ok;
}

bool VerificationReport::check_true(int m, int degree, const std::string& label, bool ok, const std::string& detail) {
  records_.push_back({suite_, m, degree, label, "true", ok ? "true" : (detail.empty() ? "false" : detail),
                      ok ? CheckStatus::Pass : CheckStatus::Fail});
  return ok;
}

void VerificationReport::skip(int m, int degree, const std::string& label, const std::string& why, bool open_problem) {
  records_.push_back({suite_, m, degree, label, "", why, open_problem ? CheckStatus::SkippedOpen : CheckStatus::Skipped});
}

void VerificationReport::note(int m, int degree, const std::string& label, const std::string& detail) {
  records_.push_back({suite_, m, degree, label, detail, detail, CheckStatus::Pass});
}

void VerificationReport::merge(const VerificationReport& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const { return count(CheckStatus::Fail); }

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : records_) {
    nlohmann::json j{{"suite", r.suite}, {"label", r.label}, {"expected", r.expected},
                     {"computed", r.computed}, {"status", status_name(r.status)}};
    j["m"] = r.m >= 0 ? nlohmann::json(r.m) : nlohmann::json(nullptr);
    j["degree"] = r.degree >= 0 ? nlohmann::json(r.degree) : nlohmann::json(nullptr);
    checks.push_back(std::move(j));
  }
  return {{"passed", passed()},
          {"total", records_.size()},
          {"failures", failures()},
          {"skipped_open", count(CheckStatus::SkippedOpen)},
          {"checks", checks}};
}

}  // namespace confcoh
