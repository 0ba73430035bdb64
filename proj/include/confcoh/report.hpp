#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "confcoh/abelian.hpp"

namespace confcoh {

enum class CheckStatus { Pass, Fail, Skipped, SkippedOpen };

const char* status_name(CheckStatus s);

struct CheckRecord {
  std::string suite;
  int m = -1;       // -1 when the check is not tied to a single m
  int degree = -1;  // -1 when the check is not tied to a degree
  std::string label;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::Pass;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }

  bool check(int m, int degree, const std::string& label, const std::string& expected, const std::string& computed);
  bool check(int m, int degree, const std::string& label, const AbGroup2& expected, const AbGroup2& computed) {
    return check(m, degree, label, expected.to_string(), computed.to_string());
  }
  bool check(int m, int degree, const std::string& label, long long expected, long long computed) {
    return check(m, degree, label, std::to_string(expected), std::to_string(computed));
  }
  bool check_true(int m, int degree, const std::string& label, bool ok, const std::string& detail = "");
  void skip(int m, int degree, const std::string& label, const std::string& why, bool open_problem);
  void note(int m, int degree, const std::string& label, const std::string& detail);

  void merge(const VerificationReport& other);

  bool passed() const;
  std::size_t failures() const;
  std::size_t count(CheckStatus s) const;
  const std::vector<CheckRecord>& records() const { return records_; }

  nlohmann::json to_json() const;

 private:
  std::string suite_;
  std::vector<CheckRecord> records_;
};

}  // namespace confcoh
