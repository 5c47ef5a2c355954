#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace contri {

enum class Status { Pass, Fail, Unknown };

std::string_view to_string(Status s);

struct Check {
  std::string id;
  Status status = Status::Unknown;
  std::string measured;
  std::string expected;
  std::string tolerance;
  std::string provenance;
};

struct VerificationReport {
  std::string target;
  std::vector<Check> checks;

  void add(std::string id, bool pass, std::string measured, std::string expected, std::string tolerance,
           std::string provenance);
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const VerificationReport& other);
  bool passed() const;
  /// 0 iff no check failed.
  int exit_status() const { return passed() ? 0 : 1; }
};

nlohmann::json to_json(const VerificationReport& r);
std::string to_table(const VerificationReport& r);

/// Printable number: integers as integers, otherwise 17 significant digits.
std::string format_number(double v);

std::vector<std::string> verify_targets();
/// Checks for one generated complex; `n` selects members of parametrized families.
VerificationReport verify_target(std::string_view name, int n = 0);

}  // namespace contri
