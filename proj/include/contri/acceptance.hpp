#pragma once

#include <string>
#include <vector>

#include "contri/report.hpp"

namespace contri {

struct Criterion {
  int id = 0;
  std::string title;
  VerificationReport report;

  bool passed() const { return report.passed(); }
};

/// Criteria 1..9; each criterion is a report of individual checks.
Criterion run_criterion(int id);
std::vector<Criterion> run_acceptance();

}  // namespace contri
