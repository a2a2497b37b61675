#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lierigid/parallel.hpp"

namespace lierigid {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool checks_passed = false;
  double seconds = 0;
  double time_limit = 0;  // 0 means no limit
  std::string detail;     // first failure, or a short summary

  bool passed() const { return checks_passed && (time_limit <= 0 || seconds < time_limit); }
};

/// Runs every acceptance criterion, printing one line per criterion as it
/// finishes. Returns the results in order.
std::vector<CriterionResult> run_acceptance(std::ostream& out, Exec exec = Exec::Parallel);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace lierigid
