#pragma once

#include <string>
#include <vector>

namespace qsv::selftest {

// One released-quality gate per physical construction.  Every check runs
// against fixed seeds and pinned tolerances; a result's detail string is a
// pure function of the library's arithmetic, never of wall time.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CriterionResult> results;
  bool all_pass = false;
};

Report run();

// One line per criterion plus a summary line.
std::string format_report(const Report& report);

}  // namespace qsv::selftest
