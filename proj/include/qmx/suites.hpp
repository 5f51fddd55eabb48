#pragma once

// Named verification suites behind the `verify` CLI command. Each suite
// measures residuals, drifts, or convergence orders and compares them against
// the bounds the rest of the artifact promises; a report line carries the
// measured value so failures name the quantity, not just the suite.

#include <iosfwd>
#include <string>
#include <vector>

namespace qmx {

struct CheckLine {
  std::string name;
  double value = 0.0;
  std::string bound;  // human-readable acceptance bound
  bool ok = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> lines;

  bool passed() const;
};

// "algebra", "identities", "convergence", "conservation", "thermo".
std::vector<std::string> suite_names();

// Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name);

void print_report(const SuiteReport& report, std::ostream& out);

}  // namespace qmx
