#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hyperee/trace.hpp"

namespace hyperee::cli {

enum ExitCode : int { Ok = 0, ParseFailure = 1, Infeasible = 2, TableMismatch = 3 };

struct TableRow {
  std::string label;
  double reference = 0.0;
  double computed = 0.0;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  double rel_tolerance = 0.0;
  std::string method;
  double error_bound = 0.0;
  bool skipped = false;
  std::string reason;

  bool ok() const { return !skipped && rel_dev <= rel_tolerance; }
};

/// The six rows of the published table, each by its cheapest applicable method.
std::vector<TableRow> table1(const TraceBudget& budget);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperee::cli
