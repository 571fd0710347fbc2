#pragma once

#include <iosfwd>
#include <string>

#include "activol/costs.hpp"

namespace activol {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 2,
  exit_unknown_op = 3,
  exit_invalid_params = 4,
  exit_infeasible = 5,
  exit_io = 6,
  exit_verify_failed = 7,
};

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

// "54.0 min", "8.75 h", "37.4 days", "5.41 years"
std::string human_duration(double seconds);

// 500,000 lookup additions, each a 2048-qubit adder plus a QROM read of
// 1024 2048-bit numbers.
CostSummary factoring_cost(const CostConstants &c = {});

}  // namespace activol
