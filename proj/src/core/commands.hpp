#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/report.hpp"

namespace ts {

struct CommandRequest {
  std::string subcommand;
  std::map<std::string, std::string> params;  // raw key -> value strings
  int jobs = 1;
};

struct CommandOutcome {
  Report report;
  int exit_code = 0;  // 0 = pass or info, 1 = a mathematical check failed
};

// Dispatch one subcommand. Bad parameters raise UsageError; inconsistencies
// between independent computations of the same quantity raise InternalError.
// Mathematical check failures are reported, not thrown.
CommandOutcome run_command(const CommandRequest& req);

const std::vector<std::string>& command_names();

}  // namespace ts
