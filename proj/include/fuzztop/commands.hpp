#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fuzztop/report.hpp"

namespace fuzztop {

struct CommandOptions {
  std::uint64_t seed = 0;
  // 0 = per-operation default: 64 tuples for product carriers, 4096 for
  // generated open families.
  int cap = 0;
  long long budget = 20000;
  long long count = 100;
  std::string alpha;  // carrier labels for compactness parameters
  std::string beta;
};

// Errc classes for process exit codes: 0 pass, 1 law/check failure,
// 2 structural error.
int exit_code_for(Errc c);

Report run_command(const Document& doc, const std::string& command,
                   const std::vector<std::string>& args,
                   const CommandOptions& opt);

}  // namespace fuzztop
