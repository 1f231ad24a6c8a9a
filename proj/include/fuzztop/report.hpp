#pragma once

#include <string>
#include <vector>

#include "fuzztop/document.hpp"

namespace fuzztop {

// Command result: verdicts plus derived objects, with a stable versioned
// machine form that parses back to the same value.
struct Report {
  std::string command;
  std::vector<std::string> args;
  std::vector<CheckEntry> verdicts;
  Json derived = Json::object();

  int exit_code() const {
    for (const auto& v : verdicts)
      if (!v.pass) return 1;
    return 0;
  }
};

std::string emit_report_text(const Report& r);
std::string emit_report_machine(const Report& r);
Report parse_report(const std::string& machine_text);
bool report_equal(const Report& a, const Report& b);

}  // namespace fuzztop
