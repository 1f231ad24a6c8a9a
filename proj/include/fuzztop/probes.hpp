#pragma once

#include <string>

#include "fuzztop/ltop.hpp"

namespace fuzztop {

// Empirical counterexample searches for universal properties the theory
// leaves open. A probe reports evidence, never a verdict: either a concrete
// counterexample bundle or "none found" within the enumerated bounds.
enum class ProbeQuestion {
  InitialStructure,    // is the transported preimage equality initial?
  FinalStructure,      // is the transported image equality final?
  FsetBottomProducts,  // does the candidate product work below the top frame?
  FtopProducts,        // same with topologies and continuous cones
};

ProbeQuestion probe_question_from_string(const std::string& s);
const char* probe_question_name(ProbeQuestion q);

struct ProbeBounds {
  int max_carrier = 2;
  int max_chain = 2;  // 2 = boolean only; >= 3 adds the 3-chains
};

struct ProbeOutcome {
  std::string question;
  bool counterexample_found = false;
  std::string detail;
  long long instances_checked = 0;
  long long rejected = 0;  // inputs failing the construction's preconditions
  bool budget_exhausted = false;
};

// Throws BudgetExceeded when budget <= 0; otherwise checks at most `budget`
// instances in a deterministic enumeration order.
ProbeOutcome universal_probe(ProbeQuestion q, const ProbeBounds& bounds,
                             long long budget);

}  // namespace fuzztop
