#pragma once

#include <cstdint>

#include "fuzztop/check.hpp"
#include "fuzztop/harness.hpp"

namespace fuzztop {

// Randomized law suites. Every asserted law is scanned exhaustively inside
// each generated instance; an entry fails iff some instance violates it,
// and then carries the first witness trace. Observation entries (slack
// records, known-unprovable variants) never fail.
struct SuiteOptions {
  long long instances = 200;
  HarnessBounds bounds;
  std::uint64_t seed = 0;
};

// Images/preimages, degree bounds, injectivity/surjectivity laws,
// composition and restriction behaviour.
CheckReport suite_fuzzfn_laws(const SuiteOptions& opt);

// Products, coproducts, pairing/copairing equations, degree laws.
CheckReport suite_category_laws(const SuiteOptions& opt);

// Continuity characterizations and their equivalences (gated by
// definedness where the proofs need it).
CheckReport suite_continuity_laws(const SuiteOptions& opt);

// Initial lifts: weakest-topology and factorization properties.
CheckReport suite_initial_lift_laws(const SuiteOptions& opt);

// Compactness: open-cover vs closed-set characterizations, spectrum shape,
// preservation theorems, perfect maps.
CheckReport suite_compactness_laws(const SuiteOptions& opt);

// Exhaustive small-scale equality transport: maximality of the preimage
// equality, minimality of the image equality (complete enumeration over
// the boolean monoid and the 3-chain).
CheckReport suite_equality_transport();

// Everything above, for the CLI harness command.
CheckReport run_all_suites(const SuiteOptions& opt);

}  // namespace fuzztop
