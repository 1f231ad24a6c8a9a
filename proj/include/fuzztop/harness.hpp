#pragma once

#include <string>
#include <vector>

#include "fuzztop/ltop.hpp"
#include "fuzztop/rng.hpp"

namespace fuzztop {

// Size bounds for randomized instance generation. Hard caps keep desk-scale
// exhaustive sub-checks affordable; exceeding them raises BoundsTooLarge.
struct HarnessBounds {
  int max_set = 4;
  int max_chain = 5;
  bool include_product = true;  // admit the product-of-chains monoid
  int max_subbase = 3;
  int open_cap = 512;
};

void check_bounds(const HarnessBounds& b);

MonoidPtr random_monoid(Rng& rng, const HarnessBounds& b);

// Random valid equality: crisp diagonal seeded with random symmetric
// entries, then closed under *-transitivity.
LvSetPtr random_lvset(Rng& rng, MonoidPtr m, int max_size,
                      const std::string& prefix);

LSubset random_subset(Rng& rng, const LvSetPtr& s);
LSubset random_extensional_subset(Rng& rng, const LvSetPtr& s);

// Fuzzy function between the given spaces: crisp extensional map lifted via
// the hull graph, entries perturbed downward, re-hulled against both
// equalities, accepted when (3ff) survives. Falls back to the unperturbed
// lift, or to the all-bot relation when no extensional crisp map is found.
FuzzyFunction random_ff(Rng& rng, const LvSetPtr& dom, const LvSetPtr& cod);

// Generates compatible spaces alongside the function (the domain equality
// is cut against the pullback of the codomain one, so a lift always
// exists); richer degree variety than random_ff on fixed spaces.
struct LinkedInstance {
  LvSetPtr dom;
  LvSetPtr cod;
  FuzzyFunction f;
  std::string trace;
};
LinkedInstance random_linked_ff(Rng& rng, MonoidPtr m, int max_size,
                                bool force_mu_top = false);

LTopSpace random_topology(Rng& rng, const LvSetPtr& s, int max_subbase,
                          int cap);

// Continuous by construction: the domain topology is generated from the
// preimages of the codomain opens plus a few extra extensional subsets.
struct ContinuousInstance {
  LTopSpace dom;
  LTopSpace cod;
  FuzzyFunction f;
  std::string trace;
};
ContinuousInstance random_continuous_instance(Rng& rng, MonoidPtr m,
                                              const HarnessBounds& b,
                                              bool force_mu_top = false);

std::vector<int> random_surjection(Rng& rng, int from, int to);

}  // namespace fuzztop
