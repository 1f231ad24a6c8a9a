#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzztop/fsetcat.hpp"
#include "fuzztop/fuzzfn.hpp"

namespace fuzztop {

// L-topology on an L-valued set: extensional opens containing the constant
// bot and top subsets, closed under binary meets and joins (which on a
// finite carrier is the same as finite meets / arbitrary joins). Opens are
// kept deduplicated and sorted by value vector, so equality of topologies
// is bit-exact.
struct LTopSpace {
  LvSetPtr space;
  std::vector<LSubset> opens;

  bool contains(const LSubset& u) const;
  int open_index(const LSubset& u) const;  // -1 if absent
};

bool subset_value_less(const LSubset& a, const LSubset& b);

// Witnessed audit of the topology axioms; does not throw on law failures.
CheckReport check_topology(const LvSetPtr& space,
                           const std::vector<LSubset>& opens);

// Canonicalizing constructor; throws ValidationFailure on any axiom failure.
LTopSpace make_topology(LvSetPtr space, std::vector<LSubset> opens);

LTopSpace indiscrete_topology(LvSetPtr space);
// All extensional L-subsets (the finest admissible topology); only for
// carriers where |L|^|X| stays small.
LTopSpace discrete_topology(LvSetPtr space, long long cap = 4096);

// Smallest topology containing the subbase: close under binary meets (empty
// meet = top), then all joins (empty join = bot). With repair=true the
// subbase is extensional-hulled first; otherwise a non-extensional member
// raises NonExtensionalSubbase. ExplosionCap bounds the open count.
LTopSpace generate_topology(LvSetPtr space, std::vector<LSubset> subbase,
                            bool repair = false, int cap = 4096);

// Join of all opens below b: the kernel operator of the topology.
LSubset interior(const LTopSpace& t, const LSubset& b);

// Complements of opens; requires an MV monoid (NotMVAlgebra otherwise).
std::vector<LSubset> closed_family(const LTopSpace& t);
// Meet of all closed sets above a.
LSubset closure(const LTopSpace& t, const LSubset& a);

struct ContinuityVerdict {
  bool continuous = true;
  std::optional<LSubset> witness;  // first open whose preimage is not open
};

ContinuityVerdict is_continuous(const FuzzyFunction& f, const LTopSpace& dom,
                                const LTopSpace& cod);

// Evaluates the continuity characterizations:
//   1con  preimages of opens are open
//   2con  preimages of base members are open
//   3con  preimage of interior below interior of preimage, all B
//   4con  preimages of subbase members are open
//   5con  preimages of closed sets are closed          (MV only)
//   6con  image of closure below closure of image, all A (MV only)
// 1con<=>2con<=>3con are asserted unconditionally; the 4con, 5con and 6con
// equivalences only under definedness top, where they are theorems. Base and
// subbase must generate the codomain topology (BaseDoesNotGenerate).
CheckReport continuity_audit(const FuzzyFunction& f, const LTopSpace& dom,
                             const LTopSpace& cod,
                             const std::vector<LSubset>& base,
                             const std::vector<LSubset>& subbase);

// Initial lift of a structured source with definedness top: the preimages
// of the codomain opens, verified to be the weakest topology making f
// continuous. MuNotTop when definedness falls short.
LTopSpace initial_topology(const FuzzyFunction& f, const LTopSpace& cod);

struct ProductSpace {
  LTopSpace space;
  ProductSet set;
};
// Product carrier with the topology generated by the coordinate cylinders
// of factor opens.
ProductSpace product_space(const std::vector<LTopSpace>& factors,
                           int carrier_cap = 64, int open_cap = 4096);

// Opens restricted to the kept carrier indices.
LTopSpace subspace_space(const LTopSpace& t, std::span<const int> keep);

struct CoproductSpace {
  LTopSpace space;
  CoproductSet set;
};
// Sum carrier; topology generated by factor opens extended by bot outside
// their block.
CoproductSpace coproduct_space(const std::vector<LTopSpace>& factors,
                               int open_cap = 4096);

struct QuotientSpace {
  LTopSpace space;
  FuzzyFunction lift;   // hull of the crisp graph of q
  std::vector<int> map; // the crisp surjection
};
// Quotient along a crisp surjection q: codomain equality is the transported
// image equality, opens are the pushforwards of fiber-constant opens that
// stay extensional. Incompatible quotients raise ImageEqualityInvalid.
QuotientSpace quotient_space(const LTopSpace& t, std::span<const int> q,
                             std::vector<std::string> cod_labels);

struct HomeoVerdict {
  bool ok = false;
  Elem degree = 0;     // meet of definedness and surjectivity when ok
  std::string reason;  // which qualitative condition failed
};
// Largest alpha such that f is an alpha-homeomorphism: requires injectivity
// and continuity of f and of its inverse.
HomeoVerdict homeomorphism_degree(const FuzzyFunction& f, const LTopSpace& dom,
                                  const LTopSpace& cod);

}  // namespace fuzztop
