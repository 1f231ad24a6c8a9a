#pragma once

#include <optional>
#include <vector>

#include "fuzztop/ltop.hpp"

namespace fuzztop {

// (alpha,beta)-compactness: every open family whose join dominates the
// constant alpha has a finite subfamily whose join dominates beta. On a
// finite carrier every subfamily is finite and the topology is join-closed,
// so only the join-distinct subfamilies matter: the scan runs over single
// opens as representatives of their join classes.
struct CompactVerdict {
  bool compact = true;
  // A violating cover, as indices into the topology's opens.
  std::vector<int> witness;
};

CompactVerdict is_compact(const LTopSpace& t, Elem alpha, Elem beta);

// Membership table over all (alpha, beta) pairs. Downward closed in beta
// and upward closed in alpha.
struct CompactnessSpectrum {
  MonoidPtr monoid;
  std::vector<std::uint8_t> table;  // row alpha, column beta

  bool contains(Elem alpha, Elem beta) const {
    return table[static_cast<std::size_t>(alpha) * monoid->size() + beta] != 0;
  }
};

CompactnessSpectrum spectrum(const LTopSpace& t);

// (alpha,beta)-compact for every beta strictly below alpha; degenerate
// (always true) on finite carriers, kept to document the regime.
bool lowen_compact(const LTopSpace& t);
// (top,top)-compactness.
bool chang_compact(const LTopSpace& t);

// Closed-set characterization (MV only): for every family of closed sets,
// if no finite meet falls under beta^c then the total meet does not fall
// under alpha^c. Agrees with is_compact exactly.
bool closed_char_compact(const LTopSpace& t, Elem alpha, Elem beta);

// Compactness of an L-subset s (MV only): the same condition with every
// closed-family meet cut by s. The candidate family is closed under finite
// meets before testing, which on a finite carrier reduces the scan to the
// closed sets themselves.
bool lset_compact(const LTopSpace& t, const LSubset& s, Elem alpha, Elem beta);

// Specialization of lset_compact to the column of f at y0.
bool point_preimage_compact(const FuzzyFunction& f, const LTopSpace& dom,
                            int y0, Elem alpha, Elem beta);

struct PerfectVerdict {
  bool perfect = false;
  bool closed_map = false;
  std::optional<LSubset> closed_witness;  // closed set with non-closed image
  int fiber_witness = -1;                 // codomain point with non-compact fiber
};

// Closed map (images of closed sets closed) with (alpha,beta)-compact point
// preimages. MV only; f must be continuous.
PerfectVerdict is_perfect(const FuzzyFunction& f, const LTopSpace& dom,
                          const LTopSpace& cod, Elem alpha, Elem beta);

}  // namespace fuzztop
