#pragma once

// Independent brute-force oracles used by the tests. These deliberately
// avoid the library's derived tables and closure routines: residua are
// recomputed by scanning the carrier, topologies by a naive fixpoint,
// compactness by enumerating every subfamily of opens.

#include <algorithm>
#include <vector>

#include "fuzztop/compact.hpp"
#include "fuzztop/ltop.hpp"

namespace oracles {

using namespace fuzztop;

inline Elem brute_residuum(const GLMonoid& m, Elem a, Elem b) {
  Elem acc = m.bot();
  for (Elem l = 0; l < m.size(); ++l)
    if (m.leq(m.tnorm(a, l), b)) acc = m.join(acc, l);
  return acc;
}

// Least family containing the subbase plus the constants, closed under
// pairwise meet and join; naive worklist with linear membership scans.
inline std::vector<std::vector<Elem>> brute_closure(
    const GLMonoid& m, int carrier,
    const std::vector<std::vector<Elem>>& subbase) {
  std::vector<std::vector<Elem>> fam = subbase;
  fam.push_back(std::vector<Elem>(carrier, m.bot()));
  fam.push_back(std::vector<Elem>(carrier, m.top()));
  auto member = [&](const std::vector<Elem>& v) {
    return std::find(fam.begin(), fam.end(), v) != fam.end();
  };
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = fam.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        std::vector<Elem> mt(carrier), jn(carrier);
        for (int k = 0; k < carrier; ++k) {
          mt[k] = m.meet(fam[i][k], fam[j][k]);
          jn[k] = m.join(fam[i][k], fam[j][k]);
        }
        if (!member(mt)) {
          fam.push_back(mt);
          grew = true;
        }
        if (!member(jn)) {
          fam.push_back(jn);
          grew = true;
        }
      }
  }
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

// Literal subfamily enumeration of the compactness condition.
inline bool brute_compact(const LTopSpace& t, Elem alpha, Elem beta) {
  const GLMonoid& m = *t.space->monoid();
  const int n = static_cast<int>(t.opens.size());
  const int carrier = t.space->size();
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    std::vector<Elem> join(carrier, m.bot());
    for (int i = 0; i < n; ++i)
      if (mask & (1LL << i))
        for (int k = 0; k < carrier; ++k)
          join[k] = m.join(join[k], t.opens[i].values[k]);
    bool covers = true;
    for (int k = 0; k < carrier; ++k)
      if (!m.leq(alpha, join[k])) covers = false;
    if (!covers) continue;
    // any subfamily of the subfamily may serve as the finite refinement;
    // the largest join is the subfamily itself, so checking it suffices
    bool refined = true;
    for (int k = 0; k < carrier; ++k)
      if (!m.leq(beta, join[k])) refined = false;
    if (!refined) return false;
  }
  return true;
}

}  // namespace oracles
