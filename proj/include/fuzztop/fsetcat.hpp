#pragma once

#include <string>
#include <vector>

#include "fuzztop/fuzzfn.hpp"

namespace fuzztop {

// Largest L-valued equality on the row carrier making `raw` a fuzzy
// function into (Y,E_Y):
//   E_X(x,x') = Meet_y (F(x,y) -> F(x',y)) /\ (F(x',y) -> F(x,y)).
// `raw` must already satisfy (1ff) and (3ff) against E_Y.
LvSetPtr preimage_equality(const Matrix& raw, const LvSetPtr& cod,
                           std::vector<std::string> dom_labels = {});

// Smallest matrix on the column carrier satisfying (3ff):
//   E_Y(y,y') = Vee_x F(x,y) * F(x,y').
// `raw` must satisfy (2ff) against E_X and be top-surjective (otherwise the
// diagonal falls short of top). The result is validated: transitivity can
// fail for non-injective raws, in which case ImageEqualityInvalid is raised
// with the violating triple.
LvSetPtr image_equality(const Matrix& raw, const LvSetPtr& dom,
                        std::vector<std::string> cod_labels = {});

// Product of L-valued sets: tuples with E = componentwise meet. Projections
// are the extensional hulls of the coordinate graphs, p_i(t, c) =
// E_i(t_i, c); all have definedness and surjectivity top.
struct ProductSet {
  LvSetPtr space;
  std::vector<LvSetPtr> factors;
  std::vector<FuzzyFunction> projections;

  std::vector<int> coords_of(int tuple) const;
  int tuple_of(std::span<const int> coords) const;
};

ProductSet product_lvset(std::vector<LvSetPtr> factors, int cap = 64);

// F(x,t) = Meet_i F_i(x, t_i) for a cone of fuzzy functions out of a
// common domain. Satisfies p_i o pair = F_i whenever every component has
// definedness top.
FuzzyFunction pair_ff(const ProductSet& p,
                      const std::vector<FuzzyFunction>& components);

// Coproduct: disjoint sum with blockwise equality, bot across blocks.
// Injections are the equality graphs of the embeddings.
struct CoproductSet {
  LvSetPtr space;
  std::vector<LvSetPtr> factors;
  std::vector<FuzzyFunction> injections;
  std::vector<int> offsets;  // block i occupies [offsets[i], offsets[i+1])

  int block_of(int i) const;
  int local_of(int i) const;
};

CoproductSet coproduct_lvset(std::vector<LvSetPtr> factors);

// (copair F_i)(x,y) = F_{block(x)}(local(x), y); satisfies copair o q_i = F_i.
FuzzyFunction copair_ff(const CoproductSet& c,
                        const std::vector<FuzzyFunction>& components);

// Degree laws of the fuzzy category of L-valued sets: identities have
// degree top, every morphism degree is bounded by the object degrees
// (all top here), and composition obeys mu(g o f) >= mu(g) * mu(f) for
// every composable pair in the sample.
CheckReport degree_law_audit(const std::vector<FuzzyFunction>& sample);

}  // namespace fuzztop
