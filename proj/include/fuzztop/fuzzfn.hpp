#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fuzztop/check.hpp"
#include "fuzztop/lvset.hpp"

namespace fuzztop {

// L-valued relation F : X x Y -> L between L-valued sets satisfying
//   (1ff) F(x,y) * E_Y(y,y') <= F(x,y')
//   (2ff) E_X(x,x') * F(x,y) <= F(x',y)
//   (3ff) F(x,y) * F(x,y') <= E_Y(y,y')
// Degrees and injectivity are cached at construction; values are immutable.
class FuzzyFunction {
 public:
  const LvSetPtr& dom() const { return dom_; }
  const LvSetPtr& cod() const { return cod_; }
  const Matrix& matrix() const { return f_; }
  Elem at(int x, int y) const { return f_.at(x, y); }

  // Meet over rows of the row joins: how far F is from being defined
  // everywhere. F is a "fuzzy alpha-function" iff definedness() >= alpha.
  Elem definedness() const { return mu_; }
  // Meet over columns of the column joins.
  Elem surjectivity() const { return sigma_; }
  // F(x,y) * F(x',y) <= E_X(x,x') for all x, x', y.
  bool is_injective() const { return injective_; }

  friend class FuzzyFunctionBuilder;

 private:
  LvSetPtr dom_;
  LvSetPtr cod_;
  Matrix f_;
  Elem mu_ = 0;
  Elem sigma_ = 0;
  bool injective_ = false;
};

struct FfValidation {
  CheckReport report;
  std::optional<FuzzyFunction> fn;  // engaged iff all three axioms pass
};

// Structural problems (monoid or dimension mismatch, foreign values) throw;
// axiom violations come back as witnessed report entries.
FfValidation validate_ff(LvSetPtr dom, LvSetPtr cod, Matrix m);

// validate_ff that throws ValidationFailure on any axiom failure.
FuzzyFunction make_ff(LvSetPtr dom, LvSetPtr cod, Matrix m);

// The equality matrix of X as the identity morphism on (X,E_X).
FuzzyFunction identity_ff(const LvSetPtr& x);

// g after f; cod(f) and dom(g) must agree as L-valued sets.
FuzzyFunction compose(const FuzzyFunction& g, const FuzzyFunction& f);

// Transpose; defined exactly for injective F. Degrees swap roles.
FuzzyFunction invert(const FuzzyFunction& f);

// Image Vee_x F(x,y)*A(x) and preimage Vee_y F(x,y)*B(y); both extensional.
LSubset image(const FuzzyFunction& f, const LSubset& a);
LSubset preimage(const FuzzyFunction& f, const LSubset& b);
// Column y0 of F as an L-subset of the domain.
LSubset point_preimage(const FuzzyFunction& f, int y0);

// Graph of an extensional crisp map, hull-closed on both sides:
// F(x,y) = Vee_{x'} E_X(x,x') * E_Y(f(x'),y). Always has definedness top and
// reduces to the plain crisp graph when both equalities are crisp.
FuzzyFunction crisp_to_fuzzy(std::span<const int> f, LvSetPtr dom,
                             LvSetPtr cod);

// Recovers f(x) as the unique y with F(x,y) = top; NotCrispRepresentable
// when a row has no such y or more than one.
std::vector<int> fuzzy_to_crisp(const FuzzyFunction& f);

// Restriction to subsets of the carriers, equalities restricted alongside.
FuzzyFunction restrict_ff(const FuzzyFunction& f, std::span<const int> xs,
                          std::span<const int> ys);

}  // namespace fuzztop
