#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fuzztop/glmonoid.hpp"
#include "fuzztop/matrix.hpp"

namespace fuzztop {

class LValuedSet;
using LvSetPtr = std::shared_ptr<const LValuedSet>;

// Finite carrier with a (global) L-valued equality: top on the diagonal,
// symmetric, and transitive w.r.t. the t-norm. Immutable after make().
class LValuedSet {
 public:
  static LvSetPtr make(MonoidPtr monoid, std::vector<std::string> elements,
                       Matrix equality);
  static LvSetPtr crisp(MonoidPtr monoid, std::vector<std::string> elements);

  int size() const { return static_cast<int>(elements_.size()); }
  Elem eq(int x, int y) const { return eq_.at(x, y); }
  const Matrix& equality() const { return eq_; }
  const MonoidPtr& monoid() const { return m_; }
  const std::string& label(int x) const { return elements_[x]; }
  const std::vector<std::string>& labels() const { return elements_; }
  int index_of(const std::string& s) const;  // -1 if absent
  bool is_crisp() const;

  // Subobject carried by a subset of the carrier: the equality restricts.
  LvSetPtr restrict(std::span<const int> keep) const;

 private:
  LValuedSet(MonoidPtr m, std::vector<std::string> els, Matrix eq)
      : m_(std::move(m)), elements_(std::move(els)), eq_(std::move(eq)) {}

  MonoidPtr m_;
  std::vector<std::string> elements_;
  Matrix eq_;
};

bool same_space(const LvSetPtr& a, const LvSetPtr& b);

// L-subset of a carrier, one monoid element per point.
struct LSubset {
  LvSetPtr parent;
  std::vector<Elem> values;

  friend bool operator==(const LSubset& a, const LSubset& b) {
    return a.values == b.values && same_space(a.parent, b.parent);
  }
};

LSubset constant_subset(LvSetPtr parent, Elem c);
inline LSubset empty_subset(LvSetPtr parent) {
  Elem b = parent->monoid()->bot();
  return constant_subset(std::move(parent), b);
}
inline LSubset full_subset(LvSetPtr parent) {
  Elem t = parent->monoid()->top();
  return constant_subset(std::move(parent), t);
}

LSubset subset_join(const LSubset& a, const LSubset& b);
LSubset subset_meet(const LSubset& a, const LSubset& b);
bool subset_leq(const LSubset& a, const LSubset& b);
// Pointwise residuum into bot; an order-reversing involution on MV monoids.
LSubset subset_complement(const LSubset& a);

struct PairVerdict {
  bool pass = true;
  int x = -1;
  int y = -1;
};

// Vee_x A(x)*E(x,x') <= A(x') for all x'; witness is the violating pair.
PairVerdict is_extensional_subset(const LSubset& a);

// Smallest extensional L-subset above A: the sup-* closure against E.
LSubset extensional_hull(const LSubset& a);

// E_X(x,x') <= E_Y(f(x),f(x')) for a crisp map f between the carriers.
PairVerdict extensionality_defect(std::span<const int> f,
                                  const LValuedSet& dom,
                                  const LValuedSet& cod);

}  // namespace fuzztop
