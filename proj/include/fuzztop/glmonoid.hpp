#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fuzztop/check.hpp"
#include "fuzztop/lattice.hpp"

namespace fuzztop {

class GLMonoid;
using MonoidPtr = std::shared_ptr<const GLMonoid>;

// Finite GL-monoid: a bounded distributive lattice enriched with a t-norm.
// The residuum table is precomputed at construction from the explicit join
// formula a->b = Vee{ l | a*l <= b }, so every downstream law check is an
// O(1) table lookup. Construction is structural only; law auditing lives in
// validate() so that deliberately broken tables can still be inspected.
class GLMonoid {
 public:
  GLMonoid(Lattice lattice, std::vector<Elem> tnorm_table, std::string name);

  // Catalog. Chains carry exact rational labels k/(n-1).
  static MonoidPtr boolean();
  static MonoidPtr lukasiewicz(int n);
  static MonoidPtr goedel(int n);
  static MonoidPtr product(const MonoidPtr& a, const MonoidPtr& b);
  // name in {boolean, lukasiewicz, goedel}; n is the chain length.
  static MonoidPtr from_catalog(const std::string& name, int n);

  const Lattice& lattice() const { return lat_; }
  const std::string& name() const { return name_; }
  int size() const { return lat_.size(); }
  Elem top() const { return lat_.top(); }
  Elem bot() const { return lat_.bot(); }
  bool leq(Elem a, Elem b) const { return lat_.leq(a, b); }
  Elem join(Elem a, Elem b) const { return lat_.join(a, b); }
  Elem meet(Elem a, Elem b) const { return lat_.meet(a, b); }
  Elem tnorm(Elem a, Elem b) const { return tnorm_[idx(a, b)]; }
  Elem residuum(Elem a, Elem b) const { return resid_[idx(a, b)]; }
  Elem square(Elem a) const { return tnorm(a, a); }
  // Order-reversing involution candidate; an actual involution iff MV.
  Elem involution(Elem a) const { return residuum(a, lat_.bot()); }
  const std::string& label(Elem a) const { return lat_.label(a); }

  // Axioms (1)-(7) plus the residuation adjunction, one entry each,
  // exhaustively scanned.
  CheckReport validate() const;

  // Derived implication/t-norm laws (the property list has no "iv";
  // treated as a numbering gap). Family meets/joins are realized as
  // iterated binary operations, so the binary forms are checked.
  CheckReport derived_properties() const;

  struct Classification {
    bool is_heyting = false;  // * coincides with the lattice meet
    bool is_mv = false;       // double negation recovers every element
  };
  Classification classify() const;

  bool same_structure(const GLMonoid& o) const {
    return lat_.same_structure(o.lat_) && tnorm_ == o.tnorm_;
  }

 private:
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * lat_.size() + b;
  }

  Lattice lat_;
  std::vector<Elem> tnorm_;
  std::vector<Elem> resid_;
  std::string name_;
};

inline bool same_monoid(const MonoidPtr& a, const MonoidPtr& b) {
  return a == b || (a && b && a->same_structure(*b));
}

}  // namespace fuzztop
