#include "fuzztop/lvset.hpp"

#include "fuzztop/error.hpp"

namespace fuzztop {

LvSetPtr LValuedSet::make(MonoidPtr monoid, std::vector<std::string> elements,
                          Matrix equality) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw Error(Errc::EmptySubset, "carrier must be nonempty");
  if (equality.rows != n || equality.cols != n)
    throw Error(Errc::DimensionMismatch, "equality matrix must be square over the carrier");
  const GLMonoid& m = *monoid;
  for (Elem v : equality.v)
    if (v < 0 || v >= m.size())
      throw Error(Errc::ValueNotInCarrier, "equality entry outside the monoid carrier");

  for (int x = 0; x < n; ++x)
    if (equality.at(x, x) != m.top())
      throw Error(Errc::ReflexivityFail, "equality is not top on the diagonal",
                  {elements[x]});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (equality.at(x, y) != equality.at(y, x))
        throw Error(Errc::SymmetryFail, "equality is not symmetric",
                    {elements[x], elements[y]});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!m.leq(m.tnorm(equality.at(x, y), equality.at(y, z)),
                   equality.at(x, z)))
          throw Error(Errc::TransitivityFail, "equality is not transitive",
                      {elements[x], elements[y], elements[z]});

  return LvSetPtr(new LValuedSet(std::move(monoid), std::move(elements),
                                 std::move(equality)));
}

LvSetPtr LValuedSet::crisp(MonoidPtr monoid, std::vector<std::string> elements) {
  const int n = static_cast<int>(elements.size());
  Matrix eq(n, n, monoid->bot());
  for (int x = 0; x < n; ++x) eq.at(x, x) = monoid->top();
  return make(std::move(monoid), std::move(elements), std::move(eq));
}

int LValuedSet::index_of(const std::string& s) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == s) return i;
  return -1;
}

bool LValuedSet::is_crisp() const {
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y)
      if (x != y && eq_.at(x, y) != m_->bot()) return false;
  return true;
}

LvSetPtr LValuedSet::restrict(std::span<const int> keep) const {
  if (keep.empty()) throw Error(Errc::EmptySubset, "subset carrier must be nonempty");
  const int k = static_cast<int>(keep.size());
  std::vector<std::string> els(k);
  Matrix eq(k, k);
  for (int i = 0; i < k; ++i) {
    if (keep[i] < 0 || keep[i] >= size())
      throw Error(Errc::CarrierMismatch, "subset index out of range");
    els[i] = elements_[keep[i]];
    for (int j = 0; j < k; ++j) eq.at(i, j) = eq_.at(keep[i], keep[j]);
  }
  return make(m_, std::move(els), std::move(eq));
}

bool same_space(const LvSetPtr& a, const LvSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_monoid(a->monoid(), b->monoid()) &&
         a->equality() == b->equality();
}

LSubset constant_subset(LvSetPtr parent, Elem c) {
  std::vector<Elem> v(parent->size(), c);
  return {std::move(parent), std::move(v)};
}

LSubset subset_join(const LSubset& a, const LSubset& b) {
  if (!same_space(a.parent, b.parent))
    throw Error(Errc::ParentMismatch, "subsets live on different carriers");
  const GLMonoid& m = *a.parent->monoid();
  LSubset r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i)
    r.values[i] = m.join(a.values[i], b.values[i]);
  return r;
}

LSubset subset_meet(const LSubset& a, const LSubset& b) {
  if (!same_space(a.parent, b.parent))
    throw Error(Errc::ParentMismatch, "subsets live on different carriers");
  const GLMonoid& m = *a.parent->monoid();
  LSubset r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i)
    r.values[i] = m.meet(a.values[i], b.values[i]);
  return r;
}

bool subset_leq(const LSubset& a, const LSubset& b) {
  const GLMonoid& m = *a.parent->monoid();
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!m.leq(a.values[i], b.values[i])) return false;
  return true;
}

LSubset subset_complement(const LSubset& a) {
  const GLMonoid& m = *a.parent->monoid();
  LSubset r = a;
  for (auto& v : r.values) v = m.involution(v);
  return r;
}

PairVerdict is_extensional_subset(const LSubset& a) {
  const LValuedSet& s = *a.parent;
  const GLMonoid& m = *s.monoid();
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (!m.leq(m.tnorm(a.values[x], s.eq(x, y)), a.values[y]))
        return {false, x, y};
  return {};
}

LSubset extensional_hull(const LSubset& a) {
  const LValuedSet& s = *a.parent;
  const GLMonoid& m = *s.monoid();
  LSubset r = a;
  for (int y = 0; y < s.size(); ++y) {
    Elem acc = m.bot();
    for (int x = 0; x < s.size(); ++x)
      acc = m.join(acc, m.tnorm(a.values[x], s.eq(x, y)));
    r.values[y] = acc;
  }
  return r;
}

PairVerdict extensionality_defect(std::span<const int> f,
                                  const LValuedSet& dom,
                                  const LValuedSet& cod) {
  if (static_cast<int>(f.size()) != dom.size())
    throw Error(Errc::CarrierMismatch, "map must be total on the domain");
  if (!same_monoid(dom.monoid(), cod.monoid()))
    throw Error(Errc::MonoidMismatch, "domain and codomain use different monoids");
  for (int v : f)
    if (v < 0 || v >= cod.size())
      throw Error(Errc::CarrierMismatch, "map value outside the codomain");
  const GLMonoid& m = *dom.monoid();
  for (int x = 0; x < dom.size(); ++x)
    for (int y = 0; y < dom.size(); ++y)
      if (!m.leq(dom.eq(x, y), cod.eq(f[x], f[y]))) return {false, x, y};
  return {};
}

}  // namespace fuzztop
