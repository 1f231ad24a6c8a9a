#include "fuzztop/harness.hpp"

#include <algorithm>

#include "fuzztop/error.hpp"

namespace fuzztop {

void check_bounds(const HarnessBounds& b) {
  if (b.max_set < 1 || b.max_set > 6)
    throw Error(Errc::BoundsTooLarge, "carrier bound must be in 1..6");
  if (b.max_chain < 2 || b.max_chain > 11)
    throw Error(Errc::BoundsTooLarge, "chain bound must be in 2..11");
  if (b.max_subbase < 0 || b.max_subbase > 6)
    throw Error(Errc::BoundsTooLarge, "subbase bound must be in 0..6");
}

MonoidPtr random_monoid(Rng& rng, const HarnessBounds& b) {
  check_bounds(b);
  int kinds = b.include_product ? 4 : 3;
  switch (rng.below(kinds)) {
    case 0:
      return GLMonoid::boolean();
    case 1:
      return GLMonoid::lukasiewicz(2 + rng.below(b.max_chain - 1));
    case 2:
      return GLMonoid::goedel(2 + rng.below(b.max_chain - 1));
    default:
      return GLMonoid::product(GLMonoid::lukasiewicz(3),
                               GLMonoid::lukasiewicz(3));
  }
}

LvSetPtr random_lvset(Rng& rng, MonoidPtr m, int max_size,
                      const std::string& prefix) {
  const int n = 1 + rng.below(max_size);
  const GLMonoid& L = *m;
  Matrix eq(n, n, L.bot());
  for (int i = 0; i < n; ++i) eq.at(i, i) = L.top();
  int seeds = rng.below(n * 2 + 1);
  for (int k = 0; k < seeds; ++k) {
    int i = rng.below(n), j = rng.below(n);
    if (i == j) continue;
    Elem v = static_cast<Elem>(rng.below(L.size()));
    eq.at(i, j) = L.join(eq.at(i, j), v);
    eq.at(j, i) = eq.at(i, j);
  }
  // *-transitive closure; entries only grow, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Elem v = L.join(eq.at(i, k), L.tnorm(eq.at(i, j), eq.at(j, k)));
          if (v != eq.at(i, k)) {
            eq.at(i, k) = v;
            changed = true;
          }
        }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = prefix + std::to_string(i);
  return LValuedSet::make(std::move(m), std::move(labels), std::move(eq));
}

LSubset random_subset(Rng& rng, const LvSetPtr& s) {
  const GLMonoid& L = *s->monoid();
  LSubset a{s, std::vector<Elem>(s->size())};
  for (auto& v : a.values) v = static_cast<Elem>(rng.below(L.size()));
  return a;
}

LSubset random_extensional_subset(Rng& rng, const LvSetPtr& s) {
  return extensional_hull(random_subset(rng, s));
}

namespace {

Elem random_at_most(Rng& rng, const GLMonoid& L, Elem cap) {
  std::vector<Elem> below;
  for (Elem v = 0; v < L.size(); ++v)
    if (L.leq(v, cap)) below.push_back(v);
  return below[rng.below(static_cast<int>(below.size()))];
}

// Lower a few entries, re-hull against both equalities, keep when (3ff)
// survives. `protect` pins the graph entries so definedness stays top.
std::optional<FuzzyFunction> perturbed_lift(Rng& rng, const LvSetPtr& dom,
                                            const LvSetPtr& cod,
                                            const Matrix& lift,
                                            const std::vector<int>* protect) {
  const GLMonoid& L = *dom->monoid();
  const int nx = dom->size(), ny = cod->size();
  Matrix m = lift;
  int hits = 1 + rng.below(nx * ny);
  for (int k = 0; k < hits; ++k) {
    int x = rng.below(nx), y = rng.below(ny);
    if (protect && (*protect)[x] == y) continue;
    m.at(x, y) = random_at_most(rng, L, m.at(x, y));
  }
  Matrix rowh(nx, ny, L.bot());
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      Elem acc = L.bot();
      for (int xp = 0; xp < nx; ++xp)
        acc = L.join(acc, L.tnorm(dom->eq(x, xp), m.at(xp, y)));
      rowh.at(x, y) = acc;
    }
  Matrix colh(nx, ny, L.bot());
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      Elem acc = L.bot();
      for (int yp = 0; yp < ny; ++yp)
        acc = L.join(acc, L.tnorm(rowh.at(x, yp), cod->eq(yp, y)));
      colh.at(x, y) = acc;
    }
  FfValidation v = validate_ff(dom, cod, std::move(colh));
  if (v.fn) return *std::move(v.fn);
  return std::nullopt;
}

}  // namespace

FuzzyFunction random_ff(Rng& rng, const LvSetPtr& dom, const LvSetPtr& cod) {
  const GLMonoid& L = *dom->monoid();
  const int nx = dom->size(), ny = cod->size();
  for (int attempt = 0; attempt < 24; ++attempt) {
    std::vector<int> g(nx);
    for (auto& v : g) v = rng.below(ny);
    if (!extensionality_defect(g, *dom, *cod).pass) continue;
    FuzzyFunction lift = crisp_to_fuzzy(g, dom, cod);
    for (int t = 0; t < 4; ++t) {
      auto p = perturbed_lift(rng, dom, cod, lift.matrix(), nullptr);
      if (p) return *std::move(p);
    }
    return lift;
  }
  return make_ff(dom, cod, Matrix(nx, ny, L.bot()));
}

LinkedInstance random_linked_ff(Rng& rng, MonoidPtr m, int max_size,
                                bool force_mu_top) {
  const GLMonoid& L = *m;
  LvSetPtr cod = random_lvset(rng, m, max_size, "y");
  const int ny = cod->size();
  const int nx = 1 + rng.below(max_size);

  std::vector<int> g(nx);
  for (auto& v : g) v = rng.below(ny);

  // Random symmetric seed cut against the pullback of the codomain
  // equality and re-closed, so the crisp map is extensional by
  // construction and a hull lift always exists.
  LvSetPtr base = [&] {
    Matrix e(nx, nx, L.bot());
    for (int i = 0; i < nx; ++i) e.at(i, i) = L.top();
    int seeds = rng.below(nx * 2 + 1);
    for (int k = 0; k < seeds; ++k) {
      int i = rng.below(nx), j = rng.below(nx);
      if (i == j) continue;
      Elem v = static_cast<Elem>(rng.below(L.size()));
      v = L.meet(v, cod->eq(g[i], g[j]));
      e.at(i, j) = L.join(e.at(i, j), v);
      e.at(j, i) = e.at(i, j);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nx; ++j)
          for (int k = 0; k < nx; ++k) {
            if (i == k) continue;
            Elem v = L.join(e.at(i, k), L.tnorm(e.at(i, j), e.at(j, k)));
            if (v != e.at(i, k)) {
              e.at(i, k) = v;
              changed = true;
            }
          }
    }
    std::vector<std::string> labels(nx);
    for (int i = 0; i < nx; ++i) labels[i] = "x" + std::to_string(i);
    return LValuedSet::make(m, std::move(labels), std::move(e));
  }();

  FuzzyFunction lift = crisp_to_fuzzy(g, base, cod);
  std::string trace = "linked(g=[";
  for (int i = 0; i < nx; ++i) trace += (i ? "," : "") + std::to_string(g[i]);
  trace += "])";

  if (!force_mu_top) {
    for (int t = 0; t < 4; ++t) {
      auto p = perturbed_lift(rng, base, cod, lift.matrix(), nullptr);
      if (p) return {base, cod, *std::move(p), trace + "+perturb"};
    }
  } else {
    for (int t = 0; t < 4; ++t) {
      auto p = perturbed_lift(rng, base, cod, lift.matrix(), &g);
      if (p && p->definedness() == L.top())
        return {base, cod, *std::move(p), trace + "+perturb_protected"};
    }
  }
  return {base, cod, std::move(lift), trace};
}

LTopSpace random_topology(Rng& rng, const LvSetPtr& s, int max_subbase,
                          int cap) {
  std::vector<LSubset> subbase;
  int k = rng.below(max_subbase + 1);
  for (int i = 0; i < k; ++i)
    subbase.push_back(random_extensional_subset(rng, s));
  try {
    return generate_topology(s, std::move(subbase), false, cap);
  } catch (const Error& e) {
    if (e.code() == Errc::ExplosionCap) return indiscrete_topology(s);
    throw;
  }
}

ContinuousInstance random_continuous_instance(Rng& rng, MonoidPtr m,
                                              const HarnessBounds& b,
                                              bool force_mu_top) {
  LinkedInstance li =
      random_linked_ff(rng, std::move(m), b.max_set, force_mu_top);
  LTopSpace cod = random_topology(rng, li.cod, b.max_subbase, b.open_cap);
  std::vector<LSubset> subbase;
  for (const auto& v : cod.opens) subbase.push_back(preimage(li.f, v));
  int extra = rng.below(3);
  for (int i = 0; i < extra; ++i)
    subbase.push_back(random_extensional_subset(rng, li.dom));
  LTopSpace dom = [&] {
    try {
      return generate_topology(li.dom, std::move(subbase), false, b.open_cap);
    } catch (const Error& e) {
      if (e.code() != Errc::ExplosionCap) throw;
      std::vector<LSubset> bare;
      for (const auto& v : cod.opens) bare.push_back(preimage(li.f, v));
      return generate_topology(li.dom, std::move(bare), false,
                               b.open_cap * 4);
    }
  }();
  return {std::move(dom), std::move(cod), li.f, li.trace + "+topology"};
}

std::vector<int> random_surjection(Rng& rng, int from, int to) {
  if (to < 1 || to > from)
    throw Error(Errc::NotSurjective,
                "surjection needs 1 <= |target| <= |source|");
  std::vector<int> q(from);
  std::vector<int> targets(to);
  for (int i = 0; i < to; ++i) targets[i] = i;
  for (int i = to - 1; i > 0; --i)
    std::swap(targets[i], targets[rng.below(i + 1)]);
  for (int i = 0; i < from; ++i)
    q[i] = i < to ? targets[i] : rng.below(to);
  // shuffle which domain points carry the guaranteed hits
  for (int i = from - 1; i > 0; --i)
    std::swap(q[i], q[rng.below(i + 1)]);
  return q;
}

}  // namespace fuzztop
