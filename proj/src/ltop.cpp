#include "fuzztop/ltop.hpp"

#include <algorithm>

#include "fuzztop/error.hpp"
#include "fuzztop/rng.hpp"

namespace fuzztop {

bool subset_value_less(const LSubset& a, const LSubset& b) {
  return a.values < b.values;
}

namespace {

void canonicalize(std::vector<LSubset>& opens) {
  std::sort(opens.begin(), opens.end(), subset_value_less);
  opens.erase(std::unique(opens.begin(), opens.end(),
                          [](const LSubset& a, const LSubset& b) {
                            return a.values == b.values;
                          }),
              opens.end());
}

bool value_member(const std::vector<LSubset>& sorted, const LSubset& u) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), u,
                             subset_value_less);
  return it != sorted.end() && it->values == u.values;
}

std::string subset_str(const LSubset& s) {
  const GLMonoid& L = *s.parent->monoid();
  std::string out = "[";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i) out += ",";
    out += L.label(s.values[i]);
  }
  return out + "]";
}

}  // namespace

bool LTopSpace::contains(const LSubset& u) const {
  return value_member(opens, u);
}

int LTopSpace::open_index(const LSubset& u) const {
  auto it = std::lower_bound(opens.begin(), opens.end(), u, subset_value_less);
  if (it == opens.end() || it->values != u.values) return -1;
  return static_cast<int>(it - opens.begin());
}

CheckReport check_topology(const LvSetPtr& space,
                           const std::vector<LSubset>& opens) {
  CheckReport rep;
  for (const auto& u : opens)
    if (!same_space(u.parent, space))
      throw Error(Errc::ParentMismatch, "open does not live on the carrier");

  {
    bool ok = true;
    std::vector<std::string> w;
    for (const auto& u : opens) {
      PairVerdict v = is_extensional_subset(u);
      if (!v.pass) {
        ok = false;
        w = {subset_str(u), space->label(v.x), space->label(v.y)};
        break;
      }
    }
    rep.add("opens_extensional", ok, w);
  }
  std::vector<LSubset> sorted = opens;
  canonicalize(sorted);
  rep.add("contains_bot", value_member(sorted, empty_subset(space)));
  rep.add("contains_top", value_member(sorted, full_subset(space)));
  {
    bool ok = true;
    std::vector<std::string> w;
    for (const auto& a : sorted) {
      for (const auto& b : sorted) {
        if (!value_member(sorted, subset_meet(a, b))) {
          ok = false;
          w = {subset_str(a), subset_str(b)};
          break;
        }
        if (!value_member(sorted, subset_join(a, b))) {
          ok = false;
          w = {subset_str(a), subset_str(b)};
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("meet_join_closed", ok, w);
  }
  return rep;
}

LTopSpace make_topology(LvSetPtr space, std::vector<LSubset> opens) {
  CheckReport rep = check_topology(space, opens);
  if (!rep.all_pass()) {
    for (const auto& e : rep.entries)
      if (!e.pass)
        throw Error(Errc::ValidationFailure, "topology axiom " + e.law + " fails",
                    e.witness);
  }
  canonicalize(opens);
  return {std::move(space), std::move(opens)};
}

LTopSpace indiscrete_topology(LvSetPtr space) {
  std::vector<LSubset> opens = {empty_subset(space), full_subset(space)};
  return make_topology(std::move(space), std::move(opens));
}

LTopSpace discrete_topology(LvSetPtr space, long long cap) {
  const GLMonoid& L = *space->monoid();
  long long total = 1;
  for (int i = 0; i < space->size(); ++i) {
    total *= L.size();
    if (total > cap)
      throw Error(Errc::ExplosionCap,
                  "too many L-subsets for the discrete topology");
  }
  std::vector<LSubset> opens;
  LSubset cur = empty_subset(space);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < space->size(); ++i) {
      cur.values[i] = static_cast<Elem>(c % L.size());
      c /= L.size();
    }
    if (is_extensional_subset(cur).pass) opens.push_back(cur);
  }
  return make_topology(std::move(space), std::move(opens));
}

LTopSpace generate_topology(LvSetPtr space, std::vector<LSubset> subbase,
                            bool repair, int cap) {
  for (auto& s : subbase) {
    if (!same_space(s.parent, space))
      throw Error(Errc::ParentMismatch, "subbase member on a foreign carrier");
    if (repair) {
      s = extensional_hull(s);
    } else {
      PairVerdict v = is_extensional_subset(s);
      if (!v.pass)
        throw Error(Errc::NonExtensionalSubbase,
                    "subbase member is not extensional",
                    {subset_str(s), space->label(v.x), space->label(v.y)});
    }
  }

  // Meet closure first (empty meet = top), then join closure (empty join =
  // bot); distributivity keeps the join closure meet-closed.
  std::vector<LSubset> meets = subbase;
  meets.push_back(full_subset(space));
  canonicalize(meets);
  for (std::size_t i = 0; i < meets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      LSubset m = subset_meet(meets[i], meets[j]);
      if (!value_member(meets, m)) {
        meets.insert(std::lower_bound(meets.begin(), meets.end(), m,
                                      subset_value_less),
                     std::move(m));
        if (static_cast<int>(meets.size()) > cap)
          throw Error(Errc::ExplosionCap, "generated family exceeds the cap");
        i = 0;
        j = static_cast<std::size_t>(-1);
      }
    }

  std::vector<LSubset> opens = meets;
  opens.push_back(empty_subset(space));
  canonicalize(opens);
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      LSubset u = subset_join(opens[i], opens[j]);
      if (!value_member(opens, u)) {
        opens.insert(std::lower_bound(opens.begin(), opens.end(), u,
                                      subset_value_less),
                     std::move(u));
        if (static_cast<int>(opens.size()) > cap)
          throw Error(Errc::ExplosionCap, "generated family exceeds the cap");
        i = 0;
        j = static_cast<std::size_t>(-1);
      }
    }

  return make_topology(std::move(space), std::move(opens));
}

LSubset interior(const LTopSpace& t, const LSubset& b) {
  if (!same_space(b.parent, t.space))
    throw Error(Errc::ParentMismatch, "subset does not live on the carrier");
  LSubset acc = empty_subset(t.space);
  for (const auto& u : t.opens)
    if (subset_leq(u, b)) acc = subset_join(acc, u);
  return acc;
}

std::vector<LSubset> closed_family(const LTopSpace& t) {
  if (!t.space->monoid()->classify().is_mv)
    throw Error(Errc::NotMVAlgebra,
                "closed sets need an involutive (MV) monoid");
  std::vector<LSubset> closed;
  closed.reserve(t.opens.size());
  for (const auto& u : t.opens) closed.push_back(subset_complement(u));
  canonicalize(closed);
  return closed;
}

LSubset closure(const LTopSpace& t, const LSubset& a) {
  if (!same_space(a.parent, t.space))
    throw Error(Errc::ParentMismatch, "subset does not live on the carrier");
  LSubset acc = full_subset(t.space);
  for (const auto& c : closed_family(t))
    if (subset_leq(a, c)) acc = subset_meet(acc, c);
  return acc;
}

ContinuityVerdict is_continuous(const FuzzyFunction& f, const LTopSpace& dom,
                                const LTopSpace& cod) {
  if (!same_space(f.dom(), dom.space) || !same_space(f.cod(), cod.space))
    throw Error(Errc::CarrierMismatch,
                "function does not run between the given spaces");
  for (const auto& v : cod.opens)
    if (!dom.contains(preimage(f, v))) return {false, v};
  return {};
}

namespace {

// Candidate test sets for the interior/closure exchange conditions: the
// full fuzzy powerset when small enough, otherwise a deterministic sample
// that always includes the members needed for exactness of the audit.
std::vector<LSubset> candidate_subsets(const LvSetPtr& space,
                                       std::vector<LSubset> seeds,
                                       long long cap) {
  const GLMonoid& L = *space->monoid();
  long long total = 1;
  bool enumerate = true;
  for (int i = 0; i < space->size(); ++i) {
    total *= L.size();
    if (total > cap) {
      enumerate = false;
      break;
    }
  }
  std::vector<LSubset> out = std::move(seeds);
  for (Elem c = 0; c < L.size(); ++c)
    out.push_back(constant_subset(space, c));
  if (enumerate) {
    LSubset cur = empty_subset(space);
    for (long long code = 0; code < total; ++code) {
      long long v = code;
      for (int i = 0; i < space->size(); ++i) {
        cur.values[i] = static_cast<Elem>(v % L.size());
        v /= L.size();
      }
      out.push_back(cur);
    }
  } else {
    Rng rng(0x5eedULL + static_cast<std::uint64_t>(space->size()) * 131 +
            static_cast<std::uint64_t>(L.size()));
    for (int k = 0; k < 256; ++k) {
      LSubset cur = empty_subset(space);
      for (int i = 0; i < space->size(); ++i)
        cur.values[i] = static_cast<Elem>(rng.below(L.size()));
      out.push_back(cur);
    }
  }
  canonicalize(out);
  return out;
}

bool is_base_of(const std::vector<LSubset>& base, const LTopSpace& t) {
  for (const auto& b : base)
    if (!t.contains(b)) return false;
  for (const auto& v : t.opens) {
    LSubset acc = empty_subset(t.space);
    for (const auto& b : base)
      if (subset_leq(b, v)) acc = subset_join(acc, b);
    if (!(acc == v)) return false;
  }
  return true;
}

}  // namespace

CheckReport continuity_audit(const FuzzyFunction& f, const LTopSpace& dom,
                             const LTopSpace& cod,
                             const std::vector<LSubset>& base,
                             const std::vector<LSubset>& subbase) {
  const GLMonoid& L = *f.dom()->monoid();
  if (!is_base_of(base, cod))
    throw Error(Errc::BaseDoesNotGenerate,
                "given base does not generate the codomain topology");
  {
    LTopSpace regen = generate_topology(cod.space, subbase, false,
                                        std::max<int>(4096, static_cast<int>(cod.opens.size()) * 2));
    if (!(regen.opens.size() == cod.opens.size() &&
          std::equal(regen.opens.begin(), regen.opens.end(), cod.opens.begin(),
                     [](const LSubset& a, const LSubset& b) {
                       return a.values == b.values;
                     })))
      throw Error(Errc::BaseDoesNotGenerate,
                  "given subbase does not generate the codomain topology");
  }

  CheckReport rep;
  const bool mu_top = f.definedness() == L.top();
  const bool mv = L.classify().is_mv;

  ContinuityVerdict v1 = is_continuous(f, dom, cod);
  const bool c1 = v1.continuous;
  rep.add("1con_continuous", c1,
          v1.witness ? std::vector<std::string>{subset_str(*v1.witness)}
                     : std::vector<std::string>{},
          c1 ? "" : "witness open has non-open preimage");

  bool c2 = true;
  for (const auto& b : base)
    if (!dom.contains(preimage(f, b))) {
      c2 = false;
      break;
    }
  rep.add("2con_base_preimages_open", c2);

  bool c3 = true;
  {
    std::vector<LSubset> cands = candidate_subsets(cod.space, cod.opens, 4096);
    for (const auto& b : cands) {
      LSubset lhs = preimage(f, interior(cod, b));
      LSubset rhs = interior(dom, preimage(f, b));
      if (!subset_leq(lhs, rhs)) {
        c3 = false;
        break;
      }
    }
  }
  rep.add("3con_interior_exchange", c3);

  bool c4 = true;
  for (const auto& s : subbase)
    if (!dom.contains(preimage(f, s))) {
      c4 = false;
      break;
    }
  rep.add("4con_subbase_preimages_open", c4);

  rep.add("equiv_1con_2con", c1 == c2);
  rep.add("equiv_1con_3con", c1 == c3);
  if (mu_top)
    rep.add("equiv_1con_4con", c1 == c4);
  else
    rep.add("equiv_1con_4con", true, {},
            std::string("not asserted at definedness below top (1con=") +
                (c1 ? "T" : "F") + ", 4con=" + (c4 ? "T" : "F") + ")");

  if (!mv) {
    rep.add("mv_conditions", true, {},
            "5con/6con skipped: monoid is not an MV-algebra");
    return rep;
  }

  std::vector<LSubset> dom_closed = closed_family(dom);
  std::vector<LSubset> cod_closed = closed_family(cod);
  bool c5 = true;
  for (const auto& b : cod_closed)
    if (!value_member(dom_closed, preimage(f, b))) {
      c5 = false;
      break;
    }
  rep.add("5con_closed_preimages_closed", c5);

  bool c6 = true;
  {
    std::vector<LSubset> seeds;
    for (const auto& b : cod_closed) seeds.push_back(preimage(f, b));
    std::vector<LSubset> cands =
        candidate_subsets(dom.space, std::move(seeds), 4096);
    for (const auto& a : cands) {
      LSubset lhs = image(f, closure(dom, a));
      LSubset rhs = closure(cod, image(f, a));
      if (!subset_leq(lhs, rhs)) {
        c6 = false;
        break;
      }
    }
  }
  rep.add("6con_closure_exchange", c6);

  if (mu_top) {
    rep.add("equiv_1con_5con", c1 == c5);
    rep.add("equiv_1con_6con", c1 == c6);
  } else {
    rep.add("equiv_1con_5con", true, {},
            std::string("not asserted at definedness below top (1con=") +
                (c1 ? "T" : "F") + ", 5con=" + (c5 ? "T" : "F") + ")");
    rep.add("equiv_1con_6con", true, {},
            std::string("not asserted at definedness below top (1con=") +
                (c1 ? "T" : "F") + ", 6con=" + (c6 ? "T" : "F") + ")");
  }
  return rep;
}

LTopSpace initial_topology(const FuzzyFunction& f, const LTopSpace& cod) {
  const GLMonoid& L = *f.dom()->monoid();
  if (!same_space(f.cod(), cod.space))
    throw Error(Errc::CarrierMismatch,
                "function does not land in the given space");
  if (f.definedness() != L.top())
    throw Error(Errc::MuNotTop,
                "initial lift needs definedness top (preimage of the full "
                "subset must be full)");
  std::vector<LSubset> opens;
  opens.reserve(cod.opens.size());
  for (const auto& v : cod.opens) opens.push_back(preimage(f, v));
  canonicalize(opens);
  return make_topology(f.dom(), std::move(opens));
}

ProductSpace product_space(const std::vector<LTopSpace>& factors,
                           int carrier_cap, int open_cap) {
  std::vector<LvSetPtr> sets;
  sets.reserve(factors.size());
  for (const auto& t : factors) sets.push_back(t.space);
  ProductSet p = product_lvset(std::move(sets), carrier_cap);

  std::vector<LSubset> cylinders;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (const auto& u : factors[i].opens) {
      LSubset cyl{p.space, std::vector<Elem>(p.space->size())};
      for (int t = 0; t < p.space->size(); ++t)
        cyl.values[t] = u.values[p.coords_of(t)[i]];
      cylinders.push_back(std::move(cyl));
    }
  LTopSpace top = generate_topology(p.space, std::move(cylinders), false,
                                    open_cap);
  return {std::move(top), std::move(p)};
}

LTopSpace subspace_space(const LTopSpace& t, std::span<const int> keep) {
  LvSetPtr sub = t.space->restrict(keep);
  std::vector<LSubset> opens;
  opens.reserve(t.opens.size());
  for (const auto& u : t.opens) {
    LSubset r{sub, std::vector<Elem>(sub->size())};
    for (std::size_t i = 0; i < keep.size(); ++i) r.values[i] = u.values[keep[i]];
    opens.push_back(std::move(r));
  }
  canonicalize(opens);
  return make_topology(std::move(sub), std::move(opens));
}

CoproductSpace coproduct_space(const std::vector<LTopSpace>& factors,
                               int open_cap) {
  std::vector<LvSetPtr> sets;
  sets.reserve(factors.size());
  for (const auto& t : factors) sets.push_back(t.space);
  CoproductSet c = coproduct_lvset(std::move(sets));

  const GLMonoid& L = *c.space->monoid();
  std::vector<LSubset> subbase;
  for (std::size_t b = 0; b < factors.size(); ++b)
    for (const auto& u : factors[b].opens) {
      LSubset ext{c.space, std::vector<Elem>(c.space->size(), L.bot())};
      for (int i = 0; i < factors[b].space->size(); ++i)
        ext.values[c.offsets[b] + i] = u.values[i];
      subbase.push_back(std::move(ext));
    }
  LTopSpace top = generate_topology(c.space, std::move(subbase), false,
                                    open_cap);
  return {std::move(top), std::move(c)};
}

QuotientSpace quotient_space(const LTopSpace& t, std::span<const int> q,
                             std::vector<std::string> cod_labels) {
  const GLMonoid& L = *t.space->monoid();
  const int nx = t.space->size();
  const int ny = static_cast<int>(cod_labels.size());
  if (static_cast<int>(q.size()) != nx)
    throw Error(Errc::DimensionMismatch, "quotient map must be total");
  std::vector<bool> hit(ny, false);
  for (int v : q) {
    if (v < 0 || v >= ny)
      throw Error(Errc::CarrierMismatch, "quotient map value out of range");
    hit[v] = true;
  }
  for (int y = 0; y < ny; ++y)
    if (!hit[y])
      throw Error(Errc::NotSurjective, "quotient map misses a point",
                  {cod_labels[y]});

  Matrix raw(nx, ny, L.bot());
  for (int x = 0; x < nx; ++x)
    for (int xp = 0; xp < nx; ++xp)
      raw.at(x, q[xp]) = L.join(raw.at(x, q[xp]), t.space->eq(x, xp));

  LvSetPtr cod = image_equality(raw, t.space, std::move(cod_labels));
  FuzzyFunction lift = [&] {
    try {
      return make_ff(t.space, cod, raw);
    } catch (const Error& e) {
      if (e.code() == Errc::ValidationFailure)
        throw Error(Errc::ImageEqualityInvalid,
                    "quotient lift is not a fuzzy function against the "
                    "transported equality",
                    e.witness());
      throw;
    }
  }();

  // tau_Y = pushforwards of fiber-constant opens, then the extensional ones.
  std::vector<LSubset> opens;
  for (const auto& u : t.opens) {
    LSubset v{cod, std::vector<Elem>(ny, L.bot())};
    bool fiber_constant = true;
    std::vector<bool> seen(ny, false);
    for (int x = 0; x < nx && fiber_constant; ++x) {
      if (!seen[q[x]]) {
        seen[q[x]] = true;
        v.values[q[x]] = u.values[x];
      } else if (v.values[q[x]] != u.values[x]) {
        fiber_constant = false;
      }
    }
    if (fiber_constant && is_extensional_subset(v).pass)
      opens.push_back(std::move(v));
  }
  canonicalize(opens);
  LTopSpace quot = make_topology(cod, std::move(opens));
  return {std::move(quot), std::move(lift), std::vector<int>(q.begin(), q.end())};
}

HomeoVerdict homeomorphism_degree(const FuzzyFunction& f, const LTopSpace& dom,
                                  const LTopSpace& cod) {
  const GLMonoid& L = *f.dom()->monoid();
  if (!f.is_injective()) return {false, L.bot(), "not injective"};
  if (!is_continuous(f, dom, cod).continuous)
    return {false, L.bot(), "not continuous"};
  FuzzyFunction inv = invert(f);
  if (!is_continuous(inv, cod, dom).continuous)
    return {false, L.bot(), "inverse not continuous"};
  return {true, L.meet(f.definedness(), f.surjectivity()), ""};
}

}  // namespace fuzztop
