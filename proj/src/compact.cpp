#include "fuzztop/compact.hpp"

#include <algorithm>

#include "fuzztop/error.hpp"

namespace fuzztop {

namespace {

bool dominates(const GLMonoid& L, const LSubset& s, Elem c) {
  for (Elem v : s.values)
    if (!L.leq(c, v)) return false;
  return true;
}

bool under(const GLMonoid& L, const LSubset& s, Elem c) {
  for (Elem v : s.values)
    if (!L.leq(v, c)) return false;
  return true;
}

}  // namespace

CompactVerdict is_compact(const LTopSpace& t, Elem alpha, Elem beta) {
  const GLMonoid& L = *t.space->monoid();
  for (int i = 0; i < static_cast<int>(t.opens.size()); ++i) {
    const LSubset& w = t.opens[i];
    if (dominates(L, w, alpha) && !dominates(L, w, beta)) return {false, {i}};
  }
  return {};
}

CompactnessSpectrum spectrum(const LTopSpace& t) {
  const GLMonoid& L = *t.space->monoid();
  CompactnessSpectrum s;
  s.monoid = t.space->monoid();
  s.table.assign(static_cast<std::size_t>(L.size()) * L.size(), 0);
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      s.table[static_cast<std::size_t>(a) * L.size() + b] =
          is_compact(t, a, b).compact ? 1 : 0;
  return s;
}

bool lowen_compact(const LTopSpace& t) {
  const GLMonoid& L = *t.space->monoid();
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (L.leq(b, a) && b != a && !is_compact(t, a, b).compact) return false;
  return true;
}

bool chang_compact(const LTopSpace& t) {
  const GLMonoid& L = *t.space->monoid();
  return is_compact(t, L.top(), L.top()).compact;
}

bool closed_char_compact(const LTopSpace& t, Elem alpha, Elem beta) {
  const GLMonoid& L = *t.space->monoid();
  Elem ac = L.involution(alpha), bc = L.involution(beta);
  // Closed families are meet-closed on a finite carrier, so every family
  // meet is realized by a single closed set.
  for (const auto& c : closed_family(t))
    if (!under(L, c, bc) && under(L, c, ac)) return false;
  return true;
}

bool lset_compact(const LTopSpace& t, const LSubset& s, Elem alpha,
                  Elem beta) {
  if (!same_space(s.parent, t.space))
    throw Error(Errc::ParentMismatch, "subset does not live on the carrier");
  const GLMonoid& L = *t.space->monoid();
  Elem ac = L.involution(alpha), bc = L.involution(beta);
  for (const auto& c : closed_family(t)) {
    LSubset cut = subset_meet(s, c);
    if (!under(L, cut, bc) && under(L, cut, ac)) return false;
  }
  return true;
}

bool point_preimage_compact(const FuzzyFunction& f, const LTopSpace& dom,
                            int y0, Elem alpha, Elem beta) {
  if (!same_space(f.dom(), dom.space))
    throw Error(Errc::CarrierMismatch,
                "function does not start from the given space");
  return lset_compact(dom, point_preimage(f, y0), alpha, beta);
}

PerfectVerdict is_perfect(const FuzzyFunction& f, const LTopSpace& dom,
                          const LTopSpace& cod, Elem alpha, Elem beta) {
  if (!f.dom()->monoid()->classify().is_mv)
    throw Error(Errc::NotMVAlgebra, "perfectness needs an MV monoid");
  if (!is_continuous(f, dom, cod).continuous)
    throw Error(Errc::NotContinuous, "perfectness is defined for continuous functions");

  PerfectVerdict out;
  out.closed_map = true;
  std::vector<LSubset> cod_closed = closed_family(cod);
  for (const auto& c : closed_family(dom)) {
    LSubset img = image(f, c);
    auto it = std::lower_bound(cod_closed.begin(), cod_closed.end(), img,
                               subset_value_less);
    if (it == cod_closed.end() || it->values != img.values) {
      out.closed_map = false;
      out.closed_witness = c;
      break;
    }
  }

  bool fibers_ok = true;
  for (int y = 0; y < f.cod()->size(); ++y)
    if (!point_preimage_compact(f, dom, y, alpha, beta)) {
      fibers_ok = false;
      out.fiber_witness = y;
      break;
    }

  out.perfect = out.closed_map && fibers_ok;
  return out;
}

}  // namespace fuzztop
