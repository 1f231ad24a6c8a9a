#include "fuzztop/glmonoid.hpp"

#include <algorithm>

#include "fuzztop/error.hpp"

namespace fuzztop {

GLMonoid::GLMonoid(Lattice lattice, std::vector<Elem> tnorm_table,
                   std::string name)
    : lat_(std::move(lattice)), tnorm_(std::move(tnorm_table)),
      name_(std::move(name)) {
  const int n = lat_.size();
  if (static_cast<int>(tnorm_.size()) != n * n)
    throw Error(Errc::DimensionMismatch, "t-norm table must be size x size");
  for (Elem v : tnorm_)
    if (v < 0 || v >= n)
      throw Error(Errc::ValueNotInCarrier, "t-norm table entry out of range");

  resid_.assign(static_cast<std::size_t>(n) * n, lat_.bot());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem r = lat_.bot();
      for (Elem l = 0; l < n; ++l)
        if (lat_.leq(tnorm(a, l), b)) r = lat_.join(r, l);
      resid_[idx(a, b)] = r;
    }
}

CheckReport GLMonoid::validate() const {
  const int n = lat_.size();
  CheckReport rep;
  auto lbl = [&](Elem a) { return lat_.label(a); };

  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          if (lat_.leq(a, b) && !lat_.leq(tnorm(a, c), tnorm(b, c))) {
            ok = false;
            w = {lbl(a), lbl(b), lbl(c)};
          }
    rep.add("monotone", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        if (tnorm(a, b) != tnorm(b, a)) {
          ok = false;
          w = {lbl(a), lbl(b)};
        }
    rep.add("commutative", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          if (tnorm(a, tnorm(b, c)) != tnorm(tnorm(a, b), c)) {
            ok = false;
            w = {lbl(a), lbl(b), lbl(c)};
          }
    rep.add("associative", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      if (tnorm(a, lat_.top()) != a) {
        ok = false;
        w = {lbl(a)};
      }
    rep.add("top_unit", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      if (tnorm(a, lat_.bot()) != lat_.bot()) {
        ok = false;
        w = {lbl(a)};
      }
    rep.add("bot_zero", ok, w);
  }
  {
    // Binary joins suffice: finite joins are iterated binary ones and the
    // empty join is covered by bot_zero.
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          if (tnorm(a, lat_.join(b, c)) !=
              lat_.join(tnorm(a, b), tnorm(a, c))) {
            ok = false;
            w = {lbl(a), lbl(b), lbl(c)};
          }
    rep.add("join_distributive", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b) {
        if (!lat_.leq(a, b)) continue;
        bool found = false;
        for (Elem g = 0; g < n && !found; ++g)
          if (tnorm(b, g) == a) found = true;
        if (!found) {
          ok = false;
          w = {lbl(a), lbl(b)};
        }
      }
    rep.add("divisible", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          if (lat_.leq(tnorm(a, b), c) != lat_.leq(a, residuum(b, c))) {
            ok = false;
            w = {lbl(a), lbl(b), lbl(c)};
          }
    rep.add("adjunction", ok, w);
  }
  return rep;
}

CheckReport GLMonoid::derived_properties() const {
  const int n = lat_.size();
  CheckReport rep;
  auto lbl = [&](Elem a) { return lat_.label(a); };

  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        if ((residuum(a, b) == lat_.top()) != lat_.leq(a, b)) {
          ok = false;
          w = {lbl(a), lbl(b)};
        }
    rep.add("i_residuum_top_iff_leq", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          if (residuum(a, lat_.meet(b, c)) !=
              lat_.meet(residuum(a, b), residuum(a, c))) {
            ok = false;
            w = {lbl(a), lbl(b), lbl(c)};
          }
    rep.add("ii_residuum_meet_right", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          if (residuum(lat_.join(a, b), c) !=
              lat_.meet(residuum(a, c), residuum(b, c))) {
            ok = false;
            w = {lbl(a), lbl(b), lbl(c)};
          }
    rep.add("iii_residuum_join_left", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          if (tnorm(a, lat_.meet(b, c)) !=
              lat_.meet(tnorm(a, b), tnorm(a, c))) {
            ok = false;
            w = {lbl(a), lbl(b), lbl(c)};
          }
    rep.add("v_tnorm_meet_distributive", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem c = 0; c < n && ok; ++c)
          if (!lat_.leq(tnorm(residuum(a, c), residuum(c, b)),
                        residuum(a, b))) {
            ok = false;
            w = {lbl(a), lbl(b), lbl(c)};
          }
    rep.add("vi_residuum_chain", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        if (!lat_.leq(tnorm(a, b), lat_.join(square(a), square(b)))) {
          ok = false;
          w = {lbl(a), lbl(b)};
        }
    rep.add("vii_tnorm_below_join_of_squares", ok, w);
  }
  return rep;
}

GLMonoid::Classification GLMonoid::classify() const {
  const int n = lat_.size();
  Classification c;
  c.is_heyting = true;
  for (Elem a = 0; a < n && c.is_heyting; ++a)
    for (Elem b = 0; b < n && c.is_heyting; ++b)
      if (tnorm(a, b) != lat_.meet(a, b)) c.is_heyting = false;
  c.is_mv = true;
  for (Elem a = 0; a < n && c.is_mv; ++a)
    if (involution(involution(a)) != a) c.is_mv = false;
  return c;
}

namespace {

MonoidPtr make_validated(Lattice lat, std::vector<Elem> table,
                         std::string name) {
  auto m = std::make_shared<GLMonoid>(std::move(lat), std::move(table),
                                      std::move(name));
  CheckReport rep = m->validate();
  if (!rep.all_pass()) {
    for (const auto& e : rep.entries)
      if (!e.pass)
        throw Error(Errc::ValidationFailure,
                    "catalog monoid fails axiom " + e.law, e.witness);
  }
  return m;
}

}  // namespace

MonoidPtr GLMonoid::boolean() { return lukasiewicz(2); }

MonoidPtr GLMonoid::lukasiewicz(int n) {
  if (n < 2) throw Error(Errc::ChainTooShort, "chain length must be >= 2");
  Lattice lat = Lattice::chain(n);
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t[a * static_cast<std::size_t>(n) + b] = std::max(a + b - (n - 1), 0);
  std::string name = n == 2 ? "boolean" : "lukasiewicz" + std::to_string(n);
  return make_validated(std::move(lat), std::move(t), std::move(name));
}

MonoidPtr GLMonoid::goedel(int n) {
  if (n < 2) throw Error(Errc::ChainTooShort, "chain length must be >= 2");
  Lattice lat = Lattice::chain(n);
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t[a * static_cast<std::size_t>(n) + b] = std::min(a, b);
  return make_validated(std::move(lat), std::move(t),
                        "goedel" + std::to_string(n));
}

MonoidPtr GLMonoid::product(const MonoidPtr& a, const MonoidPtr& b) {
  const int na = a->size(), nb = b->size();
  Lattice lat = Lattice::product(a->lattice(), b->lattice());
  const int n = na * nb;
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  auto code = [&](Elem x, Elem y) { return x * nb + y; };
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y)
      for (Elem u = 0; u < na; ++u)
        for (Elem v = 0; v < nb; ++v)
          t[code(x, y) * static_cast<std::size_t>(n) + code(u, v)] =
              code(a->tnorm(x, u), b->tnorm(y, v));
  return make_validated(std::move(lat), std::move(t),
                        "product(" + a->name() + "," + b->name() + ")");
}

MonoidPtr GLMonoid::from_catalog(const std::string& name, int n) {
  if (name == "boolean") {
    if (n != 0 && n != 2)
      throw Error(Errc::UnknownCatalogName, "boolean is the 2-chain");
    return boolean();
  }
  if (name == "lukasiewicz") return lukasiewicz(n);
  if (name == "goedel") return goedel(n);
  throw Error(Errc::UnknownCatalogName, "unknown catalog monoid: " + name);
}

}  // namespace fuzztop
