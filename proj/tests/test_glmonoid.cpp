#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuzztop/error.hpp"
#include "fuzztop/glmonoid.hpp"
#include "oracles.hpp"

using namespace fuzztop;

namespace {

std::vector<MonoidPtr> catalog() {
  return {GLMonoid::boolean(),       GLMonoid::lukasiewicz(3),
          GLMonoid::lukasiewicz(5),  GLMonoid::goedel(3),
          GLMonoid::goedel(5),
          GLMonoid::product(GLMonoid::lukasiewicz(3), GLMonoid::lukasiewicz(3))};
}

}  // namespace

TEST_CASE("two-chain is the smallest admissible lattice") {
  Lattice l = Lattice::chain(2);
  CHECK(l.size() == 2);
  CHECK(l.bot() == 0);
  CHECK(l.top() == 1);
  CHECK(l.label(0) == "0");
  CHECK(l.label(1) == "1");
  CHECK_THROWS_AS(Lattice::chain(1), Error);
}

TEST_CASE("diamond order builds; bounds verified against the order") {
  // bot < a,b < top with a,b incomparable
  std::vector<std::uint8_t> leq = {
      1, 1, 1, 1,  //
      0, 1, 0, 1,  //
      0, 0, 1, 1,  //
      0, 0, 0, 1,
  };
  Lattice l = Lattice::build(4, leq, {"bot", "a", "b", "top"});
  CHECK(l.join(1, 2) == 3);
  CHECK(l.meet(1, 2) == 0);
  // least upper bounds recomputed from the raw order
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      Elem j = l.join(a, b);
      CHECK(l.leq(a, j));
      CHECK(l.leq(b, j));
      for (Elem u = 0; u < 4; ++u)
        if (l.leq(a, u) && l.leq(b, u)) CHECK(l.leq(j, u));
    }
}

TEST_CASE("M3 is rejected with a distributivity witness") {
  // bot, three incomparable atoms, top: modular but not distributive
  const int n = 5;
  std::vector<std::uint8_t> leq(n * n, 0);
  auto set = [&](int a, int b) { leq[a * n + b] = 1; };
  for (int i = 0; i < n; ++i) set(i, i);
  for (int i = 1; i <= 3; ++i) {
    set(0, i);
    set(i, 4);
  }
  set(0, 4);
  try {
    Lattice::build(n, leq, {"bot", "p", "q", "r", "top"});
    FAIL("expected NotDistributive");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDistributive);
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("degenerate one-point order is rejected") {
  try {
    Lattice::build(1, {1}, {"*"});
    FAIL("expected DegenerateLattice");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateLattice);
  }
}

TEST_CASE("catalog t-norms take their defining values") {
  MonoidPtr l3 = GLMonoid::lukasiewicz(3);
  Elem half = *l3->lattice().find_label("1/2");
  CHECK(l3->tnorm(half, half) == l3->bot());

  MonoidPtr g3 = GLMonoid::goedel(3);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) CHECK(g3->tnorm(a, b) == g3->meet(a, b));
  CHECK(g3->classify().is_heyting);

  MonoidPtr b2 = GLMonoid::boolean();
  for (Elem a = 0; a < 2; ++a)
    for (Elem b = 0; b < 2; ++b) CHECK(b2->tnorm(a, b) == b2->meet(a, b));
}

TEST_CASE("catalog construction rejects bad names and short chains") {
  CHECK_THROWS_AS(GLMonoid::from_catalog("nilpotent", 3), Error);
  CHECK_THROWS_AS(GLMonoid::from_catalog("lukasiewicz", 1), Error);
  CHECK_NOTHROW(GLMonoid::from_catalog("boolean", 0));
}

TEST_CASE("axioms and adjunction pass on the whole catalog") {
  for (const auto& m : catalog()) {
    CheckReport rep = m->validate();
    INFO(m->name());
    CHECK(rep.entries.size() == 8);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("goedel divisibility realizes gamma = alpha below beta") {
  MonoidPtr g = GLMonoid::goedel(3);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b)
      if (g->leq(a, b)) CHECK(g->tnorm(b, a) == a);
}

TEST_CASE("a planted unit violation is caught with a witness") {
  Lattice chain = Lattice::chain(3);
  std::vector<Elem> table(9);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) table[a * 3 + b] = std::min(a, b);
  table[1 * 3 + 2] = 0;  // 1/2 * top = 0 breaks the unit law
  table[2 * 3 + 1] = 0;
  GLMonoid broken(chain, table, "broken");
  CheckReport rep = broken.validate();
  CHECK(!rep.all_pass());
  const CheckEntry* unit = rep.find("top_unit");
  REQUIRE(unit != nullptr);
  CHECK(!unit->pass);
  CHECK(unit->witness == std::vector<std::string>{"1/2"});
}

TEST_CASE("residuum table matches the explicit join formula everywhere") {
  for (const auto& m : catalog())
    for (Elem a = 0; a < m->size(); ++a)
      for (Elem b = 0; b < m->size(); ++b)
        CHECK(m->residuum(a, b) == oracles::brute_residuum(*m, a, b));
}

TEST_CASE("residuum special values") {
  MonoidPtr l3 = GLMonoid::lukasiewicz(3);
  Elem half = *l3->lattice().find_label("1/2");
  CHECK(l3->residuum(half, l3->bot()) == half);
  for (const auto& m : catalog()) {
    for (Elem a = 0; a < m->size(); ++a) {
      CHECK(m->residuum(m->bot(), a) == m->top());
      for (Elem b = 0; b < m->size(); ++b)
        CHECK((m->residuum(a, b) == m->top()) == m->leq(a, b));
    }
  }
}

TEST_CASE("derived properties hold on the catalog") {
  for (const auto& m : catalog()) {
    CheckReport rep = m->derived_properties();
    INFO(m->name());
    CHECK(rep.entries.size() == 6);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("classification separates the catalog") {
  CHECK(GLMonoid::boolean()->classify().is_heyting);
  CHECK(GLMonoid::boolean()->classify().is_mv);
  for (int n : {3, 5, 11}) {
    auto c = GLMonoid::lukasiewicz(n)->classify();
    CHECK(c.is_mv);
    CHECK(!c.is_heyting);
  }
  for (int n : {3, 5}) {
    auto c = GLMonoid::goedel(n)->classify();
    CHECK(c.is_heyting);
    CHECK(!c.is_mv);
  }
  // witness of the MV failure: double negation of 1/2 lands at top
  MonoidPtr g3 = GLMonoid::goedel(3);
  Elem half = *g3->lattice().find_label("1/2");
  CHECK(g3->involution(g3->involution(half)) == g3->top());
  // product of MV chains stays MV
  auto prod =
      GLMonoid::product(GLMonoid::lukasiewicz(3), GLMonoid::lukasiewicz(3));
  CHECK(prod->classify().is_mv);
  CHECK(!prod->classify().is_heyting);
}

TEST_CASE("mv involution reverses order and is involutive") {
  for (const auto& m : catalog()) {
    if (!m->classify().is_mv) continue;
    for (Elem a = 0; a < m->size(); ++a) {
      CHECK(m->involution(m->involution(a)) == a);
      for (Elem b = 0; b < m->size(); ++b)
        if (m->leq(a, b)) CHECK(m->leq(m->involution(b), m->involution(a)));
    }
  }
}

TEST_CASE("join of squares dominates the square of the join on chains") {
  // over every subset of a catalog chain of length <= 6
  for (int n : {2, 3, 4, 5, 6}) {
    for (auto m : {GLMonoid::lukasiewicz(n), GLMonoid::goedel(n)}) {
      for (int mask = 0; mask < (1 << n); ++mask) {
        Elem join = m->bot(), joinsq = m->bot();
        for (Elem a = 0; a < n; ++a)
          if (mask & (1 << a)) {
            join = m->join(join, a);
            joinsq = m->join(joinsq, m->square(a));
          }
        CHECK(m->leq(m->square(join), joinsq));
      }
    }
  }
}

TEST_CASE("product monoid works componentwise") {
  auto a = GLMonoid::lukasiewicz(3);
  auto p = GLMonoid::product(a, a);
  CHECK(p->size() == 9);
  // (1/2,1) * (1/2,1/2) = (0,1/2)
  Elem x = *p->lattice().find_label("(1/2,1)");
  Elem y = *p->lattice().find_label("(1/2,1/2)");
  Elem want = *p->lattice().find_label("(0,1/2)");
  CHECK(p->tnorm(x, y) == want);
}

TEST_CASE("chain labels are reduced fractions") {
  auto l5 = GLMonoid::lukasiewicz(5);
  CHECK(l5->label(0) == "0");
  CHECK(l5->label(1) == "1/4");
  CHECK(l5->label(2) == "1/2");
  CHECK(l5->label(3) == "3/4");
  CHECK(l5->label(4) == "1");
  auto l11 = GLMonoid::lukasiewicz(11);
  CHECK(l11->label(2) == "1/5");
  CHECK(l11->label(5) == "1/2");
}
