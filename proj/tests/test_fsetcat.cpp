#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuzztop/error.hpp"
#include "fuzztop/fsetcat.hpp"
#include "fuzztop/harness.hpp"
#include "fuzztop/probes.hpp"

using namespace fuzztop;

TEST_CASE("preimage equality of a crisp injective graph is crisp") {
  MonoidPtr m = GLMonoid::boolean();
  LvSetPtr y = LValuedSet::crisp(m, {"u", "v", "w"});
  Matrix raw(2, 3, m->bot());
  raw.at(0, 0) = m->top();
  raw.at(1, 2) = m->top();
  LvSetPtr x = preimage_equality(raw, y, {"a", "b"});
  CHECK(x->is_crisp());
  CHECK(x->size() == 2);
}

TEST_CASE("preimage equality on a singleton domain is the top matrix") {
  MonoidPtr m = GLMonoid::lukasiewicz(3);
  LvSetPtr y = LValuedSet::crisp(m, {"u", "v"});
  Matrix raw(1, 2, m->bot());
  raw.at(0, 0) = m->top();
  LvSetPtr x = preimage_equality(raw, y, {"a"});
  CHECK(x->size() == 1);
  CHECK(x->eq(0, 0) == m->top());
}

TEST_CASE("preimage equality evaluates the meet of residua") {
  MonoidPtr m = GLMonoid::lukasiewicz(3);
  LvSetPtr y = LValuedSet::crisp(m, {"y"});
  Matrix raw(2, 1);
  raw.at(0, 0) = 2;
  raw.at(1, 0) = 1;
  LvSetPtr x = preimage_equality(raw, y, {"a", "b"});
  CHECK(x->eq(0, 1) == 1);  // (T -> 1/2) /\ (1/2 -> T) = 1/2
  // the matrix is now a morphism out of the transported equality
  CHECK_NOTHROW(make_ff(x, y, raw));
}

TEST_CASE("preimage equality rejects raw matrices violating (1ff)/(3ff)") {
  MonoidPtr m = GLMonoid::lukasiewicz(3);
  Matrix eq(2, 2, m->top());
  eq.at(0, 1) = 0;
  eq.at(1, 0) = 0;
  LvSetPtr y = LValuedSet::make(m, {"u", "v"}, eq);
  Matrix bad3(1, 2, 2);  // row (T,T) but E_Y(u,v) = bot
  try {
    preimage_equality(bad3, y, {"a"});
    FAIL("expected RawViolates3ff");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RawViolates3ff);
  }
  Matrix eq2(2, 2, m->top());
  eq2.at(0, 1) = 2;
  eq2.at(1, 0) = 2;
  LvSetPtr y2 = LValuedSet::make(m, {"u", "v"}, eq2);
  Matrix bad1(1, 2, 0);
  bad1.at(0, 0) = 2;  // (T, 0) with E_Y = top violates (1ff)
  try {
    preimage_equality(bad1, y2, {"a"});
    FAIL("expected RawViolates1ff");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RawViolates1ff);
  }
}

TEST_CASE("image equality of a crisp surjection graph is crisp") {
  MonoidPtr m = GLMonoid::boolean();
  LvSetPtr x = LValuedSet::crisp(m, {"a", "b", "c"});
  Matrix raw(3, 2, m->bot());
  raw.at(0, 0) = m->top();
  raw.at(1, 0) = m->top();
  raw.at(2, 1) = m->top();
  LvSetPtr y = image_equality(raw, x, {"u", "v"});
  CHECK(y->is_crisp());
}

TEST_CASE("image equality of the equality matrix is the equality itself") {
  MonoidPtr m = GLMonoid::lukasiewicz(3);
  Matrix eq(2, 2, m->top());
  eq.at(0, 1) = 1;
  eq.at(1, 0) = 1;
  LvSetPtr x = LValuedSet::make(m, {"a", "b"}, eq);
  LvSetPtr y = image_equality(x->equality(), x, {"a", "b"});
  CHECK(y->equality() == x->equality());
}

TEST_CASE("image equality needs top surjectivity") {
  MonoidPtr m = GLMonoid::lukasiewicz(3);
  LvSetPtr x = LValuedSet::crisp(m, {"a"});
  Matrix raw(1, 1, 1);  // single 1/2 entry: sigma = 1/2
  try {
    image_equality(raw, x, {"u"});
    FAIL("expected NotTopSurjective");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotTopSurjective);
    CHECK(e.witness() == std::vector<std::string>{"u"});
  }
}

TEST_CASE("pinned counterexample: image equality can fail transitivity") {
  // Luk5 chain, four points with E(a,b)=E(c,d)=3/4, E(b,c)=1/4, rest 0;
  // collapsing {b,c} transports to E_Y(0,1)=E_Y(1,2)=3/4 but E_Y(0,2)=0.
  MonoidPtr m = GLMonoid::lukasiewicz(5);
  Matrix eq(4, 4, m->bot());
  for (int i = 0; i < 4; ++i) eq.at(i, i) = m->top();
  auto set = [&](int i, int j, Elem v) {
    eq.at(i, j) = v;
    eq.at(j, i) = v;
  };
  set(0, 1, 3);
  set(2, 3, 3);
  set(1, 2, 1);
  LvSetPtr x = LValuedSet::make(m, {"a", "b", "c", "d"}, eq);
  std::vector<int> q = {0, 1, 1, 2};
  Matrix raw(4, 3, m->bot());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      raw.at(i, q[j]) = m->join(raw.at(i, q[j]), eq.at(i, j));
  try {
    image_equality(raw, x, {"p", "q", "r"});
    FAIL("expected ImageEqualityInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ImageEqualityInvalid);
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("products: unary family reduces to the factor") {
  MonoidPtr m = GLMonoid::lukasiewicz(3);
  Matrix eq(2, 2, m->top());
  eq.at(0, 1) = 1;
  eq.at(1, 0) = 1;
  LvSetPtr a = LValuedSet::make(m, {"a0", "a1"}, eq);
  ProductSet p = product_lvset({a}, 64);
  CHECK(p.space->equality() == a->equality());
  CHECK(p.projections[0].matrix() == a->equality());
}

TEST_CASE("products: crisp two-point factors give the crisp four-point set") {
  MonoidPtr m = GLMonoid::boolean();
  LvSetPtr a = LValuedSet::crisp(m, {"a0", "a1"});
  LvSetPtr b = LValuedSet::crisp(m, {"b0", "b1"});
  ProductSet p = product_lvset({a, b}, 64);
  CHECK(p.space->size() == 4);
  CHECK(p.space->is_crisp());
  CHECK(p.space->label(0) == "(a0,b0)");
  // crisp pairing of crisp maps is the crisp pairing
  LvSetPtr x = LValuedSet::crisp(m, {"x0", "x1"});
  std::vector<int> f = {0, 1}, g = {1, 1};
  FuzzyFunction ff = crisp_to_fuzzy(f, x, a), gg = crisp_to_fuzzy(g, x, b);
  FuzzyFunction h = pair_ff(p, {ff, gg});
  std::vector<int> want(2);
  for (int i = 0; i < 2; ++i) want[i] = p.tuple_of(std::vector<int>{f[i], g[i]});
  CHECK(fuzzy_to_crisp(h) == want);
}

TEST_CASE("products: equality is the componentwise meet and projections compose") {
  MonoidPtr m = GLMonoid::lukasiewicz(3);
  Matrix eq(2, 2, m->top());
  eq.at(0, 1) = 1;
  eq.at(1, 0) = 1;
  LvSetPtr a = LValuedSet::make(m, {"a0", "a1"}, eq);
  LvSetPtr b = LValuedSet::make(m, {"b0", "b1"}, eq);
  ProductSet p = product_lvset({a, b}, 64);
  for (int t = 0; t < 4; ++t)
    for (int u = 0; u < 4; ++u) {
      auto ct = p.coords_of(t), cu = p.coords_of(u);
      CHECK(p.space->eq(t, u) ==
            m->meet(a->eq(ct[0], cu[0]), b->eq(ct[1], cu[1])));
    }
  Rng rng(5);
  LvSetPtr x = random_lvset(rng, m, 3, "x");
  std::vector<FuzzyFunction> cone;
  for (int i = 0; i < 2; ++i) {
    std::vector<int> g(x->size());
    for (auto& v : g) v = rng.below(2);
    LvSetPtr cod = i == 0 ? a : b;
    while (!extensionality_defect(g, *x, *cod).pass)
      for (auto& v : g) v = rng.below(2);
    cone.push_back(crisp_to_fuzzy(g, x, cod));
  }
  FuzzyFunction h = pair_ff(p, cone);
  for (int i = 0; i < 2; ++i)
    CHECK(compose(p.projections[i], h).matrix() == cone[i].matrix());
}

TEST_CASE("products: caps and structural errors") {
  MonoidPtr m = GLMonoid::boolean();
  LvSetPtr a = LValuedSet::crisp(m, {"0", "1", "2", "3"});
  CHECK_THROWS_AS(product_lvset({a, a, a, a}, 64), Error);
  CHECK_THROWS_AS(product_lvset({}, 64), Error);
  LvSetPtr g = LValuedSet::crisp(GLMonoid::goedel(3), {"z"});
  CHECK_THROWS_AS(product_lvset({a, g}, 64), Error);
}

TEST_CASE("coproducts: blocks keep their equalities, bot across blocks") {
  MonoidPtr m = GLMonoid::lukasiewicz(3);
  Matrix eq(2, 2, m->top());
  eq.at(0, 1) = 1;
  eq.at(1, 0) = 1;
  LvSetPtr a = LValuedSet::make(m, {"a0", "a1"}, eq);
  LvSetPtr b = LValuedSet::crisp(m, {"b0"});
  CoproductSet c = coproduct_lvset({a, b});
  CHECK(c.space->size() == 3);
  CHECK(c.space->eq(0, 1) == 1);
  CHECK(c.space->eq(0, 2) == m->bot());
  CHECK(c.space->eq(1, 2) == m->bot());

  // copair equation against the injections
  Rng rng(11);
  LvSetPtr z = random_lvset(rng, m, 3, "z");
  std::vector<FuzzyFunction> cocone = {random_ff(rng, a, z),
                                       random_ff(rng, b, z)};
  FuzzyFunction cp = copair_ff(c, cocone);
  for (int i = 0; i < 2; ++i)
    CHECK(compose(cp, c.injections[i]).matrix() == cocone[i].matrix());
}

TEST_CASE("coproducts: two crisp singletons give the crisp pair") {
  MonoidPtr m = GLMonoid::boolean();
  LvSetPtr a = LValuedSet::crisp(m, {"a"});
  LvSetPtr b = LValuedSet::crisp(m, {"b"});
  CoproductSet c = coproduct_lvset({a, b});
  CHECK(c.space->size() == 2);
  CHECK(c.space->is_crisp());
  CHECK_THROWS_AS(coproduct_lvset({}), Error);
}

TEST_CASE("degree law audit covers identities, bounds and composition") {
  MonoidPtr m = GLMonoid::lukasiewicz(3);
  Rng rng(3);
  LvSetPtr x = random_lvset(rng, m, 3, "x");
  LvSetPtr y = random_lvset(rng, m, 3, "y");
  FuzzyFunction f = random_ff(rng, x, y);
  FuzzyFunction g = random_ff(rng, y, x);
  FuzzyFunction bot = make_ff(x, y, Matrix(x->size(), y->size(), m->bot()));
  CheckReport rep = degree_law_audit({f, g, bot});
  CHECK(rep.all_pass());
  CHECK(rep.find("composition_degree_law") != nullptr);
}

TEST_CASE("probe: zero budget is refused") {
  CHECK_THROWS_AS(universal_probe(ProbeQuestion::InitialStructure, {}, 0),
                  Error);
}

TEST_CASE("probe: initial structure counterexample exists and is genuine") {
  ProbeBounds b;
  ProbeOutcome out =
      universal_probe(ProbeQuestion::InitialStructure, b, 200000);
  CHECK(out.counterexample_found);

  // re-verify the witness shape independently: the all-bot 2x1 matrix into
  // a crisp singleton identifies both domain points, so a relation that
  // separates them composes to a morphism without being one
  MonoidPtr m = GLMonoid::boolean();
  LvSetPtr y = LValuedSet::crisp(m, {"y"});
  Matrix raw(2, 1, m->bot());
  LvSetPtr x = preimage_equality(raw, y, {"a", "b"});
  CHECK(x->eq(0, 1) == m->top());
  LvSetPtr z = LValuedSet::crisp(m, {"z"});
  Matrix g(1, 2);
  g.at(0, 0) = m->bot();
  g.at(0, 1) = m->top();
  FfValidation gv = validate_ff(z, x, g);
  CHECK(!gv.fn);  // separates identified points: (1ff) fails
  Matrix comp(1, 1, m->bot());
  CHECK(validate_ff(z, y, comp).fn.has_value());
}

TEST_CASE("probe: final structure rejects non-surjective raws and reports") {
  ProbeBounds b;
  ProbeOutcome out = universal_probe(ProbeQuestion::FinalStructure, b, 200000);
  CHECK(out.counterexample_found);
  CHECK(out.rejected > 0);
}

TEST_CASE("probe: bottom-frame product cones without mediators exist") {
  ProbeBounds b;
  ProbeOutcome out =
      universal_probe(ProbeQuestion::FsetBottomProducts, b, 200000);
  CHECK(out.counterexample_found);
  // the classic witness: a bot cone component forces h = 0 and h = 1
  MonoidPtr m = GLMonoid::boolean();
  LvSetPtr x = LValuedSet::crisp(m, {"x"});
  LvSetPtr y1 = LValuedSet::crisp(m, {"u"});
  LvSetPtr y2 = LValuedSet::crisp(m, {"v"});
  ProductSet p = product_lvset({y1, y2}, 64);
  FuzzyFunction f1 = make_ff(x, y1, Matrix(1, 1, m->bot()));
  FuzzyFunction f2 = make_ff(x, y2, Matrix(1, 1, m->top()));
  for (Elem h = 0; h < 2; ++h) {
    FuzzyFunction hm = make_ff(x, p.space, Matrix(1, 1, h));
    bool mediates = compose(p.projections[0], hm).matrix() == f1.matrix() &&
                    compose(p.projections[1], hm).matrix() == f2.matrix();
    CHECK(!mediates);
  }
}

TEST_CASE("probe: topological product probe also finds evidence") {
  ProbeBounds b;
  b.max_carrier = 1;
  ProbeOutcome out = universal_probe(ProbeQuestion::FtopProducts, b, 50000);
  CHECK(out.counterexample_found);
}

TEST_CASE("probe: question names round-trip") {
  for (auto q :
       {ProbeQuestion::InitialStructure, ProbeQuestion::FinalStructure,
        ProbeQuestion::FsetBottomProducts, ProbeQuestion::FtopProducts})
    CHECK(probe_question_from_string(probe_question_name(q)) == q);
  CHECK_THROWS_AS(probe_question_from_string("zorn"), Error);
}
