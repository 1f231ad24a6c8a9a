#include "fuzztop/fsetcat.hpp"

#include "fuzztop/error.hpp"

namespace fuzztop {

namespace {

std::vector<std::string> default_labels(const std::string& prefix, int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = prefix + std::to_string(i);
  return out;
}

}  // namespace

LvSetPtr preimage_equality(const Matrix& raw, const LvSetPtr& cod,
                           std::vector<std::string> dom_labels) {
  const GLMonoid& L = *cod->monoid();
  const int nx = raw.rows, ny = raw.cols;
  if (ny != cod->size())
    throw Error(Errc::DimensionMismatch, "matrix columns must match the codomain");
  if (dom_labels.empty()) dom_labels = default_labels("x", nx);

  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      for (int yp = 0; yp < ny; ++yp) {
        if (!L.leq(L.tnorm(raw.at(x, y), cod->eq(y, yp)), raw.at(x, yp)))
          throw Error(Errc::RawViolates1ff, "matrix violates (1ff) against the codomain equality",
                      {dom_labels[x], cod->label(y), cod->label(yp)});
        if (!L.leq(L.tnorm(raw.at(x, y), raw.at(x, yp)), cod->eq(y, yp)))
          throw Error(Errc::RawViolates3ff, "matrix violates (3ff) against the codomain equality",
                      {dom_labels[x], cod->label(y), cod->label(yp)});
      }

  Matrix eq(nx, nx);
  for (int x = 0; x < nx; ++x)
    for (int xp = 0; xp < nx; ++xp) {
      Elem acc = L.top();
      for (int y = 0; y < ny; ++y)
        acc = L.meet(acc, L.meet(L.residuum(raw.at(x, y), raw.at(xp, y)),
                                 L.residuum(raw.at(xp, y), raw.at(x, y))));
      eq.at(x, xp) = acc;
    }
  return LValuedSet::make(cod->monoid(), std::move(dom_labels), std::move(eq));
}

LvSetPtr image_equality(const Matrix& raw, const LvSetPtr& dom,
                        std::vector<std::string> cod_labels) {
  const GLMonoid& L = *dom->monoid();
  const int nx = raw.rows, ny = raw.cols;
  if (nx != dom->size())
    throw Error(Errc::DimensionMismatch, "matrix rows must match the domain");
  if (cod_labels.empty()) cod_labels = default_labels("y", ny);

  for (int x = 0; x < nx; ++x)
    for (int xp = 0; xp < nx; ++xp)
      for (int y = 0; y < ny; ++y)
        if (!L.leq(L.tnorm(dom->eq(x, xp), raw.at(x, y)), raw.at(xp, y)))
          throw Error(Errc::RawViolates2ff, "matrix violates (2ff) against the domain equality",
                      {dom->label(x), dom->label(xp), cod_labels[y]});

  Matrix eq(ny, ny);
  for (int y = 0; y < ny; ++y)
    for (int yp = 0; yp < ny; ++yp) {
      Elem acc = L.bot();
      for (int x = 0; x < nx; ++x)
        acc = L.join(acc, L.tnorm(raw.at(x, y), raw.at(x, yp)));
      eq.at(y, yp) = acc;
    }

  for (int y = 0; y < ny; ++y)
    if (eq.at(y, y) != L.top())
      throw Error(Errc::NotTopSurjective,
                  "diagonal entry " + L.label(eq.at(y, y)) +
                      " below top; the matrix is not top-surjective",
                  {cod_labels[y]});

  // Transitivity is not implied by (2ff) + top-surjectivity alone (it needs
  // injectivity of the raw matrix), so the formula output is validated.
  for (int y = 0; y < ny; ++y)
    for (int yp = 0; yp < ny; ++yp)
      for (int ypp = 0; ypp < ny; ++ypp)
        if (!L.leq(L.tnorm(eq.at(y, yp), eq.at(yp, ypp)), eq.at(y, ypp)))
          throw Error(Errc::ImageEqualityInvalid,
                      "transported equality is not transitive",
                      {cod_labels[y], cod_labels[yp], cod_labels[ypp]});

  return LValuedSet::make(dom->monoid(), std::move(cod_labels), std::move(eq));
}

std::vector<int> ProductSet::coords_of(int tuple) const {
  std::vector<int> out(factors.size());
  for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
    out[i] = tuple % factors[i]->size();
    tuple /= factors[i]->size();
  }
  return out;
}

int ProductSet::tuple_of(std::span<const int> coords) const {
  int t = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    t = t * factors[i]->size() + coords[i];
  return t;
}

ProductSet product_lvset(std::vector<LvSetPtr> factors, int cap) {
  if (factors.empty())
    throw Error(Errc::EmptyFamily, "product of an empty family");
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (!same_monoid(factors[0]->monoid(), factors[i]->monoid()))
      throw Error(Errc::MonoidMismatch, "product factors use different monoids");

  long long total = 1;
  for (const auto& f : factors) {
    total *= f->size();
    if (total > cap)
      throw Error(Errc::CarrierTooLarge,
                  "product carrier exceeds the cap of " + std::to_string(cap));
  }

  ProductSet p;
  p.factors = std::move(factors);
  const GLMonoid& L = *p.factors[0]->monoid();
  const int n = static_cast<int>(total);

  std::vector<std::vector<int>> coords(n);
  {
    std::vector<int> c(p.factors.size(), 0);
    for (int t = 0; t < n; ++t) {
      coords[t] = c;
      for (int i = static_cast<int>(p.factors.size()) - 1; i >= 0; --i) {
        if (++c[i] < p.factors[i]->size()) break;
        c[i] = 0;
      }
    }
  }

  std::vector<std::string> labels(n);
  for (int t = 0; t < n; ++t) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
      if (i) s += ",";
      s += p.factors[i]->label(coords[t][i]);
    }
    labels[t] = s + ")";
  }

  Matrix eq(n, n);
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < n; ++u) {
      Elem acc = L.top();
      for (std::size_t i = 0; i < p.factors.size(); ++i)
        acc = L.meet(acc, p.factors[i]->eq(coords[t][i], coords[u][i]));
      eq.at(t, u) = acc;
    }
  p.space = LValuedSet::make(p.factors[0]->monoid(), std::move(labels),
                             std::move(eq));

  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    Matrix m(n, p.factors[i]->size());
    for (int t = 0; t < n; ++t)
      for (int c = 0; c < p.factors[i]->size(); ++c)
        m.at(t, c) = p.factors[i]->eq(coords[t][i], c);
    p.projections.push_back(make_ff(p.space, p.factors[i], std::move(m)));
  }
  return p;
}

FuzzyFunction pair_ff(const ProductSet& p,
                      const std::vector<FuzzyFunction>& components) {
  if (components.size() != p.factors.size())
    throw Error(Errc::DimensionMismatch,
                "pairing needs one component per factor");
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!same_space(components[i].cod(), p.factors[i]))
      throw Error(Errc::CodomainMismatch,
                  "component codomain does not match its factor");
    if (i && !same_space(components[i].dom(), components[0].dom()))
      throw Error(Errc::CarrierMismatch,
                  "pairing components must share the domain");
  }
  const GLMonoid& L = *p.space->monoid();
  const LvSetPtr& dom = components[0].dom();
  Matrix m(dom->size(), p.space->size());
  for (int x = 0; x < dom->size(); ++x)
    for (int t = 0; t < p.space->size(); ++t) {
      std::vector<int> c = p.coords_of(t);
      Elem acc = L.top();
      for (std::size_t i = 0; i < components.size(); ++i)
        acc = L.meet(acc, components[i].at(x, c[i]));
      m.at(x, t) = acc;
    }
  return make_ff(dom, p.space, std::move(m));
}

int CoproductSet::block_of(int i) const {
  for (std::size_t b = 0; b + 1 < offsets.size(); ++b)
    if (i < offsets[b + 1]) return static_cast<int>(b);
  return -1;
}

int CoproductSet::local_of(int i) const { return i - offsets[block_of(i)]; }

CoproductSet coproduct_lvset(std::vector<LvSetPtr> factors) {
  if (factors.empty())
    throw Error(Errc::EmptyFamily, "coproduct of an empty family");
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (!same_monoid(factors[0]->monoid(), factors[i]->monoid()))
      throw Error(Errc::MonoidMismatch,
                  "coproduct factors use different monoids");

  CoproductSet c;
  c.factors = std::move(factors);
  const GLMonoid& L = *c.factors[0]->monoid();

  c.offsets = {0};
  for (const auto& f : c.factors) c.offsets.push_back(c.offsets.back() + f->size());
  const int n = c.offsets.back();

  std::vector<std::string> labels(n);
  Matrix eq(n, n, L.bot());
  for (std::size_t b = 0; b < c.factors.size(); ++b)
    for (int i = 0; i < c.factors[b]->size(); ++i) {
      labels[c.offsets[b] + i] =
          c.factors.size() == 1
              ? c.factors[b]->label(i)
              : c.factors[b]->label(i) + "#" + std::to_string(b);
      for (int j = 0; j < c.factors[b]->size(); ++j)
        eq.at(c.offsets[b] + i, c.offsets[b] + j) = c.factors[b]->eq(i, j);
    }
  c.space = LValuedSet::make(c.factors[0]->monoid(), std::move(labels),
                             std::move(eq));

  for (std::size_t b = 0; b < c.factors.size(); ++b) {
    Matrix m(c.factors[b]->size(), n, L.bot());
    for (int i = 0; i < c.factors[b]->size(); ++i)
      for (int j = 0; j < c.factors[b]->size(); ++j)
        m.at(i, c.offsets[b] + j) = c.factors[b]->eq(i, j);
    c.injections.push_back(make_ff(c.factors[b], c.space, std::move(m)));
  }
  return c;
}

FuzzyFunction copair_ff(const CoproductSet& c,
                        const std::vector<FuzzyFunction>& components) {
  if (components.size() != c.factors.size())
    throw Error(Errc::DimensionMismatch,
                "copairing needs one component per factor");
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!same_space(components[i].dom(), c.factors[i]))
      throw Error(Errc::CarrierMismatch,
                  "component domain does not match its factor");
    if (i && !same_space(components[i].cod(), components[0].cod()))
      throw Error(Errc::CodomainMismatch,
                  "copairing components must share the codomain");
  }
  const LvSetPtr& cod = components[0].cod();
  Matrix m(c.space->size(), cod->size());
  for (int i = 0; i < c.space->size(); ++i) {
    int b = c.block_of(i), l = c.local_of(i);
    for (int y = 0; y < cod->size(); ++y) m.at(i, y) = components[b].at(l, y);
  }
  return make_ff(c.space, cod, std::move(m));
}

CheckReport degree_law_audit(const std::vector<FuzzyFunction>& sample) {
  CheckReport rep;
  if (sample.empty()) {
    rep.add("empty_sample", true, {}, "nothing to audit");
    return rep;
  }
  const GLMonoid& L = *sample[0].dom()->monoid();

  {
    // Object degrees are top for every valid L-valued set, so condition (1)
    // amounts to mu(f) <= top.
    bool ok = true;
    for (const auto& f : sample)
      if (!L.leq(f.definedness(), L.top())) ok = false;
    rep.add("morphism_degree_bounded_by_objects", ok);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    std::vector<LvSetPtr> objects;
    for (const auto& f : sample) {
      objects.push_back(f.dom());
      objects.push_back(f.cod());
    }
    for (const auto& obj : objects) {
      FuzzyFunction id = identity_ff(obj);
      if (id.definedness() != L.top() || id.surjectivity() != L.top()) {
        ok = false;
        w = {obj->label(0)};
        break;
      }
    }
    rep.add("identity_degree_equals_object_degree", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    int pairs = 0;
    for (const auto& f : sample)
      for (const auto& g : sample) {
        if (!same_space(f.cod(), g.dom())) continue;
        ++pairs;
        FuzzyFunction gf = compose(g, f);
        if (!L.leq(L.tnorm(g.definedness(), f.definedness()),
                   gf.definedness())) {
          ok = false;
          w = {L.label(gf.definedness()), L.label(g.definedness()),
               L.label(f.definedness())};
        }
      }
    rep.add("composition_degree_law", ok, w,
            "checked " + std::to_string(pairs) + " composable pairs");
  }
  return rep;
}

}  // namespace fuzztop
