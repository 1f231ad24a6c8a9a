#include "fuzztop/fuzzfn.hpp"

#include "fuzztop/error.hpp"

namespace fuzztop {

class FuzzyFunctionBuilder {
 public:
  static FuzzyFunction build(LvSetPtr dom, LvSetPtr cod, Matrix m) {
    FuzzyFunction f;
    f.dom_ = std::move(dom);
    f.cod_ = std::move(cod);
    f.f_ = std::move(m);
    const GLMonoid& L = *f.dom_->monoid();
    const int nx = f.dom_->size(), ny = f.cod_->size();

    Elem mu = L.top();
    for (int x = 0; x < nx; ++x) {
      Elem row = L.bot();
      for (int y = 0; y < ny; ++y) row = L.join(row, f.f_.at(x, y));
      mu = L.meet(mu, row);
    }
    f.mu_ = mu;

    Elem sigma = L.top();
    for (int y = 0; y < ny; ++y) {
      Elem col = L.bot();
      for (int x = 0; x < nx; ++x) col = L.join(col, f.f_.at(x, y));
      sigma = L.meet(sigma, col);
    }
    f.sigma_ = sigma;

    f.injective_ = true;
    for (int x = 0; x < nx && f.injective_; ++x)
      for (int xp = 0; xp < nx && f.injective_; ++xp)
        for (int y = 0; y < ny; ++y)
          if (!L.leq(L.tnorm(f.f_.at(x, y), f.f_.at(xp, y)),
                     f.dom_->eq(x, xp))) {
            f.injective_ = false;
            break;
          }
    return f;
  }
};

FfValidation validate_ff(LvSetPtr dom, LvSetPtr cod, Matrix m) {
  if (!same_monoid(dom->monoid(), cod->monoid()))
    throw Error(Errc::MonoidMismatch,
                "domain and codomain use different monoids");
  if (m.rows != dom->size() || m.cols != cod->size())
    throw Error(Errc::DimensionMismatch,
                "matrix must be |dom| x |cod|");
  const GLMonoid& L = *dom->monoid();
  for (Elem v : m.v)
    if (v < 0 || v >= L.size())
      throw Error(Errc::ValueNotInCarrier, "matrix entry outside the carrier");

  FfValidation out;
  const int nx = dom->size(), ny = cod->size();
  {
    bool ok = true;
    std::vector<std::string> w;
    for (int x = 0; x < nx && ok; ++x)
      for (int y = 0; y < ny && ok; ++y)
        for (int yp = 0; yp < ny && ok; ++yp)
          if (!L.leq(L.tnorm(m.at(x, y), cod->eq(y, yp)), m.at(x, yp))) {
            ok = false;
            w = {dom->label(x), cod->label(y), cod->label(yp)};
          }
    out.report.add("1ff_cod_extensional", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (int x = 0; x < nx && ok; ++x)
      for (int xp = 0; xp < nx && ok; ++xp)
        for (int y = 0; y < ny && ok; ++y)
          if (!L.leq(L.tnorm(dom->eq(x, xp), m.at(x, y)), m.at(xp, y))) {
            ok = false;
            w = {dom->label(x), dom->label(xp), cod->label(y)};
          }
    out.report.add("2ff_dom_extensional", ok, w);
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (int x = 0; x < nx && ok; ++x)
      for (int y = 0; y < ny && ok; ++y)
        for (int yp = 0; yp < ny && ok; ++yp)
          if (!L.leq(L.tnorm(m.at(x, y), m.at(x, yp)), cod->eq(y, yp))) {
            ok = false;
            w = {dom->label(x), cod->label(y), cod->label(yp)};
          }
    out.report.add("3ff_single_valued", ok, w);
  }
  if (out.report.all_pass())
    out.fn = FuzzyFunctionBuilder::build(std::move(dom), std::move(cod),
                                         std::move(m));
  return out;
}

FuzzyFunction make_ff(LvSetPtr dom, LvSetPtr cod, Matrix m) {
  FfValidation v = validate_ff(std::move(dom), std::move(cod), std::move(m));
  if (!v.fn) {
    for (const auto& e : v.report.entries)
      if (!e.pass)
        throw Error(Errc::ValidationFailure,
                    "fuzzy function axiom " + e.law + " fails", e.witness);
  }
  return *std::move(v.fn);
}

FuzzyFunction identity_ff(const LvSetPtr& x) {
  return make_ff(x, x, x->equality());
}

FuzzyFunction compose(const FuzzyFunction& g, const FuzzyFunction& f) {
  if (!same_space(f.cod(), g.dom()))
    throw Error(Errc::CodomainMismatch,
                "cod of the inner function must equal dom of the outer one");
  const GLMonoid& L = *f.dom()->monoid();
  const int nx = f.dom()->size(), ny = f.cod()->size(), nz = g.cod()->size();
  Matrix m(nx, nz, L.bot());
  for (int x = 0; x < nx; ++x)
    for (int z = 0; z < nz; ++z) {
      Elem acc = L.bot();
      for (int y = 0; y < ny; ++y)
        acc = L.join(acc, L.tnorm(f.at(x, y), g.at(y, z)));
      m.at(x, z) = acc;
    }
  return make_ff(f.dom(), g.cod(), std::move(m));
}

FuzzyFunction invert(const FuzzyFunction& f) {
  const GLMonoid& L = *f.dom()->monoid();
  const int nx = f.dom()->size(), ny = f.cod()->size();
  for (int x = 0; x < nx; ++x)
    for (int xp = 0; xp < nx; ++xp)
      for (int y = 0; y < ny; ++y)
        if (!L.leq(L.tnorm(f.at(x, y), f.at(xp, y)), f.dom()->eq(x, xp)))
          throw Error(Errc::NotInjective, "function is not injective",
                      {f.dom()->label(x), f.dom()->label(xp),
                       f.cod()->label(y)});
  return make_ff(f.cod(), f.dom(), f.matrix().transposed());
}

LSubset image(const FuzzyFunction& f, const LSubset& a) {
  if (!same_space(a.parent, f.dom()))
    throw Error(Errc::ParentMismatch, "subset does not live on the domain");
  const GLMonoid& L = *f.dom()->monoid();
  LSubset r{f.cod(), std::vector<Elem>(f.cod()->size(), L.bot())};
  for (int y = 0; y < f.cod()->size(); ++y) {
    Elem acc = L.bot();
    for (int x = 0; x < f.dom()->size(); ++x)
      acc = L.join(acc, L.tnorm(f.at(x, y), a.values[x]));
    r.values[y] = acc;
  }
  return r;
}

LSubset preimage(const FuzzyFunction& f, const LSubset& b) {
  if (!same_space(b.parent, f.cod()))
    throw Error(Errc::ParentMismatch, "subset does not live on the codomain");
  const GLMonoid& L = *f.dom()->monoid();
  LSubset r{f.dom(), std::vector<Elem>(f.dom()->size(), L.bot())};
  for (int x = 0; x < f.dom()->size(); ++x) {
    Elem acc = L.bot();
    for (int y = 0; y < f.cod()->size(); ++y)
      acc = L.join(acc, L.tnorm(f.at(x, y), b.values[y]));
    r.values[x] = acc;
  }
  return r;
}

LSubset point_preimage(const FuzzyFunction& f, int y0) {
  if (y0 < 0 || y0 >= f.cod()->size())
    throw Error(Errc::CarrierMismatch, "point index outside the codomain");
  LSubset r{f.dom(), std::vector<Elem>(f.dom()->size())};
  for (int x = 0; x < f.dom()->size(); ++x) r.values[x] = f.at(x, y0);
  return r;
}

FuzzyFunction crisp_to_fuzzy(std::span<const int> f, LvSetPtr dom,
                             LvSetPtr cod) {
  PairVerdict ext = extensionality_defect(f, *dom, *cod);
  if (!ext.pass)
    throw Error(Errc::ValidationFailure,
                "crisp map is not extensional, no fuzzy graph exists",
                {dom->label(ext.x), dom->label(ext.y)});
  const GLMonoid& L = *dom->monoid();
  Matrix m(dom->size(), cod->size(), L.bot());
  for (int x = 0; x < dom->size(); ++x)
    for (int y = 0; y < cod->size(); ++y) {
      Elem acc = L.bot();
      for (int xp = 0; xp < dom->size(); ++xp)
        acc = L.join(acc, L.tnorm(dom->eq(x, xp), cod->eq(f[xp], y)));
      m.at(x, y) = acc;
    }
  return make_ff(std::move(dom), std::move(cod), std::move(m));
}

std::vector<int> fuzzy_to_crisp(const FuzzyFunction& f) {
  const GLMonoid& L = *f.dom()->monoid();
  std::vector<int> out(f.dom()->size(), -1);
  for (int x = 0; x < f.dom()->size(); ++x) {
    for (int y = 0; y < f.cod()->size(); ++y) {
      if (f.at(x, y) != L.top()) continue;
      if (out[x] != -1)
        throw Error(Errc::NotCrispRepresentable,
                    "row has more than one top entry", {f.dom()->label(x)});
      out[x] = y;
    }
    if (out[x] == -1)
      throw Error(Errc::NotCrispRepresentable, "row has no top entry",
                  {f.dom()->label(x)});
  }
  return out;
}

FuzzyFunction restrict_ff(const FuzzyFunction& f, std::span<const int> xs,
                          std::span<const int> ys) {
  LvSetPtr dom = f.dom()->restrict(xs);
  LvSetPtr cod = f.cod()->restrict(ys);
  Matrix m(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = f.at(xs[i], ys[j]);
  return make_ff(std::move(dom), std::move(cod), std::move(m));
}

}  // namespace fuzztop
