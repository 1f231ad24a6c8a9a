#include "fuzztop/probes.hpp"

#include <functional>

#include "fuzztop/enumerate.hpp"
#include "fuzztop/error.hpp"

namespace fuzztop {

namespace {

std::string mat_str(const GLMonoid& L, const Matrix& m) {
  return matrix_string(L, m);
}

std::vector<MonoidPtr> probe_monoids(const ProbeBounds& b) {
  std::vector<MonoidPtr> out = {GLMonoid::boolean()};
  if (b.max_chain >= 3) {
    out.push_back(GLMonoid::lukasiewicz(3));
    out.push_back(GLMonoid::goedel(3));
  }
  return out;
}

Matrix preimage_eq_matrix(const GLMonoid& L, const Matrix& f) {
  Matrix e(f.rows, f.rows, L.top());
  for (int x = 0; x < f.rows; ++x)
    for (int xp = 0; xp < f.rows; ++xp) {
      Elem acc = L.top();
      for (int y = 0; y < f.cols; ++y)
        acc = L.meet(acc, L.meet(L.residuum(f.at(x, y), f.at(xp, y)),
                                 L.residuum(f.at(xp, y), f.at(x, y))));
      e.at(x, xp) = acc;
    }
  return e;
}

struct Budget {
  long long remaining;
  long long used = 0;
  bool spend() {
    if (remaining <= 0) return false;
    --remaining;
    ++used;
    return true;
  }
};

ProbeOutcome probe_initial(const ProbeBounds& b, Budget& budget) {
  ProbeOutcome out;
  for (const MonoidPtr& mp : probe_monoids(b)) {
    const GLMonoid& L = *mp;
    for (int ny = 1; ny <= b.max_carrier; ++ny)
      for (int nx = 1; nx <= b.max_carrier; ++nx)
        for (int nz = 1; nz <= b.max_carrier; ++nz)
          for (const Matrix& ey : all_equalities(L, ny)) {
            bool stop = false;
            for_all_matrices(L, nx, ny, [&](const Matrix& f) {
              if (!holds_1ff(L, f, ey) || !holds_3ff(L, f, ey)) return true;
              Matrix ex = preimage_eq_matrix(L, f);
              for (const Matrix& ez : all_equalities(L, nz)) {
                bool inner_stop = false;
                for_all_matrices(L, nz, nx, [&](const Matrix& g) {
                  if (!holds_2ff(L, g, ez)) return true;
                  if (!budget.spend()) {
                    out.budget_exhausted = true;
                    inner_stop = true;
                    return false;
                  }
                  bool g_is_ff = valid_ff_matrix(L, g, ez, ex);
                  Matrix comp = compose_raw(L, g, f);
                  bool comp_is_ff = valid_ff_matrix(L, comp, ez, ey);
                  if (g_is_ff != comp_is_ff) {
                    out.counterexample_found = true;
                    out.detail = "monoid=" + L.name() +
                                 " E_Y=" + mat_str(L, ey) +
                                 " F=" + mat_str(L, f) +
                                 " E_X=" + mat_str(L, ex) +
                                 " E_Z=" + mat_str(L, ez) +
                                 " G=" + mat_str(L, g) +
                                 (g_is_ff
                                      ? " : G is a morphism but F o G is not"
                                      : " : F o G is a morphism but G is not");
                    inner_stop = true;
                    return false;
                  }
                  return true;
                });
                if (inner_stop) {
                  stop = true;
                  break;
                }
              }
              return !stop;
            });
            if (stop) {
              out.instances_checked = budget.used;
              return out;
            }
          }
  }
  out.instances_checked = budget.used;
  return out;
}

ProbeOutcome probe_final(const ProbeBounds& b, Budget& budget) {
  ProbeOutcome out;
  for (const MonoidPtr& mp : probe_monoids(b)) {
    const GLMonoid& L = *mp;
    for (int nx = 1; nx <= b.max_carrier; ++nx)
      for (int ny = 1; ny <= b.max_carrier; ++ny)
        for (int nz = 1; nz <= b.max_carrier; ++nz)
          for (const Matrix& ex : all_equalities(L, nx)) {
            bool stop = false;
            for_all_matrices(L, nx, ny, [&](const Matrix& f) {
              if (!holds_2ff(L, f, ex)) return true;
              // sigma(F) = top is the construction's precondition; below it
              // (or when the transported matrix is not an equality) the raw
              // matrix is rejected, mirroring the guard.
              Matrix ey(ny, ny, L.bot());
              for (int y = 0; y < ny; ++y)
                for (int yp = 0; yp < ny; ++yp) {
                  Elem acc = L.bot();
                  for (int x = 0; x < nx; ++x)
                    acc = L.join(acc, L.tnorm(f.at(x, y), f.at(x, yp)));
                  ey.at(y, yp) = acc;
                }
              bool eq_ok = true;
              for (int y = 0; y < ny && eq_ok; ++y)
                if (ey.at(y, y) != L.top()) eq_ok = false;
              for (int y = 0; y < ny && eq_ok; ++y)
                for (int yp = 0; yp < ny && eq_ok; ++yp)
                  for (int ypp = 0; ypp < ny && eq_ok; ++ypp)
                    if (!L.leq(L.tnorm(ey.at(y, yp), ey.at(yp, ypp)),
                               ey.at(y, ypp)))
                      eq_ok = false;
              if (!eq_ok) {
                ++out.rejected;
                return true;
              }
              for (const Matrix& ez : all_equalities(L, nz)) {
                bool inner_stop = false;
                for_all_matrices(L, ny, nz, [&](const Matrix& g) {
                  if (!holds_1ff(L, g, ez) || !holds_3ff(L, g, ez))
                    return true;
                  if (!budget.spend()) {
                    out.budget_exhausted = true;
                    inner_stop = true;
                    return false;
                  }
                  bool g_is_ff = valid_ff_matrix(L, g, ey, ez);
                  Matrix comp = compose_raw(L, f, g);
                  bool comp_is_ff = valid_ff_matrix(L, comp, ex, ez);
                  if (g_is_ff != comp_is_ff) {
                    out.counterexample_found = true;
                    out.detail = "monoid=" + L.name() +
                                 " E_X=" + mat_str(L, ex) +
                                 " F=" + mat_str(L, f) +
                                 " E_Y=" + mat_str(L, ey) +
                                 " E_Z=" + mat_str(L, ez) +
                                 " G=" + mat_str(L, g) +
                                 (g_is_ff
                                      ? " : G is a morphism but G o F is not"
                                      : " : G o F is a morphism but G is not");
                    inner_stop = true;
                    return false;
                  }
                  return true;
                });
                if (inner_stop) {
                  stop = true;
                  break;
                }
              }
              return !stop;
            });
            if (stop) {
              out.instances_checked = budget.used;
              return out;
            }
          }
  }
  out.instances_checked = budget.used;
  return out;
}

ProbeOutcome probe_fset_products(const ProbeBounds& b, Budget& budget) {
  ProbeOutcome out;
  for (const MonoidPtr& mp : probe_monoids(b)) {
    const GLMonoid& L = *mp;
    for (int nx = 1; nx <= b.max_carrier; ++nx)
      for (int n1 = 1; n1 <= b.max_carrier; ++n1)
        for (int n2 = 1; n2 <= b.max_carrier; ++n2)
          for (const Matrix& ex : all_equalities(L, nx))
            for (const Matrix& e1 : all_equalities(L, n1))
              for (const Matrix& e2 : all_equalities(L, n2)) {
                // Tuple t = (t1,t2) coded t1*n2+t2; product equality is the
                // componentwise meet, projections the coordinate hulls.
                const int np = n1 * n2;
                Matrix ep(np, np);
                for (int t = 0; t < np; ++t)
                  for (int u = 0; u < np; ++u)
                    ep.at(t, u) = L.meet(e1.at(t / n2, u / n2),
                                         e2.at(t % n2, u % n2));
                Matrix p1(np, n1), p2(np, n2);
                for (int t = 0; t < np; ++t) {
                  for (int c = 0; c < n1; ++c) p1.at(t, c) = e1.at(t / n2, c);
                  for (int c = 0; c < n2; ++c) p2.at(t, c) = e2.at(t % n2, c);
                }
                bool stop = false;
                for_all_matrices(L, nx, n1, [&](const Matrix& f1) {
                  if (!valid_ff_matrix(L, f1, ex, e1)) return true;
                  for_all_matrices(L, nx, n2, [&](const Matrix& f2) {
                    if (!valid_ff_matrix(L, f2, ex, e2)) return true;
                    if (!budget.spend()) {
                      out.budget_exhausted = true;
                      stop = true;
                      return false;
                    }
                    int mediators = 0;
                    std::string first_two;
                    for_all_matrices(L, nx, np, [&](const Matrix& h) {
                      if (!valid_ff_matrix(L, h, ex, ep)) return true;
                      if (compose_raw(L, h, p1) == f1 &&
                          compose_raw(L, h, p2) == f2) {
                        ++mediators;
                        if (mediators <= 2)
                          first_two += " H=" + mat_str(L, h);
                        if (mediators > 1) return false;
                      }
                      return true;
                    });
                    if (mediators != 1) {
                      out.counterexample_found = true;
                      out.detail =
                          "monoid=" + L.name() + " E_X=" + mat_str(L, ex) +
                          " E_1=" + mat_str(L, e1) + " E_2=" +
                          mat_str(L, e2) + " F_1=" + mat_str(L, f1) +
                          " F_2=" + mat_str(L, f2) +
                          (mediators == 0
                               ? " : cone admits no mediating morphism into "
                                 "the candidate product"
                               : " : mediating morphism is not unique," +
                                     first_two);
                      stop = true;
                      return false;
                    }
                    return true;
                  });
                  return !stop;
                });
                if (stop) {
                  out.instances_checked = budget.used;
                  return out;
                }
              }
  }
  out.instances_checked = budget.used;
  return out;
}

ProbeOutcome probe_ftop_products(const ProbeBounds& b, Budget& budget) {
  ProbeOutcome out;
  for (const MonoidPtr& mp : probe_monoids(b)) {
    for (int nx = 1; nx <= b.max_carrier; ++nx)
      for (int n1 = 1; n1 <= b.max_carrier; ++n1)
        for (int n2 = 1; n2 <= b.max_carrier; ++n2) {
          const GLMonoid& L = *mp;
          for (const Matrix& ex : all_equalities(L, nx))
            for (const Matrix& e1 : all_equalities(L, n1))
              for (const Matrix& e2 : all_equalities(L, n2)) {
                std::vector<std::string> lx(nx), l1(n1), l2(n2);
                for (int i = 0; i < nx; ++i) lx[i] = "x" + std::to_string(i);
                for (int i = 0; i < n1; ++i) l1[i] = "a" + std::to_string(i);
                for (int i = 0; i < n2; ++i) l2[i] = "b" + std::to_string(i);
                LvSetPtr X = LValuedSet::make(mp, lx, ex);
                LvSetPtr Y1 = LValuedSet::make(mp, l1, e1);
                LvSetPtr Y2 = LValuedSet::make(mp, l2, e2);

                // One extensional subbase element per factor keeps the
                // topology enumeration affordable.
                auto topo_candidates = [](const LvSetPtr& s) {
                  std::vector<LTopSpace> ts = {indiscrete_topology(s)};
                  LTopSpace disc = discrete_topology(s, 256);
                  for (const auto& u : disc.opens) {
                    LTopSpace t = generate_topology(s, {u}, false, 256);
                    bool dup = false;
                    for (const auto& prev : ts)
                      if (prev.opens.size() == t.opens.size() &&
                          std::equal(prev.opens.begin(), prev.opens.end(),
                                     t.opens.begin(),
                                     [](const LSubset& a, const LSubset& b) {
                                       return a.values == b.values;
                                     }))
                        dup = true;
                    if (!dup) ts.push_back(std::move(t));
                  }
                  return ts;
                };

                for (const auto& tx : topo_candidates(X))
                  for (const auto& t1 : topo_candidates(Y1))
                    for (const auto& t2 : topo_candidates(Y2)) {
                      ProductSpace prod = product_space({t1, t2}, 64, 512);
                      bool stop = false;
                      for_all_matrices(L, nx, n1, [&](const Matrix& f1m) {
                        if (!valid_ff_matrix(L, f1m, ex, e1)) return true;
                        FuzzyFunction f1 = make_ff(X, Y1, f1m);
                        if (!is_continuous(f1, tx, t1).continuous) return true;
                        for_all_matrices(L, nx, n2, [&](const Matrix& f2m) {
                          if (!valid_ff_matrix(L, f2m, ex, e2)) return true;
                          FuzzyFunction f2 = make_ff(X, Y2, f2m);
                          if (!is_continuous(f2, tx, t2).continuous)
                            return true;
                          if (!budget.spend()) {
                            out.budget_exhausted = true;
                            stop = true;
                            return false;
                          }
                          int mediators = 0;
                          for_all_matrices(
                              L, nx, prod.space.space->size(),
                              [&](const Matrix& hm) {
                                FfValidation hv = validate_ff(
                                    X, prod.space.space, hm);
                                if (!hv.fn) return true;
                                if (!(compose(prod.set.projections[0],
                                              *hv.fn)
                                          .matrix() == f1m) ||
                                    !(compose(prod.set.projections[1],
                                              *hv.fn)
                                          .matrix() == f2m))
                                  return true;
                                if (!is_continuous(*hv.fn, tx, prod.space)
                                         .continuous)
                                  return true;
                                ++mediators;
                                return mediators <= 1;
                              });
                          if (mediators != 1) {
                            out.counterexample_found = true;
                            out.detail =
                                "monoid=" + L.name() +
                                " E_X=" + mat_str(L, ex) +
                                " E_1=" + mat_str(L, e1) +
                                " E_2=" + mat_str(L, e2) +
                                " F_1=" + mat_str(L, f1m) +
                                " F_2=" + mat_str(L, f2m) +
                                " |tau_X|=" + std::to_string(tx.opens.size()) +
                                " |tau_1|=" + std::to_string(t1.opens.size()) +
                                " |tau_2|=" + std::to_string(t2.opens.size()) +
                                (mediators == 0
                                     ? " : continuous cone admits no "
                                       "continuous mediator"
                                     : " : continuous mediator not unique");
                            stop = true;
                            return false;
                          }
                          return true;
                        });
                        return !stop;
                      });
                      if (stop) {
                        out.instances_checked = budget.used;
                        return out;
                      }
                    }
              }
        }
  }
  out.instances_checked = budget.used;
  return out;
}

}  // namespace

ProbeQuestion probe_question_from_string(const std::string& s) {
  if (s == "initial_structure") return ProbeQuestion::InitialStructure;
  if (s == "final_structure") return ProbeQuestion::FinalStructure;
  if (s == "fset_bottom_products") return ProbeQuestion::FsetBottomProducts;
  if (s == "ftop_products") return ProbeQuestion::FtopProducts;
  throw Error(Errc::UnknownCommand, "unknown probe question: " + s);
}

const char* probe_question_name(ProbeQuestion q) {
  switch (q) {
    case ProbeQuestion::InitialStructure: return "initial_structure";
    case ProbeQuestion::FinalStructure: return "final_structure";
    case ProbeQuestion::FsetBottomProducts: return "fset_bottom_products";
    case ProbeQuestion::FtopProducts: return "ftop_products";
  }
  return "unknown";
}

ProbeOutcome universal_probe(ProbeQuestion q, const ProbeBounds& bounds,
                             long long budget) {
  if (budget <= 0)
    throw Error(Errc::BudgetExceeded, "probe needs a positive budget");
  if (bounds.max_carrier < 1 || bounds.max_carrier > 3 ||
      bounds.max_chain < 2 || bounds.max_chain > 3)
    throw Error(Errc::BoundsTooLarge,
                "probe bounds: carriers in 1..3, chains in 2..3");
  Budget b{budget};
  ProbeOutcome out;
  switch (q) {
    case ProbeQuestion::InitialStructure: out = probe_initial(bounds, b); break;
    case ProbeQuestion::FinalStructure: out = probe_final(bounds, b); break;
    case ProbeQuestion::FsetBottomProducts:
      out = probe_fset_products(bounds, b);
      break;
    case ProbeQuestion::FtopProducts: out = probe_ftop_products(bounds, b); break;
  }
  out.question = probe_question_name(q);
  if (!out.counterexample_found)
    out.detail = (out.budget_exhausted
                      ? "no counterexample within the first " +
                            std::to_string(out.instances_checked) +
                            " instances (budget exhausted)"
                      : "no counterexample within bounds (" +
                            std::to_string(out.instances_checked) +
                            " instances)") +
                 (out.rejected > 0
                      ? ", " + std::to_string(out.rejected) +
                            " raw matrices rejected by the construction's "
                            "preconditions"
                      : "");
  return out;
}

}  // namespace fuzztop
