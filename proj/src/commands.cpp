#include "fuzztop/commands.hpp"

#include "fuzztop/compact.hpp"
#include "fuzztop/error.hpp"
#include "fuzztop/probes.hpp"
#include "fuzztop/suites.hpp"

namespace fuzztop {

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::ValidationFailure:
    case Errc::NotAPartialOrder:
    case Errc::NotALattice:
    case Errc::NotDistributive:
    case Errc::DegenerateLattice:
    case Errc::ReflexivityFail:
    case Errc::SymmetryFail:
    case Errc::TransitivityFail:
    case Errc::ImageEqualityInvalid:
      return 1;
    default:
      return 2;
  }
}

namespace {

const LvSetPtr& need_set(const Document& doc, const std::string& name) {
  auto it = doc.sets.find(name);
  if (it == doc.sets.end())
    throw Error(Errc::UnknownReference, "unknown set '" + name + "'");
  return it->second;
}

const LSubset& need_subset(const Document& doc, const std::string& name) {
  auto it = doc.subsets.find(name);
  if (it == doc.subsets.end())
    throw Error(Errc::UnknownReference, "unknown subset '" + name + "'");
  return it->second.second;
}

const Document::TopologyDecl& need_topology(const Document& doc,
                                            const std::string& name) {
  auto it = doc.topologies.find(name);
  if (it == doc.topologies.end())
    throw Error(Errc::UnknownReference, "unknown topology '" + name + "'");
  return it->second;
}

// Fuzzy functions may be declared as matrices or as crisp maps; crisp maps
// are lifted through their hull graph on demand.
FuzzyFunction need_ff(const Document& doc, const std::string& name) {
  auto it = doc.functions.find(name);
  if (it != doc.functions.end()) return std::get<2>(it->second);
  auto bit = doc.broken_functions.find(name);
  if (bit != doc.broken_functions.end()) {
    for (const auto& e : bit->second.entries)
      if (!e.pass)
        throw Error(Errc::ValidationFailure,
                    "function '" + name + "' violates axiom " + e.law,
                    e.witness);
  }
  auto mit = doc.maps.find(name);
  if (mit != doc.maps.end()) {
    const auto& [from, to, map] = mit->second;
    return crisp_to_fuzzy(map, need_set(doc, from), need_set(doc, to));
  }
  throw Error(Errc::UnknownReference, "unknown function '" + name + "'");
}

void need_args(const std::vector<std::string>& args, std::size_t n,
               const std::string& usage) {
  if (args.size() != n)
    throw Error(Errc::UnknownCommand, "expected arguments: " + usage);
}

Elem label_option(const GLMonoid& m, const std::string& value, Elem fallback) {
  if (value.empty()) return fallback;
  return element_from_label(m, value);
}

void require_valid_monoid(const Document& doc) {
  if (!doc.monoid_report.all_pass())
    throw Error(Errc::ValidationFailure,
                "document monoid violates the axioms; run `validate`");
}

Report cmd_validate(const Document& doc) {
  Report r;
  const GLMonoid& m = *doc.monoid;
  for (const auto& e : doc.monoid_report.entries) {
    CheckEntry c = e;
    c.law = "monoid_axiom_" + c.law;
    r.verdicts.push_back(std::move(c));
  }
  if (doc.monoid_report.all_pass()) {
    for (const auto& e : m.derived_properties().entries) {
      CheckEntry c = e;
      c.law = "monoid_property_" + c.law;
      r.verdicts.push_back(std::move(c));
    }
    auto cls = m.classify();
    r.derived["classification"] =
        Json{{"is_heyting", cls.is_heyting}, {"is_mv", cls.is_mv}};
  }
  for (const auto& [name, s] : doc.sets) {
    r.verdicts.push_back({"set_" + name + "_equality_axioms", true, {}, ""});
    (void)s;
  }
  for (const auto& [name, ps] : doc.subsets) {
    bool ext = is_extensional_subset(ps.second).pass;
    r.verdicts.push_back({"subset_" + name + "_declared", true, {},
                          ext ? "extensional" : "not extensional (hull exists)"});
  }
  for (const auto& [name, f] : doc.functions) {
    const FuzzyFunction& fn = std::get<2>(f);
    r.verdicts.push_back({"function_" + name + "_axioms", true, {},
                          "definedness=" + m.label(fn.definedness()) +
                              " surjectivity=" + m.label(fn.surjectivity())});
  }
  for (const auto& [name, rep] : doc.broken_functions)
    for (const auto& e : rep.entries) {
      if (e.pass) continue;
      CheckEntry c = e;
      c.law = "function_" + name + "_axiom_" + c.law;
      r.verdicts.push_back(std::move(c));
    }
  for (const auto& [name, td] : doc.topologies) {
    CheckReport rep = check_topology(td.top.space, td.top.opens);
    for (const auto& e : rep.entries) {
      CheckEntry c = e;
      c.law = "topology_" + name + "_" + c.law;
      r.verdicts.push_back(std::move(c));
    }
  }
  for (const auto& [name, mp] : doc.maps) {
    PairVerdict pv = extensionality_defect(std::get<2>(mp),
                                           *need_set(doc, std::get<0>(mp)),
                                           *need_set(doc, std::get<1>(mp)));
    r.verdicts.push_back(
        {"map_" + name + "_extensional", pv.pass,
         pv.pass ? std::vector<std::string>{}
                 : std::vector<std::string>{
                       need_set(doc, std::get<0>(mp))->label(pv.x),
                       need_set(doc, std::get<0>(mp))->label(pv.y)},
         ""});
  }
  return r;
}

Report cmd_degrees(const Document& doc, const std::vector<std::string>& args) {
  need_args(args, 1, "degrees F");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  FuzzyFunction f = need_ff(doc, args[0]);
  Report r;
  r.derived["function"] = args[0];
  r.derived["definedness"] = m.label(f.definedness());
  r.derived["surjectivity"] = m.label(f.surjectivity());
  r.derived["injective"] = f.is_injective();
  return r;
}

Report cmd_compose(const Document& doc, const std::vector<std::string>& args) {
  need_args(args, 2, "compose G F");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  FuzzyFunction g = need_ff(doc, args[0]);
  FuzzyFunction f = need_ff(doc, args[1]);
  FuzzyFunction gf = compose(g, f);
  Report r;
  r.derived["matrix"] = matrix_to_json(m, gf.matrix());
  r.derived["definedness"] = m.label(gf.definedness());
  r.derived["surjectivity"] = m.label(gf.surjectivity());
  r.verdicts.push_back(
      {"definedness_composition_law",
       m.leq(m.tnorm(g.definedness(), f.definedness()), gf.definedness()),
       {},
       m.label(gf.definedness()) + " >= " + m.label(g.definedness()) + " * " +
           m.label(f.definedness())});
  return r;
}

Report cmd_image(const Document& doc, const std::vector<std::string>& args,
                 bool forward) {
  need_args(args, 2, forward ? "image F A" : "preimage F B");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  FuzzyFunction f = need_ff(doc, args[0]);
  const LSubset& s = need_subset(doc, args[1]);
  LSubset out = forward ? image(f, s) : preimage(f, s);
  Report r;
  r.derived["values"] = labels_from_values(m, out.values);
  r.verdicts.push_back(
      {"result_extensional", is_extensional_subset(out).pass, {}, ""});
  return r;
}

Report cmd_eq_preimage(const Document& doc,
                       const std::vector<std::string>& args) {
  need_args(args, 1, "eq-preimage F");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  FuzzyFunction f = need_ff(doc, args[0]);
  LvSetPtr dom = preimage_equality(f.matrix(), f.cod(), f.dom()->labels());
  Report r;
  r.derived["equality"] = matrix_to_json(m, dom->equality());
  FfValidation v = validate_ff(dom, f.cod(), f.matrix());
  r.verdicts.push_back(
      {"matrix_is_morphism_under_transported_equality", v.fn.has_value(), {},
       ""});
  return r;
}

Report cmd_eq_image(const Document& doc, const std::vector<std::string>& args) {
  need_args(args, 1, "eq-image F");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  FuzzyFunction f = need_ff(doc, args[0]);
  LvSetPtr cod = image_equality(f.matrix(), f.dom(), f.cod()->labels());
  Report r;
  r.derived["equality"] = matrix_to_json(m, cod->equality());
  FfValidation v = validate_ff(f.dom(), cod, f.matrix());
  r.verdicts.push_back(
      {"matrix_is_morphism_under_transported_equality", v.fn.has_value(), {},
       v.fn ? "" : "needs injectivity in general"});
  return r;
}

Report cmd_product(const Document& doc, const std::vector<std::string>& args,
                   const CommandOptions& opt) {
  if (args.empty())
    throw Error(Errc::EmptyFamily, "product needs at least one set");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  std::vector<LvSetPtr> factors;
  for (const auto& a : args) factors.push_back(need_set(doc, a));
  ProductSet p = product_lvset(std::move(factors), opt.cap > 0 ? opt.cap : 64);
  Report r;
  r.derived["elements"] = p.space->labels();
  r.derived["equality"] = matrix_to_json(m, p.space->equality());
  r.verdicts.push_back({"pairing_of_projections_is_identity",
                        pair_ff(p, p.projections).matrix() ==
                            p.space->equality(),
                        {},
                        ""});
  return r;
}

Report cmd_coproduct(const Document& doc,
                     const std::vector<std::string>& args) {
  if (args.empty())
    throw Error(Errc::EmptyFamily, "coproduct needs at least one set");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  std::vector<LvSetPtr> factors;
  for (const auto& a : args) factors.push_back(need_set(doc, a));
  CoproductSet c = coproduct_lvset(std::move(factors));
  Report r;
  r.derived["elements"] = c.space->labels();
  r.derived["equality"] = matrix_to_json(m, c.space->equality());
  bool inj_ok = true;
  for (const auto& q : c.injections)
    if (q.definedness() != m.top()) inj_ok = false;
  r.verdicts.push_back({"injections_have_top_definedness", inj_ok, {}, ""});
  return r;
}

Report cmd_topo_generate(const Document& doc,
                         const std::vector<std::string>& args,
                         const CommandOptions& opt) {
  need_args(args, 1, "topo-generate T");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  const Document::TopologyDecl& td = need_topology(doc, args[0]);
  LTopSpace t = td.from_subbase
                    ? generate_topology(td.top.space, td.subbase, td.repair,
                                        opt.cap > 0 ? opt.cap : 4096)
                    : td.top;
  Report r;
  Json opens = Json::array();
  for (const auto& u : t.opens) opens.push_back(labels_from_values(m, u.values));
  r.derived["opens"] = std::move(opens);
  for (const auto& e : check_topology(t.space, t.opens).entries)
    r.verdicts.push_back(e);
  return r;
}

Report cmd_continuity(const Document& doc,
                      const std::vector<std::string>& args) {
  need_args(args, 3, "continuity F TX TY");
  require_valid_monoid(doc);
  FuzzyFunction f = need_ff(doc, args[0]);
  const Document::TopologyDecl& tx = need_topology(doc, args[1]);
  const Document::TopologyDecl& ty = need_topology(doc, args[2]);
  const std::vector<LSubset>& subbase =
      ty.from_subbase ? ty.subbase : ty.top.opens;
  CheckReport audit =
      continuity_audit(f, tx.top, ty.top, ty.top.opens, subbase);
  Report r;
  r.verdicts = audit.entries;
  r.derived["definedness"] = doc.monoid->label(f.definedness());
  return r;
}

Report cmd_initial(const Document& doc, const std::vector<std::string>& args) {
  need_args(args, 2, "initial F TY");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  FuzzyFunction f = need_ff(doc, args[0]);
  const Document::TopologyDecl& ty = need_topology(doc, args[1]);
  LTopSpace t = initial_topology(f, ty.top);
  Report r;
  Json opens = Json::array();
  for (const auto& u : t.opens) opens.push_back(labels_from_values(m, u.values));
  r.derived["opens"] = std::move(opens);
  r.verdicts.push_back(
      {"source_continuous", is_continuous(f, t, ty.top).continuous, {}, ""});
  return r;
}

Report cmd_quotient(const Document& doc, const std::vector<std::string>& args) {
  need_args(args, 2, "quotient TX q");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  const Document::TopologyDecl& tx = need_topology(doc, args[0]);
  auto mit = doc.maps.find(args[1]);
  if (mit == doc.maps.end())
    throw Error(Errc::UnknownReference,
                "quotient needs a crisp map, '" + args[1] + "' is not one");
  const auto& [from, to, map] = mit->second;
  if (from != tx.set)
    throw Error(Errc::CarrierMismatch,
                "map does not start from the topology's carrier");
  QuotientSpace q = quotient_space(tx.top, map, need_set(doc, to)->labels());
  Report r;
  r.derived["equality"] = matrix_to_json(m, q.space.space->equality());
  Json opens = Json::array();
  for (const auto& u : q.space.opens)
    opens.push_back(labels_from_values(m, u.values));
  r.derived["opens"] = std::move(opens);
  r.verdicts.push_back({"lift_continuous",
                        is_continuous(q.lift, tx.top, q.space).continuous,
                        {},
                        ""});
  return r;
}

Report cmd_compact_spectrum(const Document& doc,
                            const std::vector<std::string>& args) {
  need_args(args, 1, "compact-spectrum T");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  const Document::TopologyDecl& td = need_topology(doc, args[0]);
  CompactnessSpectrum s = spectrum(td.top);
  Report r;
  Json pairs = Json::array();
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < m.size(); ++b)
      if (s.contains(a, b))
        pairs.push_back(Json::array({m.label(a), m.label(b)}));
  r.derived["pairs"] = std::move(pairs);
  r.derived["lowen_compact"] = lowen_compact(td.top);
  r.derived["chang_compact"] = chang_compact(td.top);
  bool mono = true;
  for (Elem a = 0; a < m.size() && mono; ++a)
    for (Elem b = 0; b < m.size() && mono; ++b) {
      if (!s.contains(a, b)) continue;
      for (Elem a2 = 0; a2 < m.size() && mono; ++a2)
        if (m.leq(a, a2) && !s.contains(a2, b)) mono = false;
      for (Elem b2 = 0; b2 < m.size() && mono; ++b2)
        if (m.leq(b2, b) && !s.contains(a, b2)) mono = false;
    }
  r.verdicts.push_back({"spectrum_monotone", mono, {}, ""});
  if (m.classify().is_mv) {
    bool agree = true;
    for (Elem a = 0; a < m.size() && agree; ++a)
      for (Elem b = 0; b < m.size() && agree; ++b)
        if (closed_char_compact(td.top, a, b) != s.contains(a, b))
          agree = false;
    r.verdicts.push_back({"closed_characterization_agrees", agree, {}, ""});
  }
  return r;
}

Report cmd_perfect(const Document& doc, const std::vector<std::string>& args,
                   const CommandOptions& opt) {
  need_args(args, 3, "perfect F TX TY");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  FuzzyFunction f = need_ff(doc, args[0]);
  const Document::TopologyDecl& tx = need_topology(doc, args[1]);
  const Document::TopologyDecl& ty = need_topology(doc, args[2]);
  Elem alpha = label_option(m, opt.alpha, m.top());
  Elem beta = label_option(m, opt.beta, m.top());
  PerfectVerdict pv = is_perfect(f, tx.top, ty.top, alpha, beta);
  Report r;
  r.derived["alpha"] = m.label(alpha);
  r.derived["beta"] = m.label(beta);
  r.verdicts.push_back(
      {"closed_map", pv.closed_map,
       pv.closed_witness
           ? std::vector<std::string>{labels_from_values(
                                          m, pv.closed_witness->values)
                                          .dump()}
           : std::vector<std::string>{},
       ""});
  r.verdicts.push_back(
      {"point_preimages_compact", pv.fiber_witness < 0,
       pv.fiber_witness < 0
           ? std::vector<std::string>{}
           : std::vector<std::string>{f.cod()->label(pv.fiber_witness)},
       ""});
  return r;
}

Report cmd_homeo_degree(const Document& doc,
                        const std::vector<std::string>& args) {
  need_args(args, 3, "homeo-degree F TX TY");
  require_valid_monoid(doc);
  const GLMonoid& m = *doc.monoid;
  FuzzyFunction f = need_ff(doc, args[0]);
  const Document::TopologyDecl& tx = need_topology(doc, args[1]);
  const Document::TopologyDecl& ty = need_topology(doc, args[2]);
  HomeoVerdict hv = homeomorphism_degree(f, tx.top, ty.top);
  Report r;
  if (hv.ok) {
    r.derived["degree"] = m.label(hv.degree);
    r.verdicts.push_back({"homeomorphism", true, {}, ""});
  } else {
    r.verdicts.push_back({"homeomorphism", false, {}, hv.reason});
  }
  return r;
}

Report cmd_probe(const std::vector<std::string>& args,
                 const CommandOptions& opt) {
  need_args(args, 1, "probe QUESTION");
  ProbeBounds bounds;
  bounds.max_carrier = 2;
  bounds.max_chain = 3;
  ProbeOutcome out =
      universal_probe(probe_question_from_string(args[0]), bounds, opt.budget);
  Report r;
  r.derived["question"] = out.question;
  r.derived["counterexample_found"] = out.counterexample_found;
  r.derived["detail"] = out.detail;
  r.derived["instances_checked"] = out.instances_checked;
  r.derived["rejected"] = out.rejected;
  r.verdicts.push_back(
      {"probe_completed", true, {},
       out.counterexample_found ? "counterexample found (evidence only)"
                                : "no counterexample found (not a proof)"});
  return r;
}

Report cmd_harness(const CommandOptions& opt) {
  SuiteOptions so;
  so.instances = opt.count;
  so.seed = opt.seed;
  CheckReport rep = run_all_suites(so);
  Report r;
  r.verdicts = rep.entries;
  r.derived["instances"] = opt.count;
  r.derived["seed"] = opt.seed;
  return r;
}

}  // namespace

Report run_command(const Document& doc, const std::string& command,
                   const std::vector<std::string>& args,
                   const CommandOptions& opt) {
  Report r;
  if (command == "validate") r = cmd_validate(doc);
  else if (command == "degrees") r = cmd_degrees(doc, args);
  else if (command == "compose") r = cmd_compose(doc, args);
  else if (command == "image") r = cmd_image(doc, args, true);
  else if (command == "preimage") r = cmd_image(doc, args, false);
  else if (command == "eq-preimage") r = cmd_eq_preimage(doc, args);
  else if (command == "eq-image") r = cmd_eq_image(doc, args);
  else if (command == "product") r = cmd_product(doc, args, opt);
  else if (command == "coproduct") r = cmd_coproduct(doc, args);
  else if (command == "topo-generate") r = cmd_topo_generate(doc, args, opt);
  else if (command == "continuity") r = cmd_continuity(doc, args);
  else if (command == "initial") r = cmd_initial(doc, args);
  else if (command == "quotient") r = cmd_quotient(doc, args);
  else if (command == "compact-spectrum") r = cmd_compact_spectrum(doc, args);
  else if (command == "perfect") r = cmd_perfect(doc, args, opt);
  else if (command == "homeo-degree") r = cmd_homeo_degree(doc, args);
  else if (command == "probe") r = cmd_probe(args, opt);
  else if (command == "harness") r = cmd_harness(opt);
  else
    throw Error(Errc::UnknownCommand, "unknown command '" + command + "'");
  r.command = command;
  r.args = args;
  return r;
}

}  // namespace fuzztop
