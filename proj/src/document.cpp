#include "fuzztop/document.hpp"

#include "fuzztop/error.hpp"

namespace fuzztop {

Elem element_from_label(const GLMonoid& m, const std::string& label) {
  auto e = m.lattice().find_label(label);
  if (!e)
    throw Error(Errc::ValueNotInCarrier,
                "label '" + label + "' is not a carrier element of " +
                    m.name());
  return *e;
}

std::vector<Elem> values_from_labels(const GLMonoid& m, const Json& arr) {
  if (!arr.is_array())
    throw Error(Errc::SyntaxError, "expected an array of carrier labels");
  std::vector<Elem> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_string())
      throw Error(Errc::SyntaxError, "carrier labels must be strings");
    out.push_back(element_from_label(m, v.get<std::string>()));
  }
  return out;
}

Json labels_from_values(const GLMonoid& m, const std::vector<Elem>& values) {
  Json arr = Json::array();
  for (Elem v : values) arr.push_back(m.label(v));
  return arr;
}

Json matrix_to_json(const GLMonoid& m, const Matrix& mat) {
  Json rows = Json::array();
  for (int r = 0; r < mat.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < mat.cols; ++c) row.push_back(m.label(mat.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Matrix matrix_from_json(const GLMonoid& m, const Json& rows, int want_rows,
                        int want_cols, const std::string& what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != want_rows)
    throw Error(Errc::DimensionMismatch,
                what + " must have " + std::to_string(want_rows) + " rows");
  Matrix out(want_rows, want_cols);
  for (int r = 0; r < want_rows; ++r) {
    std::vector<Elem> row = values_from_labels(m, rows[r]);
    if (static_cast<int>(row.size()) != want_cols)
      throw Error(Errc::DimensionMismatch,
                  what + " row " + std::to_string(r) + " must have " +
                      std::to_string(want_cols) + " columns");
    for (int c = 0; c < want_cols; ++c) out.at(r, c) = row[c];
  }
  return out;
}

MonoidPtr monoid_from_decl(const Json& decl, Json& canonical) {
  if (!decl.is_object())
    throw Error(Errc::SyntaxError, "monoid declaration must be an object");
  if (decl.contains("catalog")) {
    std::string name = decl.at("catalog").get<std::string>();
    if (name == "product") {
      if (!decl.contains("factors") || !decl.at("factors").is_array() ||
          decl.at("factors").size() != 2)
        throw Error(Errc::SyntaxError,
                    "product monoid needs exactly two factors");
      Json c1, c2;
      MonoidPtr a = monoid_from_decl(decl.at("factors")[0], c1);
      MonoidPtr b = monoid_from_decl(decl.at("factors")[1], c2);
      canonical = Json{{"catalog", "product"},
                       {"factors", Json::array({c1, c2})}};
      return GLMonoid::product(a, b);
    }
    int n = decl.value("n", name == "boolean" ? 2 : 0);
    canonical = Json{{"catalog", name}, {"n", n}};
    return GLMonoid::from_catalog(name, n);
  }
  if (!decl.contains("labels") || !decl.contains("leq") ||
      !decl.contains("tnorm"))
    throw Error(Errc::SyntaxError,
                "explicit monoid needs labels, leq and tnorm");
  std::vector<std::string> labels =
      decl.at("labels").get<std::vector<std::string>>();
  const int n = static_cast<int>(labels.size());
  const Json& leq_rows = decl.at("leq");
  if (!leq_rows.is_array() || static_cast<int>(leq_rows.size()) != n)
    throw Error(Errc::DimensionMismatch, "leq must be an n x n 0/1 matrix");
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r) {
    if (!leq_rows[r].is_array() || static_cast<int>(leq_rows[r].size()) != n)
      throw Error(Errc::DimensionMismatch, "leq must be an n x n 0/1 matrix");
    for (int c = 0; c < n; ++c)
      leq[static_cast<std::size_t>(r) * n + c] =
          leq_rows[r][c].get<int>() ? 1 : 0;
  }
  Lattice lat = Lattice::build(n, leq, labels);
  std::vector<Elem> tnorm(static_cast<std::size_t>(n) * n);
  const Json& trows = decl.at("tnorm");
  if (!trows.is_array() || static_cast<int>(trows.size()) != n)
    throw Error(Errc::DimensionMismatch, "tnorm must be an n x n label matrix");
  for (int r = 0; r < n; ++r) {
    if (!trows[r].is_array() || static_cast<int>(trows[r].size()) != n)
      throw Error(Errc::DimensionMismatch, "tnorm must be an n x n label matrix");
    for (int c = 0; c < n; ++c) {
      auto e = lat.find_label(trows[r][c].get<std::string>());
      if (!e)
        throw Error(Errc::ValueNotInCarrier,
                    "tnorm entry is not a carrier label");
      tnorm[static_cast<std::size_t>(r) * n + c] = *e;
    }
  }
  canonical = Json{{"labels", labels},
                   {"leq", decl.at("leq")},
                   {"tnorm", decl.at("tnorm")}};
  return std::make_shared<GLMonoid>(std::move(lat), std::move(tnorm),
                                    "explicit");
}

const LvSetPtr& need_set(const Document& doc, const std::string& name) {
  auto it = doc.sets.find(name);
  if (it == doc.sets.end())
    throw Error(Errc::UnknownReference, "unknown set '" + name + "'");
  return it->second;
}

}  // namespace

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::SyntaxError, std::string("document: ") + e.what());
  }
  if (!j.is_object())
    throw Error(Errc::SyntaxError, "document must be a JSON object");
  if (!j.contains("monoid"))
    throw Error(Errc::SyntaxError, "document needs a monoid");

  Document doc;
  doc.monoid = monoid_from_decl(j.at("monoid"), doc.monoid_decl);
  doc.monoid_report = doc.monoid->validate();

  if (j.contains("sets")) {
    for (const auto& [name, decl] : j.at("sets").items()) {
      std::vector<std::string> elements =
          decl.at("elements").get<std::vector<std::string>>();
      Matrix eq = matrix_from_json(*doc.monoid, decl.at("equality"),
                                   static_cast<int>(elements.size()),
                                   static_cast<int>(elements.size()),
                                   "equality of set '" + name + "'");
      doc.sets[name] =
          LValuedSet::make(doc.monoid, std::move(elements), std::move(eq));
    }
  }
  if (j.contains("subsets")) {
    for (const auto& [name, decl] : j.at("subsets").items()) {
      std::string parent = decl.at("set").get<std::string>();
      const LvSetPtr& s = need_set(doc, parent);
      std::vector<Elem> values = values_from_labels(*doc.monoid, decl.at("values"));
      if (static_cast<int>(values.size()) != s->size())
        throw Error(Errc::DimensionMismatch,
                    "subset '" + name + "' must cover its carrier");
      doc.subsets[name] = {parent, LSubset{s, std::move(values)}};
    }
  }
  if (j.contains("functions")) {
    for (const auto& [name, decl] : j.at("functions").items()) {
      std::string from = decl.at("from").get<std::string>();
      std::string to = decl.at("to").get<std::string>();
      const LvSetPtr& dom = need_set(doc, from);
      const LvSetPtr& cod = need_set(doc, to);
      if (decl.contains("map")) {
        std::vector<std::string> targets =
            decl.at("map").get<std::vector<std::string>>();
        if (static_cast<int>(targets.size()) != dom->size())
          throw Error(Errc::DimensionMismatch,
                      "map '" + name + "' must be total on its domain");
        std::vector<int> map;
        for (const auto& t : targets) {
          int idx = cod->index_of(t);
          if (idx < 0)
            throw Error(Errc::UnknownReference,
                        "map '" + name + "' targets unknown element '" + t +
                            "'");
          map.push_back(idx);
        }
        doc.maps[name] = {from, to, std::move(map)};
        continue;
      }
      Matrix mat = matrix_from_json(*doc.monoid, decl.at("matrix"),
                                    dom->size(), cod->size(),
                                    "matrix of function '" + name + "'");
      FfValidation v = validate_ff(dom, cod, std::move(mat));
      if (v.fn)
        doc.functions[name] = {from, to, *std::move(v.fn)};
      else
        doc.broken_functions[name] = std::move(v.report);
    }
  }
  if (j.contains("topologies")) {
    for (const auto& [name, decl] : j.at("topologies").items()) {
      std::string set = decl.at("set").get<std::string>();
      const LvSetPtr& s = need_set(doc, set);
      Document::TopologyDecl td;
      td.set = set;
      if (decl.contains("subbase")) {
        td.from_subbase = true;
        td.repair = decl.value("repair", false);
        for (const auto& row : decl.at("subbase")) {
          std::vector<Elem> values = values_from_labels(*doc.monoid, row);
          if (static_cast<int>(values.size()) != s->size())
            throw Error(Errc::DimensionMismatch,
                        "subbase member of '" + name +
                            "' must cover its carrier");
          td.subbase.push_back(LSubset{s, std::move(values)});
        }
        td.top = generate_topology(s, td.subbase, td.repair);
      } else {
        std::vector<LSubset> opens;
        for (const auto& row : decl.at("opens")) {
          std::vector<Elem> values = values_from_labels(*doc.monoid, row);
          if (static_cast<int>(values.size()) != s->size())
            throw Error(Errc::DimensionMismatch,
                        "open of '" + name + "' must cover its carrier");
          opens.push_back(LSubset{s, std::move(values)});
        }
        td.top = make_topology(s, std::move(opens));
      }
      doc.topologies[name] = std::move(td);
    }
  }
  return doc;
}

std::string emit_document(const Document& doc) {
  const GLMonoid& m = *doc.monoid;
  Json j;
  j["monoid"] = doc.monoid_decl;
  Json sets = Json::object();
  for (const auto& [name, s] : doc.sets) {
    sets[name] = Json{{"elements", s->labels()},
                      {"equality", matrix_to_json(m, s->equality())}};
  }
  j["sets"] = std::move(sets);
  Json subsets = Json::object();
  for (const auto& [name, ps] : doc.subsets) {
    subsets[name] = Json{{"set", ps.first},
                         {"values", labels_from_values(m, ps.second.values)}};
  }
  j["subsets"] = std::move(subsets);
  Json functions = Json::object();
  for (const auto& [name, f] : doc.functions) {
    functions[name] = Json{{"from", std::get<0>(f)},
                           {"to", std::get<1>(f)},
                           {"matrix", matrix_to_json(m, std::get<2>(f).matrix())}};
  }
  for (const auto& [name, mp] : doc.maps) {
    const auto& cod = doc.sets.at(std::get<1>(mp));
    Json targets = Json::array();
    for (int v : std::get<2>(mp)) targets.push_back(cod->label(v));
    functions[name] = Json{{"from", std::get<0>(mp)},
                           {"to", std::get<1>(mp)},
                           {"map", std::move(targets)}};
  }
  j["functions"] = std::move(functions);
  Json tops = Json::object();
  for (const auto& [name, td] : doc.topologies) {
    Json opens = Json::array();
    for (const auto& u : td.top.opens)
      opens.push_back(labels_from_values(m, u.values));
    tops[name] = Json{{"set", td.set}, {"opens", std::move(opens)}};
  }
  j["topologies"] = std::move(tops);
  return j.dump(2);
}

bool document_equal(const Document& a, const Document& b) {
  if (!a.monoid->same_structure(*b.monoid)) return false;
  if (a.sets.size() != b.sets.size() || a.subsets.size() != b.subsets.size() ||
      a.functions.size() != b.functions.size() || a.maps.size() != b.maps.size() ||
      a.topologies.size() != b.topologies.size())
    return false;
  for (const auto& [name, s] : a.sets) {
    auto it = b.sets.find(name);
    if (it == b.sets.end() || !(s->labels() == it->second->labels()) ||
        !(s->equality() == it->second->equality()))
      return false;
  }
  for (const auto& [name, ps] : a.subsets) {
    auto it = b.subsets.find(name);
    if (it == b.subsets.end() || ps.first != it->second.first ||
        ps.second.values != it->second.second.values)
      return false;
  }
  for (const auto& [name, f] : a.functions) {
    auto it = b.functions.find(name);
    if (it == b.functions.end() || std::get<0>(f) != std::get<0>(it->second) ||
        std::get<1>(f) != std::get<1>(it->second) ||
        !(std::get<2>(f).matrix() == std::get<2>(it->second).matrix()))
      return false;
  }
  for (const auto& [name, mp] : a.maps) {
    auto it = b.maps.find(name);
    if (it == b.maps.end() || mp != it->second) return false;
  }
  for (const auto& [name, td] : a.topologies) {
    auto it = b.topologies.find(name);
    if (it == b.topologies.end() || td.set != it->second.set) return false;
    if (td.top.opens.size() != it->second.top.opens.size()) return false;
    for (std::size_t i = 0; i < td.top.opens.size(); ++i)
      if (td.top.opens[i].values != it->second.top.opens[i].values)
        return false;
  }
  return true;
}

}  // namespace fuzztop
