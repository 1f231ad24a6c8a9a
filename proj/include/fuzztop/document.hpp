#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "fuzztop/check.hpp"
#include "fuzztop/ltop.hpp"

namespace fuzztop {

using Json = nlohmann::ordered_json;

// A parsed problem document: one monoid, named L-valued sets, subsets,
// fuzzy functions / crisp maps, and topologies. Structures are validated
// while parsing; fuzzy functions and topologies whose matrices violate the
// axioms are kept as witnessed reports so `validate` can render them.
struct Document {
  MonoidPtr monoid;
  Json monoid_decl;
  CheckReport monoid_report;

  std::map<std::string, LvSetPtr> sets;
  std::map<std::string, std::pair<std::string, LSubset>> subsets;
  std::map<std::string, std::tuple<std::string, std::string, FuzzyFunction>>
      functions;
  std::map<std::string, CheckReport> broken_functions;
  std::map<std::string, std::tuple<std::string, std::string, std::vector<int>>>
      maps;

  struct TopologyDecl {
    std::string set;
    LTopSpace top;
    bool from_subbase = false;
    std::vector<LSubset> subbase;
    bool repair = false;
  };
  std::map<std::string, TopologyDecl> topologies;
};

Document parse_document(const std::string& text);
std::string emit_document(const Document& doc);
bool document_equal(const Document& a, const Document& b);

// Label <-> element helpers shared with the report layer.
Elem element_from_label(const GLMonoid& m, const std::string& label);
std::vector<Elem> values_from_labels(const GLMonoid& m, const Json& arr);
Json labels_from_values(const GLMonoid& m, const std::vector<Elem>& values);
Json matrix_to_json(const GLMonoid& m, const Matrix& mat);

}  // namespace fuzztop
