#include "fuzztop/report.hpp"

#include "fuzztop/error.hpp"

namespace fuzztop {

std::string emit_report_text(const Report& r) {
  std::string out = "fuzztop report: " + r.command;
  for (const auto& a : r.args) out += " " + a;
  out += "\n";
  for (const auto& v : r.verdicts) {
    out += v.pass ? "[PASS] " : "[FAIL] ";
    out += v.law;
    if (!v.witness.empty()) {
      out += " (witness:";
      for (const auto& w : v.witness) out += " " + w;
      out += ")";
    }
    if (!v.note.empty()) out += " -- " + v.note;
    out += "\n";
  }
  if (!r.derived.empty()) {
    out += "derived:\n";
    out += r.derived.dump(2);
    out += "\n";
  }
  return out;
}

std::string emit_report_machine(const Report& r) {
  Json j;
  j["schema"] = "report-v1";
  j["command"] = r.command;
  j["args"] = r.args;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back(Json{{"name", v.law},
                            {"pass", v.pass},
                            {"witness", v.witness},
                            {"note", v.note}});
  j["verdicts"] = std::move(verdicts);
  j["derived"] = r.derived;
  return j.dump(2) + "\n";
}

Report parse_report(const std::string& machine_text) {
  Json j;
  try {
    j = Json::parse(machine_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::SyntaxError, std::string("report: ") + e.what());
  }
  if (!j.is_object() || j.value("schema", "") != "report-v1")
    throw Error(Errc::SyntaxError, "not a report-v1 document");
  Report r;
  r.command = j.at("command").get<std::string>();
  r.args = j.at("args").get<std::vector<std::string>>();
  for (const auto& v : j.at("verdicts")) {
    CheckEntry e;
    e.law = v.at("name").get<std::string>();
    e.pass = v.at("pass").get<bool>();
    e.witness = v.at("witness").get<std::vector<std::string>>();
    e.note = v.at("note").get<std::string>();
    r.verdicts.push_back(std::move(e));
  }
  r.derived = j.at("derived");
  return r;
}

bool report_equal(const Report& a, const Report& b) {
  if (a.command != b.command || a.args != b.args ||
      a.verdicts.size() != b.verdicts.size() || a.derived != b.derived)
    return false;
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    const auto& x = a.verdicts[i];
    const auto& y = b.verdicts[i];
    if (x.law != y.law || x.pass != y.pass || x.witness != y.witness ||
        x.note != y.note)
      return false;
  }
  return true;
}

}  // namespace fuzztop
