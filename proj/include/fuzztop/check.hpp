#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fuzztop {

// One audited law. A failed entry always carries a witness; `note` holds
// free-form context such as "not asserted at mu<T".
struct CheckEntry {
  std::string law;
  bool pass = true;
  std::vector<std::string> witness;
  std::string note;
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  void add(std::string law, bool pass, std::vector<std::string> witness = {},
           std::string note = {}) {
    entries.push_back(
        {std::move(law), pass, std::move(witness), std::move(note)});
  }

  void append(const CheckReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }

  const CheckEntry* find(std::string_view law) const {
    for (const auto& e : entries)
      if (e.law == law) return &e;
    return nullptr;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& e : entries)
      if (!e.pass) ++n;
    return n;
  }
};

}  // namespace fuzztop
