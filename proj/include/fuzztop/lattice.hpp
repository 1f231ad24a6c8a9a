#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzztop/error.hpp"
#include "fuzztop/matrix.hpp"

namespace fuzztop {

// Finite bounded distributive lattice given by its order relation.
// Join/meet tables and top/bot are derived and verified at construction:
// build() rejects relations that are not partial orders, pairs lacking a
// least upper / greatest lower bound, non-distributive triples, and the
// degenerate one-point case.
class Lattice {
 public:
  static Lattice build(int n, const std::vector<std::uint8_t>& leq,
                       std::vector<std::string> labels);

  // Chain 0 < 1/(n-1) < ... < 1 with exact rational labels.
  static Lattice chain(int n);

  static Lattice product(const Lattice& a, const Lattice& b);

  int size() const { return n_; }
  bool leq(Elem a, Elem b) const { return leq_[idx(a, b)] != 0; }
  Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
  Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
  Elem top() const { return top_; }
  Elem bot() const { return bot_; }

  Elem join_all(std::span<const Elem> xs) const {
    Elem r = bot_;
    for (Elem x : xs) r = join(r, x);
    return r;
  }
  Elem meet_all(std::span<const Elem> xs) const {
    Elem r = top_;
    for (Elem x : xs) r = meet(r, x);
    return r;
  }

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find_label(const std::string& s) const;

  bool same_structure(const Lattice& o) const {
    return n_ == o.n_ && leq_ == o.leq_;
  }

 private:
  Lattice() = default;
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * n_ + b;
  }

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  Elem top_ = 0;
  Elem bot_ = 0;
};

}  // namespace fuzztop
