#include "fuzztop/lattice.hpp"

#include <numeric>

#include "fuzztop/error.hpp"

namespace fuzztop {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAPartialOrder: return "NotAPartialOrder";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotDistributive: return "NotDistributive";
    case Errc::DegenerateLattice: return "DegenerateLattice";
    case Errc::UnknownCatalogName: return "UnknownCatalogName";
    case Errc::ChainTooShort: return "ChainTooShort";
    case Errc::ReflexivityFail: return "ReflexivityFail";
    case Errc::SymmetryFail: return "SymmetryFail";
    case Errc::TransitivityFail: return "TransitivityFail";
    case Errc::CarrierMismatch: return "CarrierMismatch";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::MonoidMismatch: return "MonoidMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::CodomainMismatch: return "CodomainMismatch";
    case Errc::NotInjective: return "NotInjective";
    case Errc::ParentMismatch: return "ParentMismatch";
    case Errc::NotCrispRepresentable: return "NotCrispRepresentable";
    case Errc::RawViolates1ff: return "RawViolates1ff";
    case Errc::RawViolates2ff: return "RawViolates2ff";
    case Errc::RawViolates3ff: return "RawViolates3ff";
    case Errc::NotTopSurjective: return "NotTopSurjective";
    case Errc::ImageEqualityInvalid: return "ImageEqualityInvalid";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::CarrierTooLarge: return "CarrierTooLarge";
    case Errc::ExplosionCap: return "ExplosionCap";
    case Errc::NonExtensionalSubbase: return "NonExtensionalSubbase";
    case Errc::BaseDoesNotGenerate: return "BaseDoesNotGenerate";
    case Errc::MuNotTop: return "MuNotTop";
    case Errc::NotMVAlgebra: return "NotMVAlgebra";
    case Errc::NotContinuous: return "NotContinuous";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BoundsTooLarge: return "BoundsTooLarge";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownReference: return "UnknownReference";
    case Errc::ValueNotInCarrier: return "ValueNotInCarrier";
    case Errc::ValidationFailure: return "ValidationFailure";
    case Errc::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

Lattice Lattice::build(int n, const std::vector<std::uint8_t>& leq,
                       std::vector<std::string> labels) {
  if (n <= 0 || static_cast<int>(leq.size()) != n * n ||
      static_cast<int>(labels.size()) != n)
    throw Error(Errc::DimensionMismatch,
                "order relation and labels must cover an n-element carrier");

  Lattice L;
  L.n_ = n;
  L.labels_ = std::move(labels);
  L.leq_ = leq;

  auto le = [&](Elem a, Elem b) { return leq[a * static_cast<std::size_t>(n) + b] != 0; };

  for (Elem a = 0; a < n; ++a)
    if (!le(a, a))
      throw Error(Errc::NotAPartialOrder, "relation is not reflexive",
                  {L.labels_[a]});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (a != b && le(a, b) && le(b, a))
        throw Error(Errc::NotAPartialOrder, "relation is not antisymmetric",
                    {L.labels_[a], L.labels_[b]});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (le(a, b) && le(b, c) && !le(a, c))
          throw Error(Errc::NotAPartialOrder, "relation is not transitive",
                      {L.labels_[a], L.labels_[b], L.labels_[c]});

  L.join_.assign(static_cast<std::size_t>(n) * n, 0);
  L.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem lub = -1, glb = -1;
      for (Elem u = 0; u < n; ++u) {
        if (!(le(a, u) && le(b, u))) continue;
        bool least = true;
        for (Elem v = 0; v < n; ++v)
          if (le(a, v) && le(b, v) && !le(u, v)) { least = false; break; }
        if (least) { lub = u; break; }
      }
      for (Elem u = 0; u < n; ++u) {
        if (!(le(u, a) && le(u, b))) continue;
        bool greatest = true;
        for (Elem v = 0; v < n; ++v)
          if (le(v, a) && le(v, b) && !le(v, u)) { greatest = false; break; }
        if (greatest) { glb = u; break; }
      }
      if (lub < 0)
        throw Error(Errc::NotALattice, "pair has no least upper bound",
                    {L.labels_[a], L.labels_[b]});
      if (glb < 0)
        throw Error(Errc::NotALattice, "pair has no greatest lower bound",
                    {L.labels_[a], L.labels_[b]});
      L.join_[L.idx(a, b)] = lub;
      L.meet_[L.idx(a, b)] = glb;
    }
  }

  Elem top = 0, bot = 0;
  for (Elem a = 1; a < n; ++a) {
    top = L.join_[L.idx(top, a)];
    bot = L.meet_[L.idx(bot, a)];
  }
  L.top_ = top;
  L.bot_ = bot;
  if (top == bot)
    throw Error(Errc::DegenerateLattice, "carrier must have bot < top");

  // On a finite lattice, distributivity of binary meet over binary join is
  // equivalent to the infinite distributive laws.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem lhs = L.meet_[L.idx(a, L.join_[L.idx(b, c)])];
        Elem rhs = L.join_[L.idx(L.meet_[L.idx(a, b)], L.meet_[L.idx(a, c)])];
        if (lhs != rhs)
          throw Error(Errc::NotDistributive,
                      "meet does not distribute over join",
                      {L.labels_[a], L.labels_[b], L.labels_[c]});
      }

  return L;
}

namespace {

std::string fraction_label(int k, int d) {
  if (k == 0) return "0";
  if (k == d) return "1";
  int g = std::gcd(k, d);
  return std::to_string(k / g) + "/" + std::to_string(d / g);
}

}  // namespace

Lattice Lattice::chain(int n) {
  if (n < 2) throw Error(Errc::ChainTooShort, "a chain needs at least 2 elements");
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = fraction_label(a, n - 1);
    for (int b = a; b < n; ++b) leq[a * static_cast<std::size_t>(n) + b] = 1;
  }
  return build(n, leq, std::move(labels));
}

Lattice Lattice::product(const Lattice& a, const Lattice& b) {
  int n = a.size() * b.size();
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> labels(n);
  auto code = [&](Elem x, Elem y) { return x * b.size() + y; };
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < b.size(); ++y) {
      labels[code(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
      for (Elem u = 0; u < a.size(); ++u)
        for (Elem v = 0; v < b.size(); ++v)
          if (a.leq(x, u) && b.leq(y, v))
            leq[code(x, y) * static_cast<std::size_t>(n) + code(u, v)] = 1;
    }
  return build(n, leq, std::move(labels));
}

std::optional<Elem> Lattice::find_label(const std::string& s) const {
  for (Elem a = 0; a < n_; ++a)
    if (labels_[a] == s) return a;
  return std::nullopt;
}

}  // namespace fuzztop
