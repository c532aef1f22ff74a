#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace barmu {

// Names are indices into a totally ordered, unbounded pool of atoms.
using Name = std::uint32_t;
using NameSet = std::set<Name>;

// First id of the segment reserved for canonical binders.
inline constexpr Name kCanonicalBase = 26u * 100000u;
// Identifiers that are not of the form letter+number live here.
inline constexpr Name kInternBase = 1u << 30;

std::string name_to_string(Name n);
// Accepts [a-z][a-z0-9]*, rejects the reserved words eps/top/bot/mu.
std::optional<Name> name_from_string(std::string_view s);

Name least_fresh(const NameSet& excluded);
Name least_fresh_from(const NameSet& excluded, Name start);

class FreshSupply {
 public:
  FreshSupply() = default;
  explicit FreshSupply(NameSet excluded) : excluded_(std::move(excluded)) {}
  Name next();
  void exclude(Name n) { excluded_.insert(n); }
  const NameSet& excluded() const { return excluded_; }

 private:
  NameSet excluded_;
};

class Permutation {
 public:
  Permutation() = default;
  static Permutation identity() { return {}; }
  static Permutation transposition(Name a, Name b);
  // Builds a permutation from an injective partial map, completing it on
  // the image so that domain and image coincide.
  static Permutation extending(const std::map<Name, Name>& partial);

  Name apply(Name a) const;
  Name operator()(Name a) const { return apply(a); }
  NameSet apply(const NameSet& s) const;
  Permutation compose(const Permutation& inner) const;  // this after inner
  Permutation inverse() const;
  NameSet support() const;
  bool is_identity() const { return map_.empty(); }
  const std::map<Name, Name>& mapping() const { return map_; }

  friend bool operator==(const Permutation& x, const Permutation& y) { return x.map_ == y.map_; }
  friend bool operator<(const Permutation& x, const Permutation& y) { return x.map_ < y.map_; }

 private:
  void normalize();
  std::map<Name, Name> map_;  // only non-fixed points
};

Permutation compose(const Permutation& p1, const Permutation& p2);

// <a>x = <b>y, decided with the least c fresh for a, b and the given names
// of x and y.
template <class T, class Act, class Names, class Eq>
bool abstraction_eq(Name a, const T& x, Name b, const T& y, Act act, Names names, Eq eq) {
  NameSet ex = names(x);
  NameSet ey = names(y);
  ex.insert(ey.begin(), ey.end());
  ex.insert(a);
  ex.insert(b);
  Name c = least_fresh(ex);
  return eq(act(Permutation::transposition(a, c), x), act(Permutation::transposition(b, c), y));
}

// Same test with a caller-chosen fresh name; used to check that the
// verdict does not depend on the choice.
template <class T, class Act, class Eq>
bool abstraction_eq_with(Name a, const T& x, Name b, const T& y, Name c, Act act, Eq eq) {
  return eq(act(Permutation::transposition(a, c), x), act(Permutation::transposition(b, c), y));
}

std::string to_string(const NameSet& s);

}  // namespace barmu
