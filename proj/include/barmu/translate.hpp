#pragma once

#include <optional>
#include <set>
#include <vector>

#include "barmu/automata.hpp"
#include "barmu/formula.hpp"

namespace barmu {

// ------------------------------------------------------- restriction calculus

// phi^B_C(a)_n; a == nullopt is the marker *. Requires B in C and a not in B.
Formula restrict(const Formula& phi, const NameSet& b, const NameSet& c, std::optional<Name> a, int n);
// phi^B_C(a)^D_n: bot when a is in D.
Formula restrict_guess(const Formula& phi, const NameSet& b, const NameSet& c, std::optional<Name> a, int n,
                       const NameSet& d);

// pi . (body^B_C(a)); denotes (pi.body)^{pi.B}_{pi.C}(pi.a).
struct AnnotatedFormula {
  Permutation perm;
  Formula body;
  NameSet B, C;
  std::optional<Name> a;
};

// Restricts perm to the names of body, B, C and a, so that equal instances
// compare equal.
AnnotatedFormula make_annotated(Permutation perm, Formula body, NameSet b, NameSet c, std::optional<Name> a);
bool operator<(const AnnotatedFormula& x, const AnnotatedFormula& y);
bool operator==(const AnnotatedFormula& x, const AnnotatedFormula& y);

using AnnotatedSet = std::set<AnnotatedFormula>;

Formula instantiate(const AnnotatedFormula& f, int n);
Formula instantiate(const AnnotatedSet& s, int n);  // conjunction
// True when the set holds pi.(psi^B_C(a)) and pi'.(psi^B_C(a)) with
// different literal supports.
bool has_two_instances(const AnnotatedSet& s);
std::set<AnnotatedSet> rest(const std::set<AnnotatedSet>& phi);

// ------------------------------------------------------------- translations

struct TranslateOptions {
  std::size_t pool_size = 0;  // 0 picks deg(phi) + 2
  std::size_t budget = 100000;
};

struct TranslateStats {
  std::size_t states = 0;
  std::size_t literal_states = 0;
  std::size_t edges = 0;
  std::size_t eps_edges = 0;
  std::size_t pool_size = 0;
  std::size_t degree = 0;
};

// Automaton whose bar language is the set of closed models of phi. phi must
// be closed, clean, guarded and annotated (parse_formula output is). The
// result keeps its epsilon transitions. Throws ResourceError past the state
// budget.
ExtBarNFA formula_to_automaton(const Formula& phi, const TranslateOptions& opt = {},
                               TranslateStats* stats = nullptr);

Formula automaton_to_formula(const ExtBarNFA& a);

}  // namespace barmu
