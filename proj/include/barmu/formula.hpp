#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "barmu/barstring.hpp"
#include "barmu/nominal.hpp"

namespace barmu {

enum class Op : std::uint8_t { Eps, NotEps, And, Or, Dia, Box, Var, Mu };

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
  Op op;
  Letter letter{};  // Dia, Box
  std::string var;  // Var, Mu
  NameSet ann;      // Var: FN of the binding fixpoint
  Formula a, b;     // children; a is the body of Dia, Box and Mu
};

Formula f_eps();
Formula f_not_eps();
Formula f_and(Formula l, Formula r);
Formula f_or(Formula l, Formula r);
Formula f_dia(Letter s, Formula f);
Formula f_box(Letter s, Formula f);
Formula f_var(std::string x, NameSet ann = {});
Formula f_mu(std::string x, Formula body);
Formula f_top();
Formula f_bot();
Formula f_or_all(const std::vector<Formula>& fs);   // bot when empty
Formula f_and_all(const std::vector<Formula>& fs);  // top when empty

bool is_top(const Formula& f);
bool is_bot(const Formula& f);

int compare(const Formula& f, const Formula& g);
bool equal(const Formula& f, const Formula& g);
struct FormulaLess {
  bool operator()(const Formula& f, const Formula& g) const { return compare(f, g) < 0; }
};

std::size_t size(const Formula& f);  // node count
NameSet free_names(const Formula& f);
NameSet bound_names(const Formula& f);
NameSet all_names(const Formula& f);  // N = FN u BN, including annotations
std::size_t degree(const Formula& f);
std::set<std::string> free_vars(const Formula& f);

Formula act(const Permutation& p, const Formula& f);
// Recomputes every variable annotation as FN of its binder.
Formula annotate(const Formula& f);
// Literal substitution of g for the free variable x; names are captured.
Formula substitute(const Formula& f, const std::string& x, const Formula& g);
// Renames fixpoint binders so that they are pairwise distinct and distinct
// from free variables.
Formula clean(const Formula& f);
bool is_clean(const Formula& f);
Formula unfold(const Formula& mu);
Formula negate(const Formula& f);
bool is_guarded(const Formula& f);
bool alpha_eq(const Formula& f, const Formula& g);
std::vector<Formula> closure(const Formula& f);

// Diagnostics for parse-time checks; empty when well formed.
std::vector<std::string> check_wellformed(const Formula& f);

std::string to_string(const Formula& f);
Formula parse_formula(std::string_view text);

// S, w |= f. Throws PreconditionError when FN(f) or FN(w) is not inside S or
// f has free variables.
bool evaluate(const NameSet& s, const BarString& w, const Formula& f);

}  // namespace barmu
