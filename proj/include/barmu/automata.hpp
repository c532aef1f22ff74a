#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "barmu/barstring.hpp"
#include "barmu/nominal.hpp"

namespace barmu {

enum class Acc : std::uint8_t { No = 0, Yes = 1, Top = 2 };

struct Edge {
  bool eps = false;
  Letter letter{};  // unused when eps
  int to = 0;
};

// Finite automaton over bar letters with acceptance in {0, 1, top}.
struct ExtBarNFA {
  std::vector<std::string> names;  // state labels, used by the text format
  std::vector<Acc> accept;
  std::vector<std::vector<Edge>> out;
  int initial = 0;

  int add_state(std::string label, Acc acc = Acc::No);
  void add_edge(int from, Letter l, int to) { out[from].push_back({false, l, to}); }
  void add_eps(int from, int to) { out[from].push_back({true, {}, to}); }

  std::size_t num_states() const { return accept.size(); }
  std::size_t num_edges() const;
  bool has_eps() const;
  bool has_top() const;
  NameSet names_used() const;  // names on transition labels
};

// Throws ParseError with codes Syntax, UnknownState, TopNotDeadlock or
// NotClosed.
ExtBarNFA parse_automaton(std::string_view text);
std::string to_string(const ExtBarNFA& a);

// Structural checks shared by the parser and programmatic builders.
void check_top_deadlock(const ExtBarNFA& a);
void check_closed(const ExtBarNFA& a);

// States from which some state with f in {1, top} is reachable.
std::vector<bool> productive(const ExtBarNFA& a);
std::vector<NameSet> state_free_names(const ExtBarNFA& a);
std::size_t degree(const ExtBarNFA& a);

// Literal acceptance with the top-prefix rule.
bool literal_accepts(const ExtBarNFA& a, const BarString& w);

ExtBarNFA epsilon_eliminate(const ExtBarNFA& a);
// Keeps only states reachable from the initial one.
ExtBarNFA trim(const ExtBarNFA& a);

// A state of the name-dropping automaton: a base state and a register map
// from (part of) FN(base) to the literal names currently standing for them.
struct NdState {
  int q = 0;
  std::map<Name, Name> reg;
  friend auto operator<=>(const NdState&, const NdState&) = default;
};

// Lazy view of nd(A). In maximal mode a register is dropped only when a new
// binder clashes with it; in full mode every subset may be dropped.
class NameDrop {
 public:
  explicit NameDrop(const ExtBarNFA& a, bool maximal = true);

  const ExtBarNFA& base() const { return a_; }
  const std::vector<NameSet>& free_names() const { return fn_; }
  NdState initial() const;
  std::vector<NdState> step(const NdState& s, const Letter& l) const;
  Acc accept(const NdState& s) const { return a_.accept[s.q]; }
  // Literal acceptance of nd(A), including the top-prefix rule.
  bool accepts(const BarString& w) const;

 private:
  ExtBarNFA a_;  // epsilon-free copy
  std::vector<NameSet> fn_;
  bool maximal_;
};

// w in L_alpha(A), decided through nd(A).
bool accepts_alpha(const ExtBarNFA& a, const BarString& w);

struct SearchResult {
  bool holds = false;               // empty / included
  std::optional<BarString> witness;  // nonempty word / counterexample
  std::size_t explored = 0;
};

// Emptiness of L_alpha(A) over closed strings; the witness is a shortest
// closed accepted string.
SearchResult is_empty(const ExtBarNFA& a);

// L_alpha(a1) included in L_alpha(a2). a1 must be epsilon-free without top
// states; a2 is epsilon-eliminated internally. Throws ResourceError beyond
// the configuration budget.
SearchResult inclusion(const ExtBarNFA& a1, const ExtBarNFA& a2, std::size_t budget = 1000000);

}  // namespace barmu
