#pragma once
// Shared test corpus: the worked-example formulas and small automata.

#include <string>
#include <vector>

#include "barmu/automata.hpp"
#include "barmu/formula.hpp"

namespace corpus {

inline const std::vector<std::string> kFormulas = {
    "top",
    "<#a> [a] eps",
    "mu X . <#a> (X || mu Y . <#b> Y || <a> top)",
    "mu X . <#a> X || <#a> mu Y . <#b> Y || <a> eps",
    "<#a> <#b> mu X . <#b> X || <a> <b> top",
};

inline const std::string kRepeatedBar = "mu X . [#a] X && [#b] mu Y . [b] bot && [#c] Y";

struct NamedAutomaton {
  std::string name, text;
};

inline const std::vector<NamedAutomaton> kAutomata = {
    {"nd_blocking", "states: s t u v\ninitial: s\naccept: v=1\ntrans: s #a t\ntrans: t #b u\ntrans: u b v\n"},
    {"hash_a_a", "states: s t u\ninitial: s\naccept: u=1\ntrans: s #a t\ntrans: t a u\n"},
    {"hash_a_a_a", "states: s t u v\ninitial: s\naccept: v=1\ntrans: s #a t\ntrans: t a u\ntrans: u a v\n"},
    {"hash_a_b", "states: s t u\ninitial: s\naccept: u=1\ntrans: s #a t\ntrans: t #b u\n"},
    {"hash_a_b_a", "states: s t u v\ninitial: s\naccept: v=1\ntrans: s #a t\ntrans: t #b u\ntrans: u a v\n"},
    {"star", "states: s\ninitial: s\naccept: s=1\ntrans: s #a s\n"},
    {"loop", "states: s t\ninitial: s\naccept: t=1\ntrans: s #a t\ntrans: t a t\n"},
    {"top", "states: s\ninitial: s\naccept: s=top\n"},
    {"top_after_two", "states: s t u\ninitial: s\naccept: u=top\ntrans: s #a t\ntrans: t #b u\ntrans: t a t\n"},
    {"shadow",
     "states: s t u v w x\ninitial: s\naccept: v=1 w=top\ntrans: s #b t\ntrans: t #a u\ntrans: u a v\n"
     "trans: t b w\ntrans: u #a x\ntrans: x a v\n"},
    {"eps_chain",
     "states: s t u v\ninitial: s\naccept: u=1 v=top\ntrans: s eps t\ntrans: t #a u\ntrans: u a u\n"
     "trans: u eps s\ntrans: t #b s\ntrans: s #c v\n"},
    {"rebind",
     "states: s t u v\ninitial: s\naccept: v=1\ntrans: s #a t\ntrans: t #a u\ntrans: u a v\ntrans: t a t\n"
     "trans: u #b t\n"},
    {"two_regs",
     "states: s t u v w\ninitial: s\naccept: w=1 v=1\ntrans: s #a t\ntrans: t #b u\ntrans: u a v\n"
     "trans: v b w\ntrans: u #c u\ntrans: v #a t\n"},
};

inline std::vector<barmu::ExtBarNFA> automata() {
  std::vector<barmu::ExtBarNFA> out;
  for (auto& a : kAutomata) out.push_back(barmu::parse_automaton(a.text));
  return out;
}

}  // namespace corpus
