#pragma once

#include <optional>
#include <string>

#include "barmu/automata.hpp"
#include "barmu/formula.hpp"
#include "barmu/translate.hpp"

namespace barmu {

enum class Result { Holds, Fails, Unknown };
const char* result_name(Result r);  // holds / fails / unknown-bounded

struct Verdict {
  Result result = Result::Unknown;
  std::optional<BarString> witness;
  std::optional<DataWord> data_witness;
  std::string note;
  std::size_t states = 0;    // automaton states built
  std::size_t explored = 0;  // search configurations
  double millis = 0;
};

struct DecideOptions {
  TranslateOptions translate;
  std::size_t inclusion_budget = 1000000;
};

// holds = satisfiable; the witness is a shortest model.
Verdict satisfiable(const Formula& phi, const DecideOptions& opt = {});
// holds = valid; the witness is a closed non-model.
Verdict valid_global(const Formula& phi, const DecideOptions& opt = {});
// psi refines phi: every model of psi is a model of phi.
Verdict refines_global(const Formula& psi, const Formula& phi, const DecideOptions& opt = {});
// L_alpha(a) inside the models of phi. a must be epsilon-free without top
// states.
Verdict model_check_global(const ExtBarNFA& a, const Formula& phi, const DecideOptions& opt = {});
// Validity under local freshness, via the automaton for (#a)*.
Verdict valid_local(const Formula& phi, const DecideOptions& opt = {});
// D-image inclusion checked on data words up to maxlen; never returns
// holds.
Verdict model_check_local_bounded(const ExtBarNFA& a, const Formula& phi, int maxlen);

// The single-state automaton for (#a)*.
ExtBarNFA universal_local();

// Conjunction of two closed formulas with binders kept apart.
Formula conjoin(const Formula& x, const Formula& y);

}  // namespace barmu
