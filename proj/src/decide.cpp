#include "barmu/decide.hpp"

#include <chrono>

#include "barmu/errors.hpp"

namespace barmu {

const char* result_name(Result r) {
  switch (r) {
    case Result::Holds:
      return "holds";
    case Result::Fails:
      return "fails";
    case Result::Unknown:
      return "unknown-bounded";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_closed(const Formula& phi) {
  if (!free_vars(phi).empty()) throw PreconditionError("formula has free fixpoint variables");
  if (!free_names(phi).empty()) throw PreconditionError("formula has free names");
  if (!is_guarded(phi)) throw PreconditionError("formula is not guarded");
}

}  // namespace

Formula conjoin(const Formula& x, const Formula& y) { return annotate(clean(f_and(x, y))); }

Verdict satisfiable(const Formula& phi, const DecideOptions& opt) {
  require_closed(phi);
  auto t0 = Clock::now();
  Verdict v;
  try {
    TranslateStats st;
    ExtBarNFA a = formula_to_automaton(phi, opt.translate, &st);
    v.states = st.states;
    SearchResult r = is_empty(a);
    v.explored = r.explored;
    if (r.holds) {
      v.result = Result::Fails;
    } else {
      if (!evaluate({}, *r.witness, phi)) throw Error(ErrorCode::Precondition, "internal: satisfiability witness does not verify");
      v.result = Result::Holds;
      v.witness = r.witness;
    }
  } catch (const ResourceError& e) {
    v.result = Result::Unknown;
    v.note = e.what();
  }
  v.millis = since(t0);
  return v;
}

Verdict valid_global(const Formula& phi, const DecideOptions& opt) {
  require_closed(phi);
  Verdict v = satisfiable(negate(phi), opt);
  if (v.result == Result::Holds) {
    v.result = Result::Fails;
    if (evaluate({}, *v.witness, phi)) throw Error(ErrorCode::Precondition, "internal: validity counterexample does not verify");
  } else if (v.result == Result::Fails) {
    v.result = Result::Holds;
  }
  return v;
}

Verdict refines_global(const Formula& psi, const Formula& phi, const DecideOptions& opt) {
  require_closed(psi);
  require_closed(phi);
  Verdict v = satisfiable(conjoin(psi, negate(phi)), opt);
  if (v.result == Result::Holds) {
    v.result = Result::Fails;
    if (!evaluate({}, *v.witness, psi) || evaluate({}, *v.witness, phi))
      throw Error(ErrorCode::Precondition, "internal: refinement counterexample does not verify");
  } else if (v.result == Result::Fails) {
    v.result = Result::Holds;
  }
  return v;
}

Verdict model_check_global(const ExtBarNFA& a, const Formula& phi, const DecideOptions& opt) {
  require_closed(phi);
  auto t0 = Clock::now();
  Verdict v;
  try {
    TranslateStats st;
    ExtBarNFA b = formula_to_automaton(phi, opt.translate, &st);
    v.states = st.states;
    SearchResult r = inclusion(epsilon_eliminate(a), b, opt.inclusion_budget);
    v.explored = r.explored;
    if (r.holds) {
      v.result = Result::Holds;
    } else {
      if (!accepts_alpha(a, *r.witness) || evaluate({}, *r.witness, phi))
        throw Error(ErrorCode::Precondition, "internal: model checking counterexample does not verify");
      v.result = Result::Fails;
      v.witness = r.witness;
    }
  } catch (const ResourceError& e) {
    v.result = Result::Unknown;
    v.note = e.what();
  }
  v.millis = since(t0);
  return v;
}

ExtBarNFA universal_local() {
  ExtBarNFA u;
  int q = u.add_state("u", Acc::Yes);
  u.add_edge(q, Letter::bound(0), q);
  return u;
}

Verdict valid_local(const Formula& phi, const DecideOptions& opt) { return model_check_global(universal_local(), phi, opt); }

Verdict model_check_local_bounded(const ExtBarNFA& a, const Formula& phi, int maxlen) {
  require_closed(phi);
  auto t0 = Clock::now();
  Verdict v;
  NameSet used = a.names_used();
  NameSet fn = all_names(phi);
  used.insert(fn.begin(), fn.end());
  // deg(A) + deg(phi) + 1 names, starting with the ones the inputs mention.
  std::size_t k = degree(a) + degree(phi) + 1;
  std::vector<Name> pool(used.begin(), used.end());
  if (pool.size() > k) pool.resize(k);
  for (Name n = 0; pool.size() < k; ++n)
    if (!used.count(n)) pool.push_back(n);
  NameDrop nd(a);

  // d is in D(L) iff some closed bar decoration of d lies in L.
  auto decorations = [](const DataWord& d) {
    std::vector<BarString> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d.size()); ++mask) {
      BarString w;
      for (std::size_t i = 0; i < d.size(); ++i) w.push_back({(mask >> i & 1) != 0, d[i]});
      if (is_closed(w)) out.push_back(std::move(w));
    }
    return out;
  };
  std::vector<DataWord> layer{{}};
  for (int len = 0; len <= maxlen; ++len) {
    for (auto& d : layer) {
      ++v.explored;
      bool in_a = false, in_phi = false;
      BarString wa;
      for (auto& w : decorations(d)) {
        if (!in_a && nd.accepts(w)) {
          in_a = true;
          wa = w;
        }
        if (!in_phi && evaluate({}, w, phi)) in_phi = true;
        if (in_phi) break;
      }
      if (in_a && !in_phi) {
        v.result = Result::Fails;
        v.data_witness = d;
        v.witness = wa;
        v.millis = since(t0);
        return v;
      }
    }
    if (len == maxlen) break;
    std::vector<DataWord> next;
    for (auto& d : layer)
      for (Name n : pool) {
        DataWord e = d;
        e.push_back(n);
        next.push_back(std::move(e));
      }
    layer = std::move(next);
  }
  v.result = Result::Unknown;
  v.note = "no counterexample up to length " + std::to_string(maxlen);
  v.millis = since(t0);
  return v;
}

}  // namespace barmu
