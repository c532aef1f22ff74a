#include <doctest.h>

#include <random>

#include "barmu/decide.hpp"
#include "barmu/gen.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace barmu;

namespace {
Formula F(const std::string& s) { return parse_formula(s); }
BarString W(const char* s) { return parse_barstring(s); }
ExtBarNFA A(const std::string& s) { return parse_automaton(s); }

const std::string kHashAA = "states: s t u\ninitial: s\naccept: u=1\ntrans: s #a t\ntrans: t a u\n";
const std::string kHashAAA = "states: s t u v\ninitial: s\naccept: v=1\ntrans: s #a t\ntrans: t a u\ntrans: u a v\n";
const std::string kHashAB = "states: s t u\ninitial: s\naccept: u=1\ntrans: s #a t\ntrans: t #b u\n";
const std::string kHashABA = "states: s t u v\ninitial: s\naccept: v=1\ntrans: s #a t\ntrans: t #b u\ntrans: u a v\n";

std::optional<BarString> shortest_model(const Formula& phi, const std::vector<BarString>& words) {
  std::optional<BarString> best;
  for (auto& w : words)
    if (oracle::evaluate({}, w, phi) && (!best || w.size() < best->size())) best = w;
  return best;
}
}  // namespace

TEST_SUITE("decide") {
  TEST_CASE("satisfiability examples") {
    Verdict t = satisfiable(F("top"));
    CHECK(t.result == Result::Holds);
    CHECK(t.witness->empty());
    CHECK(satisfiable(F("bot")).result == Result::Fails);
    for (auto& s : corpus::kFormulas) {
      Formula phi = F(s);
      CHECK(satisfiable(conjoin(phi, negate(phi))).result == Result::Fails);
    }
    Verdict v = satisfiable(F("<#a> [a] eps && ~eps && [#b] ~eps"));
    REQUIRE(v.result == Result::Holds);
    CHECK(evaluate({}, *v.witness, F("<#a> [a] eps && ~eps && [#b] ~eps")));
  }

  TEST_CASE("satisfiability agrees with enumeration") {
    auto words = enumerate_closed(4, oracle::pool(3));
    std::vector<Formula> fs;
    for (auto& s : corpus::kFormulas) fs.push_back(F(s));
    fs.push_back(F(corpus::kRepeatedBar));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) fs.push_back(random_formula(rng));
    for (auto& phi : fs) {
      INFO(to_string(phi));
      Verdict v = satisfiable(phi);
      auto best = shortest_model(phi, words);
      if (best) {
        REQUIRE(v.result == Result::Holds);
        CHECK(v.witness->size() == best->size());
        CHECK(oracle::evaluate({}, *v.witness, phi));
      } else if (v.result == Result::Holds) {
        CHECK(v.witness->size() > 4);
        CHECK(evaluate({}, *v.witness, phi));
      }
      Verdict val = valid_global(phi);
      CHECK((val.result == Result::Holds) == (satisfiable(negate(phi)).result == Result::Fails));
      if (val.result == Result::Fails) CHECK_FALSE(oracle::evaluate({}, *val.witness, phi));
      bool all = true;
      for (auto& w : words) all = all && oracle::evaluate({}, w, phi);
      if (!all) CHECK(val.result == Result::Fails);
    }
  }

  TEST_CASE("validity and refinement") {
    CHECK(valid_global(F("top")).result == Result::Holds);
    CHECK(valid_global(F(corpus::kFormulas[0])).result == Result::Holds);
    Formula x = F("<#a> [a] eps");
    CHECK(refines_global(x, x).result == Result::Holds);
    CHECK(refines_global(x, F("top")).result == Result::Holds);
    Verdict r = refines_global(F("top"), x);
    REQUIRE(r.result == Result::Fails);
    CHECK_FALSE(evaluate({}, *r.witness, x));
    Verdict v = valid_global(F("eps"));
    REQUIRE(v.result == Result::Fails);
    CHECK(v.witness->size() == 1);
  }

  TEST_CASE("global model checking") {
    Formula x = F("<#a> [a] eps");
    CHECK(model_check_global(A(kHashAA), x).result == Result::Holds);
    Verdict v = model_check_global(A(kHashAAA), x);
    REQUIRE(v.result == Result::Fails);
    CHECK(alpha_eq(*v.witness, W("#a a a")));
    for (auto& n : corpus::kAutomata) {
      ExtBarNFA a = epsilon_eliminate(parse_automaton(n.text));
      if (a.has_top()) continue;
      CHECK(model_check_global(a, F("top")).result == Result::Holds);
      Verdict f = model_check_global(a, automaton_to_formula(a));
      CHECK(f.result == Result::Holds);
    }
    ExtBarNFA top = A("states: s\ninitial: s\naccept: s=top\n");
    CHECK_THROWS(model_check_global(top, x));
  }

  TEST_CASE("local validity") {
    CHECK(valid_local(F("mu X . eps || <#a> X")).result == Result::Holds);
    CHECK(valid_local(F("bot")).result == Result::Fails);
    Verdict v = valid_local(F("eps"));
    REQUIRE(v.result == Result::Fails);
    CHECK(alpha_eq(*v.witness, W("#a")));
    ExtBarNFA u = universal_local();
    CHECK(u.num_states() == 1);
    CHECK(accepts_alpha(u, W("#a #b #a")));
  }

  TEST_CASE("bounded local model checking") {
    for (int len = 0; len <= 4; ++len)
      CHECK(model_check_local_bounded(A(kHashAB), F("<#a> (<a> eps || <#b> eps)"), len).result == Result::Unknown);
    Verdict v = model_check_local_bounded(A(kHashABA), F("bot"), 3);
    REQUIRE(v.result == Result::Fails);
    const DataWord& d = *v.data_witness;
    REQUIRE(d.size() == 3);
    CHECK(d[0] == d[2]);
    CHECK(d[0] != d[1]);
    CHECK(model_check_local_bounded(A(kHashABA), F("bot"), 0).result == Result::Unknown);
    ExtBarNFA one = A("states: s\ninitial: s\naccept: s=1\n");
    CHECK(model_check_local_bounded(one, F("~eps"), 0).result == Result::Fails);
    CHECK(model_check_local_bounded(A(kHashAB), F("<#a> <#b> eps"), 2).result == Result::Unknown);
  }

  TEST_CASE("budget exhaustion is reported as unknown") {
    DecideOptions opt;
    opt.translate.budget = 2;
    CHECK(satisfiable(F(corpus::kFormulas[4]), opt).result == Result::Unknown);
    CHECK(std::string(result_name(Result::Unknown)) == "unknown-bounded");
  }
}
