#include <doctest.h>

#include <random>

#include "barmu/errors.hpp"
#include "barmu/gen.hpp"
#include "barmu/translate.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace barmu;

namespace {
Formula F(const std::string& s) { return parse_formula(s); }
BarString W(const char* s) { return parse_barstring(s); }
constexpr Name a = 0, b = 1, c = 2;

NameSet random_subset(std::mt19937_64& rng, const std::vector<Name>& from) {
  NameSet s;
  for (Name n : from)
    if (rng() & 1) s.insert(n);
  return s;
}

BarString random_word(std::mt19937_64& rng, int maxlen, std::size_t names) {
  BarString w;
  int len = static_cast<int>(rng() % (maxlen + 1));
  for (int i = 0; i < len; ++i) w.push_back({(rng() & 1) != 0, static_cast<Name>(rng() % names)});
  return w;
}

// Every literal name an annotated formula may mention once instantiated.
NameSet p_names(const AnnotatedFormula& f) {
  NameSet s = f.perm.apply(free_names(f.body));
  s.merge(f.perm.apply(f.C));
  if (f.a) s.insert(f.perm.apply(*f.a));
  return s;
}

bool accepts_model(const ExtBarNFA& x, const BarString& w) { return accepts_alpha(x, w); }
}  // namespace

TEST_SUITE("translate") {
  TEST_CASE("restriction calculus examples") {
    for (auto& s : corpus::kFormulas) CHECK(is_top(restrict(F(s), {}, {}, std::nullopt, 0)));
    CHECK(is_bot(restrict(F("<a> eps"), {}, {b}, std::nullopt, 2)));
    CHECK(equal(restrict(F("<a> eps"), {a}, {a}, std::nullopt, 2), F("<a> eps")));
    CHECK(equal(restrict(F("eps && ~eps"), {}, {}, b, 1), F("eps && ~eps")));
    // A box outside the support with a guessed letter becomes an escape.
    Formula esc = restrict(F("[a] bot"), {b}, {b}, c, 3);
    CHECK(evaluate({a, b, c}, W("#a"), esc));
    CHECK(evaluate({a, b, c}, W("b"), esc));
    CHECK(evaluate({a, b, c}, W("c"), esc));
    CHECK(evaluate({a, b, c}, {}, esc));
    CHECK_FALSE(evaluate({a, b, c}, W("a"), esc));
    CHECK_THROWS_AS(restrict(F("eps"), {a}, {}, std::nullopt, 1), PreconditionError);
    CHECK_THROWS_AS(restrict(F("eps"), {a}, {a}, a, 1), PreconditionError);
  }

  TEST_CASE("guessed restriction") {
    Formula f = F("<#a> <a> [b] eps");
    CHECK(is_bot(restrict_guess(f, {}, {b}, b, 3, {b})));
    CHECK(equal(restrict_guess(f, {}, {b}, std::nullopt, 3, {b}), restrict(f, {}, {b}, std::nullopt, 3)));
    CHECK(equal(restrict_guess(f, {}, {b}, c, 3, {}), restrict(f, {}, {b}, c, 3)));
  }

  TEST_CASE("restriction agrees with the formula under its side conditions") {
    std::mt19937_64 rng(7);
    auto pool = oracle::pool(3);
    int checked = 0;
    for (int i = 0; i < 4000 && checked < 600; ++i) {
      Formula phi = random_formula(rng, {8, 2, true});
      NameSet cc = random_subset(rng, pool), bb;
      for (Name n : cc)
        if (rng() & 1) bb.insert(n);
      std::optional<Name> g;
      Name pick = static_cast<Name>(rng() % 4);
      if (pick < 3 && !bb.count(pick)) g = pick;
      BarString v = random_word(rng, 3, 3);
      if (!oracle::restriction_applies(v, bb, cc, g, free_names(phi))) continue;
      NameSet s = random_subset(rng, pool);
      for (Name n : free_names(v)) s.insert(n);
      for (Name n : free_names(phi)) s.insert(n);
      for (int n = static_cast<int>(v.size()) + 1; n <= 4; ++n) {
        Formula r = restrict(phi, bb, cc, g, n);
        for (Name x : free_names(r)) s.insert(x);
        INFO(to_string(phi), " B=", bb.size(), " C=", cc.size(), " v=", to_string(v), " n=", n);
        CHECK(evaluate(s, v, phi) == evaluate(s, v, r));
      }
      ++checked;
    }
    CHECK(checked >= 500);
  }

  TEST_CASE("rest leaves sets without duplicate instances alone") {
    Formula psi = F("<a> eps");
    AnnotatedSet s{make_annotated({}, psi, {}, {a}, std::nullopt)};
    auto r = rest({s});
    CHECK(r.size() == 1);
    CHECK(*r.begin() == s);
    AnnotatedSet same{make_annotated({}, psi, {}, {a}, std::nullopt),
                      make_annotated(Permutation::transposition(b, c), psi, {}, {a}, std::nullopt)};
    CHECK(same.size() == 1);
  }

  TEST_CASE("rest splits two instances by distinguishing letter") {
    Formula psi = F("<a> eps");
    AnnotatedSet s{make_annotated({}, psi, {}, {a}, std::nullopt),
                   make_annotated(Permutation::transposition(a, b), psi, {}, {a}, std::nullopt)};
    CHECK(has_two_instances(s));
    auto r = rest({s});
    CHECK(r.size() == 3);  // guesses a, b and *
    for (auto& d : r) CHECK_FALSE(has_two_instances(d));
    CHECK(rest(r) == r);
  }

  TEST_CASE("rest preserves satisfaction") {
    std::mt19937_64 rng(11);
    auto words = enumerate_closed(3, oracle::pool(3));
    std::vector<BarString> open;
    for (int i = 0; i < 40; ++i) open.push_back(random_word(rng, 3, 3));
    int sets = 0;
    for (int i = 0; i < 200; ++i) {
      Formula psi = random_formula(rng, {6, 2, true});
      NameSet fn = free_names(psi);
      if (fn.empty()) continue;
      Permutation p1 = Permutation::transposition(a, static_cast<Name>(rng() % 3));
      Permutation p2 = Permutation::transposition(b, static_cast<Name>(rng() % 3));
      AnnotatedSet g{make_annotated({}, psi, {}, fn, std::nullopt), make_annotated(p1, psi, {}, fn, std::nullopt),
                     make_annotated(p2, psi, {}, fn, std::nullopt)};
      auto r = rest({g});
      CHECK(rest(r) == r);
      for (auto& d : r) CHECK_FALSE(has_two_instances(d));
      for (auto* ws : {&words, &open})
        for (auto& w : *ws) {
          int n = static_cast<int>(w.size()) + 1;
          NameSet s = free_names(w);
          for (auto& f : g) s.merge(p_names(f));
          for (auto& d : r)
            for (auto& f : d) s.merge(p_names(f));
          if (!evaluate(s, w, instantiate(g, n))) continue;
          bool some = false;
          for (auto& d : r) some = some || evaluate(s, w, instantiate(d, n));
          INFO(to_string(psi), " w=", to_string(w));
          CHECK(some);
        }
      ++sets;
    }
    CHECK(sets >= 50);
  }

  TEST_CASE("examples of the formula automaton") {
    ExtBarNFA t = formula_to_automaton(F("top"));
    for (auto& w : enumerate_closed(3, oracle::pool(3))) CHECK(accepts_model(t, w));
    CHECK(epsilon_eliminate(t).has_top());
    ExtBarNFA x = formula_to_automaton(F("<#a> [a] eps"));
    CHECK(accepts_model(x, W("#a")));
    CHECK(accepts_model(x, W("#a a")));
    CHECK(accepts_model(x, W("#a #b a b")));
    CHECK_FALSE(accepts_model(x, W("#a a a")));
    CHECK_THROWS_AS(formula_to_automaton(F("<a> eps")), PreconditionError);
    CHECK_FALSE(accepts_model(formula_to_automaton(F("bot")), {}));
  }

  TEST_CASE("formula automata accept exactly the models") {
    auto words = enumerate_closed(4, oracle::pool(3));
    std::vector<Formula> fs;
    for (auto& s : corpus::kFormulas) fs.push_back(F(s));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) fs.push_back(random_formula(rng));
    for (auto& phi : fs) {
      ExtBarNFA x = formula_to_automaton(phi);
      ExtBarNFA y = formula_to_automaton(negate(phi));
      for (auto& w : words) {
        INFO(to_string(phi), " w=", to_string(w));
        bool m = evaluate({}, w, phi);
        CHECK(accepts_model(x, w) == m);
        CHECK(accepts_model(y, w) == !m);
      }
    }
  }

  TEST_CASE("formula automata agree with the brute-force oracle on small words") {
    auto words = enumerate_closed(3, oracle::pool(3));
    for (auto& s : corpus::kFormulas) {
      ExtBarNFA x = formula_to_automaton(F(s));
      for (auto& w : words) CHECK(accepts_model(x, w) == oracle::evaluate({}, w, F(s)));
    }
  }

  TEST_CASE("repeated bar name family") {
    Formula phi = F(corpus::kRepeatedBar);
    TranslateStats st;
    ExtBarNFA x = formula_to_automaton(phi, {}, &st);
    CHECK(st.states > 0);
    for (auto& w : enumerate_closed(5, oracle::pool(3))) {
      INFO(to_string(w));
      CHECK(accepts_model(x, w) == evaluate({}, w, phi));
    }
  }

  TEST_CASE("automaton to formula") {
    ExtBarNFA one = parse_automaton("states: s\ninitial: s\naccept: s=1\n");
    Formula f1 = automaton_to_formula(one);
    CHECK(evaluate({}, {}, f1));
    CHECK_FALSE(evaluate({}, W("#a"), f1));
    ExtBarNFA top = parse_automaton("states: s\ninitial: s\naccept: s=top\n");
    CHECK(is_top(automaton_to_formula(top)));
    auto words = enumerate_closed(4, oracle::pool(3));
    for (auto& n : corpus::kAutomata) {
      ExtBarNFA x = epsilon_eliminate(parse_automaton(n.text));
      Formula f = automaton_to_formula(x);
      CHECK(free_names(f).empty());
      CHECK(free_vars(f).empty());
      CHECK(is_guarded(f));
      ExtBarNFA back = formula_to_automaton(f);
      for (auto& w : words) {
        INFO(n.name, " ", to_string(f), " w=", to_string(w));
        bool m = accepts_alpha(x, w);
        CHECK(evaluate({}, w, f) == m);
        CHECK(accepts_alpha(back, w) == m);
      }
    }
  }

  TEST_CASE("translation statistics and budget") {
    for (auto& s : corpus::kFormulas) {
      Formula phi = F(s);
      TranslateStats st;
      ExtBarNFA x = formula_to_automaton(phi, {}, &st);
      CHECK(st.states == x.num_states());
      CHECK(st.edges == x.num_edges());
      CHECK(st.eps_edges <= st.edges);
      CHECK(st.pool_size == degree(phi) + 2);
      CHECK(st.degree == degree(x));
      double k = static_cast<double>(degree(phi)), m = static_cast<double>(size(phi));
      CHECK(static_cast<double>(degree(x)) <= std::pow(2.0, 2 * k) * 5 * m * m * (k + 1) + 1);
    }
    CHECK_THROWS_AS(formula_to_automaton(F(corpus::kFormulas[4]), {0, 3}), ResourceError);
  }
}
