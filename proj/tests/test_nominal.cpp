#include <doctest.h>

#include <random>

#include "barmu/barstring.hpp"
#include "barmu/nominal.hpp"

using namespace barmu;

namespace {
constexpr Name a = 0, b = 1, c = 2, d = 3;

Permutation random_perm(std::mt19937_64& rng, int n) {
  std::vector<Name> img;
  for (Name i = 0; i < static_cast<Name>(n); ++i) img.push_back(i);
  std::shuffle(img.begin(), img.end(), rng);
  std::map<Name, Name> m;
  for (Name i = 0; i < static_cast<Name>(n); ++i) m[i] = img[i];
  return Permutation::extending(m);
}
}  // namespace

TEST_SUITE("nominal") {
  TEST_CASE("names print and parse") {
    CHECK(name_to_string(0) == "a");
    CHECK(name_to_string(25) == "z");
    CHECK(name_to_string(26) == "a1");
    CHECK(name_to_string(27 + 26) == "b2");
    CHECK(name_from_string("a") == Name{0});
    CHECK(name_from_string("c1") == Name{28});
    for (Name n : {0u, 5u, 26u, 77u, 2600000u}) CHECK(name_from_string(name_to_string(n)) == n);
    CHECK_FALSE(name_from_string("eps"));
    CHECK_FALSE(name_from_string("mu"));
    CHECK_FALSE(name_from_string("A"));
    CHECK_FALSE(name_from_string(""));
    auto foo = name_from_string("foo");
    REQUIRE(foo);
    CHECK(*foo >= kInternBase);
    CHECK(name_to_string(*foo) == "foo");
    CHECK(name_from_string("foo") == foo);
    auto a01 = name_from_string("a01");
    REQUIRE(a01);
    CHECK(name_to_string(*a01) == "a01");
  }

  TEST_CASE("apply") {
    CHECK(Permutation::transposition(a, b).apply(a) == b);
    CHECK(Permutation::identity().apply(c) == c);
    CHECK(Permutation::transposition(a, b).apply(c) == c);
    CHECK(Permutation::transposition(a, b).apply(b) == a);
  }

  TEST_CASE("transposition") {
    CHECK(Permutation::transposition(a, b).support() == NameSet{a, b});
    CHECK(Permutation::transposition(a, a).is_identity());
  }

  TEST_CASE("compose") {
    auto ab = Permutation::transposition(a, b), bc = Permutation::transposition(b, c);
    CHECK(compose(ab, ab).is_identity());
    CHECK(compose(Permutation::identity(), bc) == bc);
    CHECK(compose(ab, bc).apply(c) == a);  // (a b)((b c) c) = (a b) b = a
    CHECK(compose(ab, bc).apply(a) == b);
    CHECK(compose(ab, bc).apply(b) == c);
  }

  TEST_CASE("extending completes a partial injection") {
    auto p = Permutation::extending({{a, b}});
    CHECK(p.apply(a) == b);
    CHECK(p.apply(b) == a);
    auto q = Permutation::extending({{a, b}, {b, c}});
    CHECK(q.apply(a) == b);
    CHECK(q.apply(b) == c);
    CHECK(q.apply(c) == a);
    CHECK(q.apply(d) == d);
  }

  TEST_CASE("group laws on samples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      auto p = random_perm(rng, 5), q = random_perm(rng, 5), r = random_perm(rng, 5);
      CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
      CHECK(compose(p, Permutation::identity()) == p);
      CHECK(compose(p, p.inverse()).is_identity());
      for (Name x = 0; x < 6; ++x) CHECK(compose(p, q).apply(x) == p.apply(q.apply(x)));
      // domain and image coincide
      NameSet dom, img;
      for (auto& [k, v] : p.mapping()) {
        dom.insert(k);
        img.insert(v);
      }
      CHECK(dom == img);
    }
  }

  TEST_CASE("FreshSupply yields least excluded names") {
    FreshSupply f({a, c});
    CHECK(f.next() == b);
    CHECK(f.next() == d);
    CHECK(f.excluded().count(b));
  }

  TEST_CASE("abstraction equality") {
    auto act_name = [](const Permutation& p, Name x) { return p.apply(x); };
    auto nm = [](Name x) { return NameSet{x}; };
    auto eq = [](Name x, Name y) { return x == y; };
    CHECK(abstraction_eq(a, a, b, b, act_name, nm, eq));
    CHECK(abstraction_eq(a, b, c, b, act_name, nm, eq));
    CHECK_FALSE(abstraction_eq(a, b, b, b, act_name, nm, eq));
  }

  TEST_CASE("abstraction equality is equivariant and independent of the fresh name") {
    std::mt19937_64 rng(5);
    auto actw = [](const Permutation& p, const BarString& w) { return act(p, w); };
    auto nmw = [](const BarString& w) { return names(w); };
    auto eqw = [](const BarString& x, const BarString& y) { return x == y; };
    std::uniform_int_distribution<int> nd(0, 3), len(0, 3), coin(0, 1);
    for (int i = 0; i < 500; ++i) {
      auto gen = [&] {
        BarString w;
        int n = len(rng);
        for (int k = 0; k < n; ++k) w.push_back({coin(rng) == 1, static_cast<Name>(nd(rng))});
        return w;
      };
      BarString x = gen(), y = gen();
      Name u = static_cast<Name>(nd(rng)), v = static_cast<Name>(nd(rng));
      bool r = abstraction_eq(u, x, v, y, actw, nmw, eqw);
      auto p = random_perm(rng, 6);
      CHECK(r == abstraction_eq(p.apply(u), act(p, x), p.apply(v), act(p, y), actw, nmw, eqw));
      NameSet ex = names(x);
      for (Name n : names(y)) ex.insert(n);
      ex.insert(u);
      ex.insert(v);
      FreshSupply fs(ex);
      for (int k = 0; k < 3; ++k) CHECK(r == abstraction_eq_with(u, x, v, y, fs.next(), actw, eqw));
    }
  }
}
