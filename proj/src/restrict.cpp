#include <algorithm>

#include "barmu/errors.hpp"
#include "barmu/translate.hpp"

namespace barmu {

namespace {

bool subset(const NameSet& x, const NameSet& y) { return std::includes(y.begin(), y.end(), x.begin(), x.end()); }

// eps || <#c> top || the <d> top for d in ds
Formula escape(const NameSet& ds) {
  std::vector<Formula> parts{f_eps(), f_dia(Letter::bound(0), f_top())};
  for (Name d : ds) parts.push_back(f_dia(Letter::plain(d), f_top()));
  return f_or_all(parts);
}

Formula reset(const Formula& psi, int n) { return restrict(psi, {}, free_names(psi), std::nullopt, n); }

}  // namespace

Formula restrict(const Formula& phi, const NameSet& b, const NameSet& c, std::optional<Name> a, int n) {
  if (!subset(b, c)) throw PreconditionError("restrict: B is not a subset of C");
  if (a && b.count(*a)) throw PreconditionError("restrict: distinguishing letter lies in B");
  if (n <= 0) return f_top();
  switch (phi->op) {
    case Op::Eps:
    case Op::NotEps:
      return phi;
    case Op::And:
      return f_and(restrict(phi->a, b, c, a, n), restrict(phi->b, b, c, a, n));
    case Op::Or:
      return f_or(restrict(phi->a, b, c, a, n), restrict(phi->b, b, c, a, n));
    case Op::Mu:
      return restrict(unfold(phi), b, c, a, n);
    case Op::Var:
      throw PreconditionError("restrict: free fixpoint variable " + phi->var);
    case Op::Dia:
    case Op::Box:
      break;
  }
  bool dia = phi->op == Op::Dia;
  auto rebuild = [&](Letter l, Formula body) { return dia ? f_dia(l, std::move(body)) : f_box(l, std::move(body)); };
  Name x = phi->letter.name;
  Formula psi = phi->a;
  if (phi->letter.bar) {
    // Keep the binder apart from the annotation names.
    if (c.count(x) || (a && *a == x)) {
      NameSet ex = all_names(phi);
      ex.insert(c.begin(), c.end());
      if (a) ex.insert(*a);
      Name y = least_fresh(ex);
      psi = act(Permutation::transposition(x, y), psi);
      x = y;
    }
    NameSet b2 = b, c2 = c;
    b2.insert(x);
    c2.insert(x);
    return rebuild(Letter::bound(x), restrict(psi, b2, c2, a, n - 1));
  }
  bool in_c = c.count(x) > 0, in_b = b.count(x) > 0;
  if (dia) {
    if (!in_c) return f_bot();
    if (in_b) return f_dia(phi->letter, restrict(psi, b, c, a, n - 1));
    return f_dia(phi->letter, reset(psi, n - 1));
  }
  NameSet ba = b;
  if (a) ba.insert(*a);
  if (!in_c) return a ? escape(ba) : f_box(phi->letter, reset(psi, n - 1));
  if (in_b) return f_box(phi->letter, restrict(psi, b, c, a, n - 1));
  if (!a) return f_box(phi->letter, reset(psi, n - 1));
  if (*a == x) return f_or(escape(b), f_dia(Letter::plain(x), reset(psi, n - 1)));
  return escape(ba);
}

Formula restrict_guess(const Formula& phi, const NameSet& b, const NameSet& c, std::optional<Name> a, int n,
                       const NameSet& d) {
  if (a && d.count(*a)) return f_bot();
  return restrict(phi, b, c, a, n);
}

// ------------------------------------------------------- annotated formulas

AnnotatedFormula make_annotated(Permutation perm, Formula body, NameSet b, NameSet c, std::optional<Name> a) {
  NameSet rel = all_names(body);
  rel.insert(b.begin(), b.end());
  rel.insert(c.begin(), c.end());
  if (a) rel.insert(*a);
  std::map<Name, Name> m;
  for (Name x : rel) m[x] = perm.apply(x);
  return {Permutation::extending(m), std::move(body), std::move(b), std::move(c), a};
}

bool operator<(const AnnotatedFormula& x, const AnnotatedFormula& y) {
  if (!(x.perm == y.perm)) return x.perm < y.perm;
  if (int k = compare(x.body, y.body)) return k < 0;
  if (x.B != y.B) return x.B < y.B;
  if (x.C != y.C) return x.C < y.C;
  return x.a < y.a;
}

bool operator==(const AnnotatedFormula& x, const AnnotatedFormula& y) { return !(x < y) && !(y < x); }

Formula instantiate(const AnnotatedFormula& f, int n) {
  std::optional<Name> a;
  if (f.a) a = f.perm.apply(*f.a);
  return restrict(act(f.perm, f.body), f.perm.apply(f.B), f.perm.apply(f.C), a, n);
}

Formula instantiate(const AnnotatedSet& s, int n) {
  std::vector<Formula> parts;
  for (auto& f : s) parts.push_back(instantiate(f, n));
  return f_and_all(parts);
}

namespace {

NameSet meet(const NameSet& x, const NameSet& y) {
  NameSet r;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(r, r.end()));
  return r;
}

bool same_annotation(const AnnotatedFormula& x, const AnnotatedFormula& y) {
  return equal(x.body, y.body) && x.B == y.B && x.C == y.C && x.a == y.a;
}

// The first pair of instances of one annotated formula, if any.
std::optional<std::pair<AnnotatedFormula, AnnotatedFormula>> find_pair(const AnnotatedSet& s) {
  for (auto i = s.begin(); i != s.end(); ++i)
    for (auto j = std::next(i); j != s.end(); ++j) {
      if (!same_annotation(*i, *j)) continue;
      NameSet a = meet(free_names(i->body), i->C);
      if (i->perm.apply(a) != j->perm.apply(a)) return std::pair{*i, *j};
    }
  return std::nullopt;
}

}  // namespace

bool has_two_instances(const AnnotatedSet& s) { return find_pair(s).has_value(); }

std::set<AnnotatedSet> rest(const std::set<AnnotatedSet>& phi) {
  std::set<AnnotatedSet> done;
  std::vector<AnnotatedSet> work(phi.begin(), phi.end());
  std::size_t steps = 0;
  while (!work.empty()) {
    AnnotatedSet s = std::move(work.back());
    work.pop_back();
    auto pair = find_pair(s);
    if (!pair) {
      done.insert(std::move(s));
      continue;
    }
    if (++steps > 100000) throw ResourceError("rest: too many restriction steps");
    auto& [x, y] = *pair;
    s.erase(x);
    s.erase(y);
    const Permutation &p = x.perm, &q = y.perm;
    NameSet a = meet(free_names(x.body), x.C);
    NameSet la = p.apply(a), lb = q.apply(a);
    NameSet d = meet(la, lb);
    NameSet e = p.inverse().apply(d), e2 = q.inverse().apply(d);
    // The distinguishing letter is one literal name shared by both halves.
    auto add = [&](const Permutation& first, const NameSet& efirst, const Permutation& second, const NameSet& esecond,
                   std::optional<Name> lit) {
      std::optional<Name> a1, a2;
      if (lit) {
        a1 = first.inverse().apply(*lit);
        a2 = second.inverse().apply(*lit);
      }
      AnnotatedSet t = s;
      t.insert(make_annotated(first, x.body, efirst, a, a1));
      t.insert(make_annotated(second, x.body, {}, esecond, a2));
      work.push_back(std::move(t));
    };
    for (Name lit : la)
      if (!d.count(lit)) add(p, e, q, e2, lit);
    for (Name lit : lb)
      if (!d.count(lit)) add(q, e2, p, e, lit);
    add(p, e, q, e2, std::nullopt);
  }
  return done;
}

}  // namespace barmu
