#include "barmu/formula.hpp"

#include <functional>
#include <map>

#include "barmu/errors.hpp"

namespace barmu {

namespace {

Formula make(Node n) { return std::make_shared<const Node>(std::move(n)); }

}  // namespace

Formula f_eps() {
  static const Formula e = make({Op::Eps, {}, {}, {}, nullptr, nullptr});
  return e;
}
Formula f_not_eps() {
  static const Formula e = make({Op::NotEps, {}, {}, {}, nullptr, nullptr});
  return e;
}
Formula f_and(Formula l, Formula r) { return make({Op::And, {}, {}, {}, std::move(l), std::move(r)}); }
Formula f_or(Formula l, Formula r) { return make({Op::Or, {}, {}, {}, std::move(l), std::move(r)}); }
Formula f_dia(Letter s, Formula f) { return make({Op::Dia, s, {}, {}, std::move(f), nullptr}); }
Formula f_box(Letter s, Formula f) { return make({Op::Box, s, {}, {}, std::move(f), nullptr}); }
Formula f_var(std::string x, NameSet ann) { return make({Op::Var, {}, std::move(x), std::move(ann), nullptr, nullptr}); }
Formula f_mu(std::string x, Formula body) { return make({Op::Mu, {}, std::move(x), {}, std::move(body), nullptr}); }
Formula f_top() { return f_or(f_eps(), f_not_eps()); }
Formula f_bot() { return f_and(f_eps(), f_not_eps()); }

Formula f_or_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return f_bot();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = f_or(acc, fs[i]);
  return acc;
}

Formula f_and_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return f_top();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = f_and(acc, fs[i]);
  return acc;
}

bool is_top(const Formula& f) { return f->op == Op::Or && f->a->op == Op::Eps && f->b->op == Op::NotEps; }
bool is_bot(const Formula& f) { return f->op == Op::And && f->a->op == Op::Eps && f->b->op == Op::NotEps; }

int compare(const Formula& f, const Formula& g) {
  if (f == g) return 0;
  if (f->op != g->op) return f->op < g->op ? -1 : 1;
  switch (f->op) {
    case Op::Eps:
    case Op::NotEps:
      return 0;
    case Op::And:
    case Op::Or:
      if (int c = compare(f->a, g->a)) return c;
      return compare(f->b, g->b);
    case Op::Dia:
    case Op::Box:
      if (f->letter != g->letter) return f->letter < g->letter ? -1 : 1;
      return compare(f->a, g->a);
    case Op::Var:
      if (f->var != g->var) return f->var < g->var ? -1 : 1;
      if (f->ann != g->ann) return f->ann < g->ann ? -1 : 1;
      return 0;
    case Op::Mu:
      if (f->var != g->var) return f->var < g->var ? -1 : 1;
      return compare(f->a, g->a);
  }
  return 0;
}

bool equal(const Formula& f, const Formula& g) { return compare(f, g) == 0; }

std::size_t size(const Formula& f) {
  std::size_t n = 1;
  if (f->a) n += size(f->a);
  if (f->b) n += size(f->b);
  return n;
}

NameSet free_names(const Formula& f) {
  switch (f->op) {
    case Op::Eps:
    case Op::NotEps:
      return {};
    case Op::And:
    case Op::Or: {
      NameSet s = free_names(f->a);
      NameSet t = free_names(f->b);
      s.insert(t.begin(), t.end());
      return s;
    }
    case Op::Dia:
    case Op::Box: {
      NameSet s = free_names(f->a);
      if (f->letter.bar)
        s.erase(f->letter.name);
      else
        s.insert(f->letter.name);
      return s;
    }
    case Op::Var:
      return f->ann;
    case Op::Mu:
      return free_names(f->a);
  }
  return {};
}

NameSet bound_names(const Formula& f) {
  NameSet s;
  std::function<void(const Formula&)> go = [&](const Formula& g) {
    if ((g->op == Op::Dia || g->op == Op::Box) && g->letter.bar) s.insert(g->letter.name);
    if (g->a) go(g->a);
    if (g->b) go(g->b);
  };
  go(f);
  return s;
}

NameSet all_names(const Formula& f) {
  NameSet s;
  std::function<void(const Formula&)> go = [&](const Formula& g) {
    if (g->op == Op::Dia || g->op == Op::Box) s.insert(g->letter.name);
    if (g->op == Op::Var) s.insert(g->ann.begin(), g->ann.end());
    if (g->a) go(g->a);
    if (g->b) go(g->b);
  };
  go(f);
  return s;
}

std::size_t degree(const Formula& f) {
  NameSet s = free_names(f);
  NameSet b = bound_names(f);
  s.insert(b.begin(), b.end());
  return s.size();
}

std::set<std::string> free_vars(const Formula& f) {
  switch (f->op) {
    case Op::Var:
      return {f->var};
    case Op::Mu: {
      auto s = free_vars(f->a);
      s.erase(f->var);
      return s;
    }
    default: {
      std::set<std::string> s;
      if (f->a) s = free_vars(f->a);
      if (f->b) {
        auto t = free_vars(f->b);
        s.insert(t.begin(), t.end());
      }
      return s;
    }
  }
}

Formula act(const Permutation& p, const Formula& f) {
  if (p.is_identity()) return f;
  switch (f->op) {
    case Op::Eps:
    case Op::NotEps:
      return f;
    case Op::And:
      return f_and(act(p, f->a), act(p, f->b));
    case Op::Or:
      return f_or(act(p, f->a), act(p, f->b));
    case Op::Dia:
      return f_dia(act(p, f->letter), act(p, f->a));
    case Op::Box:
      return f_box(act(p, f->letter), act(p, f->a));
    case Op::Var:
      return f_var(f->var, p.apply(f->ann));
    case Op::Mu:
      return f_mu(f->var, act(p, f->a));
  }
  return f;
}

namespace {

// FN of f when the free variables contribute the names in env.
NameSet fn_in(const Formula& f, const std::map<std::string, NameSet>& env);

NameSet mu_annotation(const Formula& mu, std::map<std::string, NameSet> env) {
  NameSet a;
  while (true) {
    env[mu->var] = a;
    NameSet next = fn_in(mu->a, env);
    if (next == a) return a;
    a = std::move(next);
  }
}

NameSet fn_in(const Formula& f, const std::map<std::string, NameSet>& env) {
  switch (f->op) {
    case Op::Eps:
    case Op::NotEps:
      return {};
    case Op::And:
    case Op::Or: {
      NameSet s = fn_in(f->a, env);
      NameSet t = fn_in(f->b, env);
      s.insert(t.begin(), t.end());
      return s;
    }
    case Op::Dia:
    case Op::Box: {
      NameSet s = fn_in(f->a, env);
      if (f->letter.bar)
        s.erase(f->letter.name);
      else
        s.insert(f->letter.name);
      return s;
    }
    case Op::Var: {
      auto it = env.find(f->var);
      return it == env.end() ? f->ann : it->second;
    }
    case Op::Mu:
      return mu_annotation(f, env);
  }
  return {};
}

Formula annotate_in(const Formula& f, std::map<std::string, NameSet>& env) {
  switch (f->op) {
    case Op::Eps:
    case Op::NotEps:
      return f;
    case Op::And:
      return f_and(annotate_in(f->a, env), annotate_in(f->b, env));
    case Op::Or:
      return f_or(annotate_in(f->a, env), annotate_in(f->b, env));
    case Op::Dia:
      return f_dia(f->letter, annotate_in(f->a, env));
    case Op::Box:
      return f_box(f->letter, annotate_in(f->a, env));
    case Op::Var: {
      auto it = env.find(f->var);
      return it == env.end() ? f : f_var(f->var, it->second);
    }
    case Op::Mu: {
      NameSet a = mu_annotation(f, env);
      auto saved = env.find(f->var) == env.end() ? std::optional<NameSet>() : std::optional(env[f->var]);
      env[f->var] = a;
      Formula body = annotate_in(f->a, env);
      if (saved)
        env[f->var] = *saved;
      else
        env.erase(f->var);
      return f_mu(f->var, body);
    }
  }
  return f;
}

}  // namespace

Formula annotate(const Formula& f) {
  std::map<std::string, NameSet> env;
  return annotate_in(f, env);
}

Formula substitute(const Formula& f, const std::string& x, const Formula& g) {
  switch (f->op) {
    case Op::Eps:
    case Op::NotEps:
      return f;
    case Op::And:
      return f_and(substitute(f->a, x, g), substitute(f->b, x, g));
    case Op::Or:
      return f_or(substitute(f->a, x, g), substitute(f->b, x, g));
    case Op::Dia:
      return f_dia(f->letter, substitute(f->a, x, g));
    case Op::Box:
      return f_box(f->letter, substitute(f->a, x, g));
    case Op::Var:
      return f->var == x ? g : f;
    case Op::Mu:
      return f->var == x ? f : f_mu(f->var, substitute(f->a, x, g));
  }
  return f;
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (f->op == Op::Var || f->op == Op::Mu) out.insert(f->var);
  if (f->a) collect_vars(f->a, out);
  if (f->b) collect_vars(f->b, out);
}

std::string fresh_var(const std::string& base, std::set<std::string>& used) {
  std::string stem = base;
  while (!stem.empty() && stem.back() >= '0' && stem.back() <= '9') stem.pop_back();
  if (stem.empty()) stem = "X";
  for (int i = 1;; ++i) {
    std::string c = stem + std::to_string(i);
    if (used.insert(c).second) return c;
  }
}

Formula clean_in(const Formula& f, std::set<std::string>& used, std::map<std::string, std::string>& ren) {
  switch (f->op) {
    case Op::Eps:
    case Op::NotEps:
      return f;
    case Op::And:
      return f_and(clean_in(f->a, used, ren), clean_in(f->b, used, ren));
    case Op::Or:
      return f_or(clean_in(f->a, used, ren), clean_in(f->b, used, ren));
    case Op::Dia:
      return f_dia(f->letter, clean_in(f->a, used, ren));
    case Op::Box:
      return f_box(f->letter, clean_in(f->a, used, ren));
    case Op::Var: {
      auto it = ren.find(f->var);
      return it == ren.end() || it->second == f->var ? f : f_var(it->second, f->ann);
    }
    case Op::Mu: {
      std::string x = used.insert(f->var).second ? f->var : fresh_var(f->var, used);
      auto saved = ren.find(f->var) == ren.end() ? std::optional<std::string>() : std::optional(ren[f->var]);
      ren[f->var] = x;
      Formula body = clean_in(f->a, used, ren);
      if (saved)
        ren[f->var] = *saved;
      else
        ren.erase(f->var);
      return f_mu(x, body);
    }
  }
  return f;
}

bool clean_check(const Formula& f, std::set<std::string>& binders) {
  if (f->op == Op::Mu && !binders.insert(f->var).second) return false;
  if (f->a && !clean_check(f->a, binders)) return false;
  if (f->b && !clean_check(f->b, binders)) return false;
  return true;
}

}  // namespace

Formula clean(const Formula& f) {
  std::set<std::string> used = free_vars(f);
  std::map<std::string, std::string> ren;
  return clean_in(f, used, ren);
}

bool is_clean(const Formula& f) {
  std::set<std::string> binders;
  if (!clean_check(f, binders)) return false;
  for (auto& x : free_vars(f))
    if (binders.count(x)) return false;
  return true;
}

Formula unfold(const Formula& mu) {
  if (mu->op != Op::Mu) throw PreconditionError("unfold expects a fixpoint formula");
  return clean(substitute(mu->a, mu->var, mu));
}

Formula negate(const Formula& f) {
  switch (f->op) {
    case Op::Eps:
      return f_not_eps();
    case Op::NotEps:
      return f_eps();
    case Op::And:
      return f_or(negate(f->a), negate(f->b));
    case Op::Or:
      return f_and(negate(f->a), negate(f->b));
    case Op::Dia:
      return f_box(f->letter, negate(f->a));
    case Op::Box:
      return f_dia(f->letter, negate(f->a));
    case Op::Var:
      return f;  // the double negation of X is X again
    case Op::Mu:
      return f_mu(f->var, negate(f->a));
  }
  return f;
}

namespace {

std::set<std::string> unguarded(const Formula& f, bool& ok) {
  switch (f->op) {
    case Op::Eps:
    case Op::NotEps:
    case Op::Dia:
    case Op::Box:
      if (f->a) unguarded(f->a, ok);
      return {};
    case Op::Var:
      return {f->var};
    case Op::And:
    case Op::Or: {
      auto s = unguarded(f->a, ok);
      auto t = unguarded(f->b, ok);
      s.insert(t.begin(), t.end());
      return s;
    }
    case Op::Mu: {
      auto s = unguarded(f->a, ok);
      if (s.count(f->var)) ok = false;
      s.erase(f->var);
      return s;
    }
  }
  return {};
}

}  // namespace

bool is_guarded(const Formula& f) {
  bool ok = true;
  unguarded(f, ok);
  return ok;
}

namespace {

NameSet names_for_alpha(const Formula& f) { return all_names(f); }

bool alpha_in(const Formula& f, const Formula& g, std::map<std::string, std::string> vm) {
  if (f->op != g->op) return false;
  switch (f->op) {
    case Op::Eps:
    case Op::NotEps:
      return true;
    case Op::And:
    case Op::Or:
      return alpha_in(f->a, g->a, vm) && alpha_in(f->b, g->b, vm);
    case Op::Dia:
    case Op::Box:
      if (f->letter.bar != g->letter.bar) return false;
      if (!f->letter.bar) return f->letter.name == g->letter.name && alpha_in(f->a, g->a, vm);
      return abstraction_eq(
          f->letter.name, f->a, g->letter.name, g->a,
          [](const Permutation& p, const Formula& x) { return act(p, x); }, names_for_alpha,
          [&](const Formula& x, const Formula& y) { return alpha_in(x, y, vm); });
    case Op::Var: {
      auto it = vm.find(f->var);
      std::string target = it == vm.end() ? f->var : it->second;
      return target == g->var && f->ann == g->ann;
    }
    case Op::Mu:
      vm[f->var] = g->var;
      return alpha_in(f->a, g->a, vm);
  }
  return false;
}

}  // namespace

bool alpha_eq(const Formula& f, const Formula& g) { return alpha_in(f, g, {}); }

std::vector<Formula> closure(const Formula& f) {
  std::vector<Formula> out;
  std::set<Formula, FormulaLess> seen;
  auto add = [&](const Formula& g) {
    if (seen.insert(g).second) out.push_back(g);
  };
  // env maps a variable to theta*(its binder), which is closed.
  std::function<void(const Formula&, std::map<std::string, Formula>&)> go =
      [&](const Formula& g, std::map<std::string, Formula>& env) {
        if (g->op == Op::Var) return;
        Formula inst = g;
        for (auto& [x, h] : env) inst = substitute(inst, x, h);
        add(inst);
        if (g->op == Op::Mu) {
          auto saved = env.count(g->var) ? std::optional(env[g->var]) : std::nullopt;
          env[g->var] = inst;
          go(g->a, env);
          if (saved)
            env[g->var] = *saved;
          else
            env.erase(g->var);
          return;
        }
        if (g->a) go(g->a, env);
        if (g->b) go(g->b, env);
      };
  std::map<std::string, Formula> env;
  go(f, env);
  return out;
}

std::vector<std::string> check_wellformed(const Formula& f) {
  std::vector<std::string> diags;
  for (auto& x : free_vars(f)) diags.push_back("free fixpoint variable " + x);
  if (!is_guarded(f)) diags.push_back("unguarded fixpoint variable");
  if (!is_clean(f)) diags.push_back("fixpoint variables are not clean");
  if (!equal(annotate(f), f)) diags.push_back("stale variable annotation");
  return diags;
}

// ---------------------------------------------------------------- printing

namespace {

std::string letter_text(const Letter& l) { return (l.bar ? "#" : "") + name_to_string(l.name); }

// level 0: disjunction, 1: conjunction operand, 2: modal argument.
// tail: a fixpoint may extend to the right without parentheses.
void print(const Formula& f, int level, bool tail, std::string& out) {
  if (is_top(f)) {
    out += "top";
    return;
  }
  if (is_bot(f)) {
    out += "bot";
    return;
  }
  switch (f->op) {
    case Op::Eps:
      out += "eps";
      return;
    case Op::NotEps:
      out += "~eps";
      return;
    case Op::Or: {
      bool paren = level > 0;
      if (paren) out += "(";
      print(f->a, 0, false, out);
      out += " || ";
      print(f->b, 1, paren || tail, out);
      if (paren) out += ")";
      return;
    }
    case Op::And: {
      bool paren = level > 1;
      if (paren) out += "(";
      print(f->a, 1, false, out);
      out += " && ";
      print(f->b, 2, paren || tail, out);
      if (paren) out += ")";
      return;
    }
    case Op::Dia:
    case Op::Box:
      out += f->op == Op::Dia ? "<" : "[";
      out += letter_text(f->letter);
      out += f->op == Op::Dia ? "> " : "] ";
      print(f->a, 2, tail, out);
      return;
    case Op::Var:
      out += f->var;
      return;
    case Op::Mu:
      if (!tail) out += "(";
      out += "mu " + f->var + " . ";
      print(f->a, 0, true, out);
      if (!tail) out += ")";
      return;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, true, out);
  return out;
}

// ----------------------------------------------------------------- parsing

namespace {

struct Tok {
  enum Kind { LParen, RParen, LAngle, RAngle, LBrack, RBrack, Hash, AndT, OrT, Tilde, Dot, Lower, Upper, End } kind;
  std::string text;
  int line, col;
};

std::vector<Tok> lex(std::string_view s) {
  std::vector<Tok> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok::Kind k, std::string t, int c) { out.push_back({k, std::move(t), line, c}); };
  while (i < s.size()) {
    char ch = s[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (ch == '%') {  // comment to end of line
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    int c0 = col;
    auto single = [&](Tok::Kind k) {
      push(k, std::string(1, ch), c0);
      ++i;
      ++col;
    };
    switch (ch) {
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case '<': single(Tok::LAngle); continue;
      case '>': single(Tok::RAngle); continue;
      case '[': single(Tok::LBrack); continue;
      case ']': single(Tok::RBrack); continue;
      case '#': single(Tok::Hash); continue;
      case '~': single(Tok::Tilde); continue;
      case '.': single(Tok::Dot); continue;
      default: break;
    }
    if ((ch == '&' || ch == '|') && i + 1 < s.size() && s[i + 1] == ch) {
      push(ch == '&' ? Tok::AndT : Tok::OrT, std::string(2, ch), c0);
      i += 2;
      col += 2;
      continue;
    }
    auto ident = [&](auto pred) {
      std::size_t j = i;
      while (j < s.size() && pred(s[j])) ++j;
      std::string t(s.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      return t;
    };
    if (ch >= 'a' && ch <= 'z') {
      std::string t = ident([](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); });
      push(Tok::Lower, t, c0);
      continue;
    }
    if (ch >= 'A' && ch <= 'Z') {
      std::string t = ident([](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
      });
      push(Tok::Upper, t, c0);
      continue;
    }
    throw ParseError(ErrorCode::Syntax, line, col, std::string("unexpected character '") + ch + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Tok> toks) : t_(std::move(toks)) {}

  Formula parse() {
    Formula f = expr();
    if (peek().kind != Tok::End) fail("trailing input '" + peek().text + "'");
    return f;
  }

 private:
  const Tok& peek() const { return t_[p_]; }
  const Tok& next() { return t_[p_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ErrorCode::Syntax, peek().line, peek().col, msg);
  }
  void expect(Tok::Kind k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++p_;
  }

  Formula expr() {
    Formula f = conj();
    while (peek().kind == Tok::OrT) {
      ++p_;
      f = f_or(f, conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (peek().kind == Tok::AndT) {
      ++p_;
      f = f_and(f, unary());
    }
    return f;
  }

  Letter letter() {
    bool bar = false;
    if (peek().kind == Tok::Hash) {
      bar = true;
      ++p_;
    }
    if (peek().kind != Tok::Lower) fail("expected a name");
    const Tok& tk = peek();
    auto n = name_from_string(tk.text);
    if (!n) throw ParseError(ErrorCode::Name, tk.line, tk.col, "bad name '" + tk.text + "'");
    ++p_;
    return {bar, *n};
  }

  Formula unary() {
    const Tok& tk = peek();
    if (tk.kind == Tok::LAngle) {
      ++p_;
      Letter l = letter();
      expect(Tok::RAngle, "'>'");
      return f_dia(l, unary());
    }
    if (tk.kind == Tok::LBrack) {
      ++p_;
      Letter l = letter();
      expect(Tok::RBrack, "']'");
      return f_box(l, unary());
    }
    if (tk.kind == Tok::Lower && tk.text == "mu") {
      ++p_;
      if (peek().kind != Tok::Upper) fail("expected a fixpoint variable");
      std::string x = next().text;
      expect(Tok::Dot, "'.'");
      return f_mu(x, expr());
    }
    return primary();
  }

  Formula primary() {
    const Tok& tk = next();
    switch (tk.kind) {
      case Tok::Lower:
        if (tk.text == "eps") return f_eps();
        if (tk.text == "top") return f_top();
        if (tk.text == "bot") return f_bot();
        --p_;
        fail("unexpected name '" + tk.text + "' (names only appear inside modalities)");
      case Tok::Tilde:
        if (peek().kind == Tok::Lower && peek().text == "eps") {
          ++p_;
          return f_not_eps();
        }
        fail("'~' only applies to eps");
      case Tok::Upper:
        return f_var(tk.text);
      case Tok::LParen: {
        Formula f = expr();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        --p_;
        fail(tk.kind == Tok::End ? "unexpected end of input" : "unexpected '" + tk.text + "'");
    }
  }

  std::vector<Tok> t_;
  std::size_t p_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Formula f = Parser(lex(text)).parse();
  for (auto& x : free_vars(f)) throw ParseError(ErrorCode::FreeVariable, 1, 1, "unbound fixpoint variable " + x);
  if (!is_guarded(f)) throw ParseError(ErrorCode::Unguarded, 1, 1, "fixpoint variable not guarded by a modality");
  return annotate(clean(f));
}

// --------------------------------------------------------------- semantics

namespace {

bool eval(const NameSet& s, const BarString& w, std::size_t pos, const Formula& f) {
  switch (f->op) {
    case Op::Eps:
      return pos == w.size();
    case Op::NotEps:
      return pos < w.size();
    case Op::And:
      return eval(s, w, pos, f->a) && eval(s, w, pos, f->b);
    case Op::Or:
      return eval(s, w, pos, f->a) || eval(s, w, pos, f->b);
    case Op::Dia:
    case Op::Box: {
      bool dia = f->op == Op::Dia;
      if (pos == w.size()) return !dia;
      const Letter& l = w[pos];
      if (l.bar != f->letter.bar) return !dia;
      if (!l.bar) {
        if (l.name != f->letter.name) return !dia;
        return eval(s, w, pos + 1, f->a);
      }
      // Rename both binders to one name fresh for everything in sight.
      BarString rest(w.begin() + static_cast<long>(pos) + 1, w.end());
      NameSet ex = s;
      NameSet nf = all_names(f);
      NameSet nw = names(rest);
      ex.insert(nf.begin(), nf.end());
      ex.insert(nw.begin(), nw.end());
      ex.insert(l.name);
      Name c = least_fresh(ex);
      BarString vc = act(Permutation::transposition(l.name, c), rest);
      Formula fc = act(Permutation::transposition(f->letter.name, c), f->a);
      NameSet s2 = s;
      s2.insert(c);
      return eval(s2, vc, 0, fc);
    }
    case Op::Mu:
      return eval(s, w, pos, unfold(f));
    case Op::Var:
      throw PreconditionError("free fixpoint variable " + f->var);
  }
  return false;
}

}  // namespace

bool evaluate(const NameSet& s, const BarString& w, const Formula& f) {
  if (!free_vars(f).empty()) throw PreconditionError("formula has free fixpoint variables");
  for (Name n : free_names(f))
    if (!s.count(n)) throw PreconditionError("free name " + name_to_string(n) + " of the formula is not in the context");
  for (Name n : free_names(w))
    if (!s.count(n)) throw PreconditionError("free name " + name_to_string(n) + " of the word is not in the context");
  return eval(s, w, 0, f);
}

}  // namespace barmu
