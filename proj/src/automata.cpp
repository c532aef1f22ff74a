#include "barmu/automata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "barmu/errors.hpp"

namespace barmu {

int ExtBarNFA::add_state(std::string label, Acc acc) {
  names.push_back(std::move(label));
  accept.push_back(acc);
  out.emplace_back();
  return static_cast<int>(accept.size()) - 1;
}

std::size_t ExtBarNFA::num_edges() const {
  std::size_t n = 0;
  for (auto& e : out) n += e.size();
  return n;
}

bool ExtBarNFA::has_eps() const {
  for (auto& es : out)
    for (auto& e : es)
      if (e.eps) return true;
  return false;
}

bool ExtBarNFA::has_top() const { return std::find(accept.begin(), accept.end(), Acc::Top) != accept.end(); }

NameSet ExtBarNFA::names_used() const {
  NameSet s;
  for (auto& es : out)
    for (auto& e : es)
      if (!e.eps) s.insert(e.letter.name);
  return s;
}

// ------------------------------------------------------------- text format

namespace {

std::vector<std::pair<std::string, int>> words_with_cols(const std::string& line, std::size_t from) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
    i = j;
  }
  return out;
}

std::string acc_text(Acc a) { return a == Acc::Top ? "top" : a == Acc::Yes ? "1" : "0"; }

}  // namespace

ExtBarNFA parse_automaton(std::string_view text) {
  ExtBarNFA a;
  std::map<std::string, int> ids;
  struct PendingAcc {
    std::string state, value;
    int line, col;
  };
  struct PendingTrans {
    std::string from, label, to;
    int line, col_from, col_label, col_to;
  };
  std::vector<PendingAcc> accs;
  std::vector<PendingTrans> trans;
  std::optional<std::pair<std::string, std::pair<int, int>>> init;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto colon = line.find(':');
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '%') continue;
    if (colon == std::string::npos)
      throw ParseError(ErrorCode::Syntax, lineno, static_cast<int>(first) + 1, "expected 'key: ...'");
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    auto ws = words_with_cols(line, colon + 1);
    if (key == "states") {
      for (auto& [w, c] : ws) {
        if (ids.count(w)) throw ParseError(ErrorCode::Syntax, lineno, c, "duplicate state '" + w + "'");
        ids[w] = a.add_state(w);
      }
    } else if (key == "initial") {
      if (ws.size() != 1) throw ParseError(ErrorCode::Syntax, lineno, static_cast<int>(colon) + 2, "expected one initial state");
      if (init) throw ParseError(ErrorCode::Syntax, lineno, ws[0].second, "initial state given twice");
      init = {ws[0].first, {lineno, ws[0].second}};
    } else if (key == "accept") {
      for (auto& [w, c] : ws) {
        auto eq = w.find('=');
        if (eq == std::string::npos) throw ParseError(ErrorCode::Syntax, lineno, c, "expected state=0|1|top");
        accs.push_back({w.substr(0, eq), w.substr(eq + 1), lineno, c});
      }
    } else if (key == "trans") {
      if (ws.size() != 3) throw ParseError(ErrorCode::Syntax, lineno, static_cast<int>(colon) + 2, "expected 'trans: FROM LABEL TO'");
      trans.push_back({ws[0].first, ws[1].first, ws[2].first, lineno, ws[0].second, ws[1].second, ws[2].second});
    } else {
      throw ParseError(ErrorCode::Syntax, lineno, static_cast<int>(first) + 1, "unknown key '" + key + "'");
    }
  }

  auto lookup = [&](const std::string& s, int l, int c) {
    auto it = ids.find(s);
    if (it == ids.end()) throw ParseError(ErrorCode::UnknownState, l, c, "unknown state '" + s + "'");
    return it->second;
  };
  if (a.num_states() == 0) throw ParseError(ErrorCode::Syntax, lineno, 1, "no states declared");
  if (!init) throw ParseError(ErrorCode::Syntax, lineno, 1, "missing initial state");
  a.initial = lookup(init->first, init->second.first, init->second.second);
  for (auto& p : accs) {
    int q = lookup(p.state, p.line, p.col);
    if (p.value == "0")
      a.accept[q] = Acc::No;
    else if (p.value == "1")
      a.accept[q] = Acc::Yes;
    else if (p.value == "top")
      a.accept[q] = Acc::Top;
    else
      throw ParseError(ErrorCode::Syntax, p.line, p.col, "acceptance must be 0, 1 or top");
  }
  for (auto& t : trans) {
    int from = lookup(t.from, t.line, t.col_from);
    int to = lookup(t.to, t.line, t.col_to);
    if (a.accept[from] == Acc::Top)
      throw ParseError(ErrorCode::TopNotDeadlock, t.line, t.col_from, "transition out of top state '" + t.from + "'");
    if (t.label == "eps") {
      a.add_eps(from, to);
      continue;
    }
    bool bar = t.label[0] == '#';
    auto n = name_from_string(bar ? std::string_view(t.label).substr(1) : std::string_view(t.label));
    if (!n) throw ParseError(ErrorCode::Name, t.line, t.col_label, "bad label '" + t.label + "'");
    a.add_edge(from, {bar, *n}, to);
  }
  auto fn = state_free_names(a);
  if (!fn[a.initial].empty())
    throw ParseError(ErrorCode::NotClosed, init->second.first, init->second.second,
                     "initial language is not closed, free names " + to_string(fn[a.initial]));
  return a;
}

std::string to_string(const ExtBarNFA& a) {
  std::string s = "states:";
  for (auto& n : a.names) s += " " + n;
  s += "\ninitial: " + a.names[a.initial] + "\naccept:";
  for (std::size_t q = 0; q < a.num_states(); ++q)
    if (a.accept[q] != Acc::No) s += " " + a.names[q] + "=" + acc_text(a.accept[q]);
  s += "\n";
  for (std::size_t q = 0; q < a.num_states(); ++q)
    for (auto& e : a.out[q])
      s += "trans: " + a.names[q] + " " + (e.eps ? std::string("eps") : to_string(e.letter)) + " " + a.names[e.to] + "\n";
  return s;
}

void check_top_deadlock(const ExtBarNFA& a) {
  for (std::size_t q = 0; q < a.num_states(); ++q)
    if (a.accept[q] == Acc::Top && !a.out[q].empty())
      throw Error(ErrorCode::TopNotDeadlock, "transition out of top state '" + a.names[q] + "'");
}

void check_closed(const ExtBarNFA& a) {
  auto fn = state_free_names(a);
  if (!fn[a.initial].empty())
    throw Error(ErrorCode::NotClosed, "initial language is not closed, free names " + to_string(fn[a.initial]));
}

// ---------------------------------------------------------- basic analyses

std::vector<bool> productive(const ExtBarNFA& a) {
  std::size_t n = a.num_states();
  std::vector<std::vector<int>> rev(n);
  for (std::size_t q = 0; q < n; ++q)
    for (auto& e : a.out[q]) rev[e.to].push_back(static_cast<int>(q));
  std::vector<bool> good(n, false);
  std::vector<int> stack;
  for (std::size_t q = 0; q < n; ++q)
    if (a.accept[q] != Acc::No) {
      good[q] = true;
      stack.push_back(static_cast<int>(q));
    }
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int p : rev[q])
      if (!good[p]) {
        good[p] = true;
        stack.push_back(p);
      }
  }
  return good;
}

std::vector<NameSet> state_free_names(const ExtBarNFA& a) {
  auto good = productive(a);
  std::vector<NameSet> fn(a.num_states());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t q = 0; q < a.num_states(); ++q) {
      if (!good[q]) continue;
      for (auto& e : a.out[q]) {
        if (!good[e.to]) continue;
        NameSet add = fn[e.to];
        if (!e.eps) {
          if (e.letter.bar)
            add.erase(e.letter.name);
          else
            add.insert(e.letter.name);
        }
        for (Name x : add) changed |= fn[q].insert(x).second;
      }
    }
  }
  return fn;
}

std::size_t degree(const ExtBarNFA& a) {
  std::size_t d = 0;
  for (auto& s : state_free_names(a)) d = std::max(d, s.size());
  return d;
}

namespace {

std::set<int> eps_closure(const ExtBarNFA& a, std::set<int> s) {
  std::vector<int> stack(s.begin(), s.end());
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (auto& e : a.out[q])
      if (e.eps && s.insert(e.to).second) stack.push_back(e.to);
  }
  return s;
}

bool any_top(const ExtBarNFA& a, const std::set<int>& s) {
  for (int q : s)
    if (a.accept[q] == Acc::Top) return true;
  return false;
}

}  // namespace

bool literal_accepts(const ExtBarNFA& a, const BarString& w) {
  std::set<int> cur = eps_closure(a, {a.initial});
  for (auto& l : w) {
    if (any_top(a, cur)) return true;
    std::set<int> next;
    for (int q : cur)
      for (auto& e : a.out[q])
        if (!e.eps && e.letter == l) next.insert(e.to);
    cur = eps_closure(a, std::move(next));
    if (cur.empty()) return false;
  }
  for (int q : cur)
    if (a.accept[q] != Acc::No) return true;
  return false;
}

ExtBarNFA epsilon_eliminate(const ExtBarNFA& a) {
  if (!a.has_eps()) return a;
  ExtBarNFA r;
  r.initial = a.initial;
  for (std::size_t q = 0; q < a.num_states(); ++q) r.add_state(a.names[q]);
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    auto cl = eps_closure(a, {static_cast<int>(q)});
    if (any_top(a, cl)) {
      r.accept[q] = Acc::Top;
      continue;
    }
    std::set<std::pair<Letter, int>> edges;
    for (int p : cl) {
      if (a.accept[p] == Acc::Yes) r.accept[q] = Acc::Yes;
      for (auto& e : a.out[p])
        if (!e.eps) edges.insert({e.letter, e.to});
    }
    for (auto& [l, to] : edges) r.add_edge(static_cast<int>(q), l, to);
  }
  return trim(r);
}

ExtBarNFA trim(const ExtBarNFA& a) {
  std::vector<int> id(a.num_states(), -1);
  std::vector<int> order{a.initial};
  id[a.initial] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto& e : a.out[order[i]])
      if (id[e.to] < 0) {
        id[e.to] = static_cast<int>(order.size());
        order.push_back(e.to);
      }
  if (order.size() == a.num_states() && a.initial == 0) {
    bool identity = true;
    for (std::size_t i = 0; i < order.size(); ++i) identity &= order[i] == static_cast<int>(i);
    if (identity) return a;
  }
  ExtBarNFA r;
  for (int q : order) r.add_state(a.names[q], a.accept[q]);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto& e : a.out[order[i]]) r.out[i].push_back({e.eps, e.letter, id[e.to]});
  r.initial = 0;
  return r;
}

// ------------------------------------------------------------- name dropping

NameDrop::NameDrop(const ExtBarNFA& a, bool maximal)
    : a_(epsilon_eliminate(a)), fn_(state_free_names(a_)), maximal_(maximal) {}

NdState NameDrop::initial() const {
  NdState s{a_.initial, {}};
  for (Name x : fn_[a_.initial]) s.reg[x] = x;
  return s;
}

std::vector<NdState> NameDrop::step(const NdState& s, const Letter& l) const {
  std::vector<NdState> out;
  for (auto& e : a_.out[s.q]) {
    if (e.letter.bar != l.bar) continue;
    const NameSet& fn = fn_[e.to];
    NdState t{e.to, {}};
    if (!l.bar) {
      auto it = s.reg.find(e.letter.name);
      if (it == s.reg.end() || it->second != l.name) continue;
      for (auto& [k, v] : s.reg)
        if (fn.count(k)) t.reg[k] = v;
    } else {
      Name b = e.letter.name;
      for (auto& [k, v] : s.reg)
        if (k != b && v != l.name && fn.count(k)) t.reg[k] = v;
      if (fn.count(b)) t.reg[b] = l.name;
    }
    if (maximal_) {
      out.push_back(std::move(t));
      continue;
    }
    std::vector<std::pair<Name, Name>> entries(t.reg.begin(), t.reg.end());
    for (std::size_t mask = 0; mask < (std::size_t{1} << entries.size()); ++mask) {
      NdState u{t.q, {}};
      for (std::size_t i = 0; i < entries.size(); ++i)
        if (mask >> i & 1) u.reg.insert(entries[i]);
      out.push_back(std::move(u));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool NameDrop::accepts(const BarString& w) const {
  std::set<NdState> cur{initial()};
  auto top = [&](const std::set<NdState>& s) {
    for (auto& x : s)
      if (accept(x) == Acc::Top) return true;
    return false;
  };
  for (auto& l : w) {
    if (top(cur)) return true;
    std::set<NdState> next;
    for (auto& s : cur)
      for (auto& t : step(s, l)) next.insert(std::move(t));
    if (next.empty()) return false;
    cur = std::move(next);
  }
  for (auto& s : cur)
    if (accept(s) != Acc::No) return true;
  return false;
}

bool accepts_alpha(const ExtBarNFA& a, const BarString& w) { return NameDrop(a).accepts(w); }

// ----------------------------------------------------------------- searches

namespace {

BarString rebuild(const std::vector<std::pair<int, Letter>>& parent, int i) {
  BarString w;
  while (parent[i].first >= 0) {
    w.push_back(parent[i].second);
    i = parent[i].first;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

NameSet meet(const NameSet& s, const NameSet& t) {
  NameSet r;
  for (Name x : s)
    if (t.count(x)) r.insert(x);
  return r;
}

}  // namespace

SearchResult is_empty(const ExtBarNFA& a0) {
  ExtBarNFA a = epsilon_eliminate(a0);
  auto fn = state_free_names(a);
  auto good = productive(a);
  using Key = std::pair<int, NameSet>;
  std::map<Key, int> seen;
  std::vector<Key> keys;
  std::vector<std::pair<int, Letter>> parent;
  auto visit = [&](Key k, int from, Letter l) {
    if (seen.count(k)) return;
    seen[k] = static_cast<int>(keys.size());
    keys.push_back(std::move(k));
    parent.push_back({from, l});
  };
  visit({a.initial, {}}, -1, {});
  SearchResult r;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [q, s] = keys[i];
    if (a.accept[q] != Acc::No) {
      r.holds = false;
      r.witness = rebuild(parent, static_cast<int>(i));
      r.explored = keys.size();
      return r;
    }
    for (auto& e : a.out[q]) {
      if (!good[e.to]) continue;
      if (!e.letter.bar && !s.count(e.letter.name)) continue;
      NameSet s2 = s;
      s2.insert(e.letter.name);
      visit({e.to, meet(s2, fn[e.to])}, static_cast<int>(i), e.letter);
    }
  }
  r.holds = true;
  r.explored = keys.size();
  return r;
}

SearchResult inclusion(const ExtBarNFA& a1, const ExtBarNFA& a2, std::size_t budget) {
  if (a1.has_eps()) throw PreconditionError("inclusion: left automaton has epsilon transitions");
  if (a1.has_top()) throw PreconditionError("inclusion: left automaton has top states");
  auto fn1 = state_free_names(a1);
  auto good1 = productive(a1);
  NameDrop nd(a2);
  auto good2 = productive(nd.base());

  struct Config {
    int q;
    NameSet s;
    std::set<NdState> g;
    auto operator<=>(const Config&) const = default;
  };
  auto normalize = [&](int q, NameSet s, const std::set<NdState>& g) {
    Config c{q, meet(s, fn1[q]), {}};
    for (auto& x : g) {
      if (!good2[x.q]) continue;
      NdState y{x.q, {}};
      for (auto& [k, v] : x.reg)
        if (fn1[q].count(v)) y.reg[k] = v;
      c.g.insert(std::move(y));
    }
    return c;
  };

  std::map<Config, int> seen;
  std::vector<Config> configs;
  std::vector<std::pair<int, Letter>> parent;
  auto visit = [&](Config c, int from, Letter l) {
    if (seen.count(c)) return;
    if (configs.size() >= budget) throw ResourceError("inclusion: configuration budget exhausted");
    seen[c] = static_cast<int>(configs.size());
    configs.push_back(std::move(c));
    parent.push_back({from, l});
  };
  visit(normalize(a1.initial, {}, {nd.initial()}), -1, {});

  SearchResult r;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    Config c = configs[i];
    bool top = false, yes = false;
    for (auto& x : c.g) {
      top |= nd.accept(x) == Acc::Top;
      yes |= nd.accept(x) == Acc::Yes;
    }
    if (top) continue;  // every continuation is accepted on the right
    if (a1.accept[c.q] == Acc::Yes && !yes) {
      r.holds = false;
      r.witness = rebuild(parent, static_cast<int>(i));
      r.explored = configs.size();
      return r;
    }
    for (auto& e : a1.out[c.q]) {
      if (!good1[e.to]) continue;
      if (!e.letter.bar && !c.s.count(e.letter.name)) continue;
      std::set<NdState> g2;
      for (auto& x : c.g)
        for (auto& y : nd.step(x, e.letter)) g2.insert(std::move(y));
      NameSet s2 = c.s;
      s2.insert(e.letter.name);
      visit(normalize(e.to, s2, g2), static_cast<int>(i), e.letter);
    }
  }
  r.holds = true;
  r.explored = configs.size();
  return r;
}

}  // namespace barmu
