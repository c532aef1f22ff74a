#include "barmu/translate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "barmu/errors.hpp"

namespace barmu {

// ------------------------------------------------------ formula -> automaton
//
// A state is a set of instances (subformula node, environment) plus a
// reserve name. The environment maps the free names of the node, in sorted
// order, to pool names; kGarbage stands for a name whose binder has been
// shadowed, so no later letter can equal it.

namespace {

constexpr Name kGarbage = 0xffffffffu;
constexpr Name kNoReserve = 0xfffffffeu;

struct NodeInfo {
  Op op;
  Letter letter;
  int a = -1, b = -1;  // children; for Var, a is the binder
  std::vector<Name> fn;
};

struct Inst {
  int node;
  std::vector<Name> env;
  friend auto operator<=>(const Inst&, const Inst&) = default;
};

using InstSet = std::vector<Inst>;  // sorted, unique

struct Key {
  bool literal;
  InstSet insts;
  Name reserve;
  friend auto operator<=>(const Key&, const Key&) = default;
};

class Tableau {
 public:
  Tableau(const Formula& phi, std::size_t pool, std::size_t budget) : pool_(pool), budget_(budget) {
    std::map<std::string, int> binders;
    root_ = index(phi, binders);
    for (auto& [var, node] : pending_vars_) nodes_[node].a = binders.at(var);
  }

  ExtBarNFA build(TranslateStats* stats) {
    top_ = a_.add_state("top", Acc::Top);
    a_.initial = state({false, {{root_, {}}}, kNoReserve});
    for (std::size_t i = 0; i < keys_.size(); ++i) expand_state(static_cast<int>(i));
    // Distinct bar letters can land on the same successor; keep one copy.
    for (auto& es : a_.out) {
      auto key = [](const Edge& e) { return std::tuple(e.eps, e.letter, e.to); };
      std::sort(es.begin(), es.end(), [&](const Edge& x, const Edge& y) { return key(x) < key(y); });
      es.erase(std::unique(es.begin(), es.end(), [&](const Edge& x, const Edge& y) { return key(x) == key(y); }),
               es.end());
    }
    if (stats) {
      stats->states = a_.num_states();
      stats->literal_states = 0;
      for (auto& k : keys_) stats->literal_states += k.literal;
      stats->edges = a_.num_edges();
      stats->eps_edges = 0;
      for (auto& es : a_.out)
        for (auto& e : es) stats->eps_edges += e.eps;
      stats->pool_size = pool_;
      stats->degree = degree(a_);
    }
    return std::move(a_);
  }

 private:
  int index(const Formula& f, std::map<std::string, int>& binders) {
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({f->op, f->letter, -1, -1, {}});
    NameSet fn = free_names(f);
    nodes_[id].fn.assign(fn.begin(), fn.end());
    if (f->op == Op::Mu) binders[f->var] = id;
    if (f->op == Op::Var) pending_vars_.push_back({f->var, id});
    if (f->a) {
      int c = index(f->a, binders);
      nodes_[id].a = c;
    }
    if (f->b) {
      int c = index(f->b, binders);
      nodes_[id].b = c;
    }
    return id;
  }

  Name lookup(const Inst& in, Name x) const {
    auto& fn = nodes_[in.node].fn;
    auto it = std::lower_bound(fn.begin(), fn.end(), x);
    return in.env[static_cast<std::size_t>(it - fn.begin())];
  }

  // Environment of child c of instance in; bound (if any) maps to val.
  Inst child(const Inst& in, int c, std::optional<Name> bound = std::nullopt, Name val = 0) const {
    Inst r{c, {}};
    for (Name x : nodes_[c].fn) r.env.push_back(bound && x == *bound ? val : lookup(in, x));
    return r;
  }

  int state(Key k) {
    auto it = ids_.find(k);
    if (it != ids_.end()) return it->second;
    if (keys_.size() >= budget_) throw ResourceError("translate: state budget of " + std::to_string(budget_) + " exhausted");
    std::string label = "q" + std::to_string(keys_.size());
    Acc acc = k.literal ? literal_accept(k.insts) : Acc::No;
    int id = a_.add_state(label, acc);
    ids_.emplace(k, id);
    keys_.push_back(std::move(k));
    ids_of_.push_back(id);
    return id;
  }

  Acc literal_accept(const InstSet& s) const {
    for (auto& in : s) {
      Op op = nodes_[in.node].op;
      if (op == Op::Eps) return Acc::Yes;  // eps is alone in its set
      if (op == Op::NotEps || op == Op::Dia) return Acc::No;
    }
    return Acc::Yes;
  }

  // All consistent literal sets of the conjunction of s.
  std::vector<InstSet> literal_sets(const InstSet& s) {
    std::vector<InstSet> out;
    std::vector<Inst> lits;
    std::function<void(std::vector<Inst>)> go = [&](std::vector<Inst> todo) {
      while (!todo.empty()) {
        Inst in = std::move(todo.back());
        todo.pop_back();
        const NodeInfo& n = nodes_[in.node];
        switch (n.op) {
          case Op::And:
            todo.push_back(child(in, n.a));
            todo.push_back(child(in, n.b));
            continue;
          case Op::Or: {
            std::size_t mark = lits.size();
            auto left = todo;
            left.push_back(child(in, n.a));
            go(std::move(left));
            lits.resize(mark);
            todo.push_back(child(in, n.b));
            continue;
          }
          case Op::Mu:
            todo.push_back(child(in, n.a));
            continue;
          case Op::Var:
            todo.push_back({n.a, in.env});
            continue;
          case Op::Box:
            if (!n.letter.bar && lookup(in, n.letter.name) == kGarbage) continue;  // vacuous
            lits.push_back(std::move(in));
            continue;
          case Op::Dia:
            if (!n.letter.bar && lookup(in, n.letter.name) == kGarbage) return;  // unsatisfiable
            lits.push_back(std::move(in));
            continue;
          case Op::Eps:
          case Op::NotEps:
            lits.push_back(std::move(in));
            continue;
        }
      }
      if (auto l = finish(lits)) out.push_back(std::move(*l));
    };
    go(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::optional<InstSet> finish(const std::vector<Inst>& lits) const {
    bool eps = false, not_eps = false, bar_dia = false;
    std::optional<Name> plain_dia;
    for (auto& in : lits) {
      const NodeInfo& n = nodes_[in.node];
      if (n.op == Op::Eps) eps = true;
      if (n.op == Op::NotEps) not_eps = true;
      if (n.op == Op::Dia) {
        if (n.letter.bar) {
          bar_dia = true;
        } else {
          Name v = lookup(in, n.letter.name);
          if (plain_dia && *plain_dia != v) return std::nullopt;
          plain_dia = v;
        }
      }
    }
    bool dia = bar_dia || plain_dia;
    if (eps && (not_eps || dia)) return std::nullopt;
    if (bar_dia && plain_dia) return std::nullopt;
    InstSet r;
    for (auto& in : lits) {
      Op op = nodes_[in.node].op;
      if (eps && op != Op::Eps) continue;  // boxes hold at the end
      if (dia && op == Op::NotEps) continue;
      r.push_back(in);
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
  }

  // Target of a letter step: top when nothing is left to satisfy.
  int successor(InstSet s, Name reserve) {
    if (s.empty()) return top_;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return state({false, std::move(s), reserve});
  }

  void expand_state(int i) {
    Key k = keys_[i];
    int from = ids_of_[i];
    if (!k.literal) {
      for (auto& l : literal_sets(k.insts)) a_.add_eps(from, state({true, std::move(l), k.reserve}));
      return;
    }
    for (auto& in : k.insts)
      if (nodes_[in.node].op == Op::Eps) return;

    NameSet live;
    for (auto& in : k.insts)
      for (Name v : in.env)
        if (v != kGarbage) live.insert(v);
    if (k.reserve != kNoReserve) live.insert(k.reserve);

    // Plain letters: every live name is bound earlier in the word.
    for (Name x : live) {
      InstSet next;
      bool dead = false;
      for (auto& in : k.insts) {
        const NodeInfo& n = nodes_[in.node];
        if (n.op != Op::Dia && n.op != Op::Box) continue;  // ~eps is discharged
        bool match = !n.letter.bar && lookup(in, n.letter.name) == x;
        if (match)
          next.push_back(child(in, n.a));
        else if (n.op == Op::Dia)
          dead = true;
      }
      if (!dead) a_.add_edge(from, Letter::plain(x), successor(std::move(next), k.reserve));
    }

    // Bar letters: one fresh pool name, or shadow a live one.
    std::vector<Name> binders(live.begin(), live.end());
    for (Name c = 0; c < pool_; ++c)
      if (!live.count(c)) {
        binders.push_back(c);
        break;
      }
    for (Name c : binders) {
      InstSet next;
      bool dead = false;
      for (auto& in0 : k.insts) {
        const NodeInfo& n = nodes_[in0.node];
        if (n.op != Op::Dia && n.op != Op::Box) continue;
        if (!n.letter.bar) {
          if (n.op == Op::Dia) dead = true;
          continue;
        }
        Inst in = in0;
        for (Name& v : in.env)
          if (v == c) v = kGarbage;
        next.push_back(child(in, n.a, n.letter.name, c));
      }
      if (dead) break;
      a_.add_edge(from, Letter::bound(c), successor(next, k.reserve));
      if (k.reserve == kNoReserve) a_.add_edge(from, Letter::bound(c), successor(next, c));
    }
  }

  std::vector<NodeInfo> nodes_;
  std::vector<std::pair<std::string, int>> pending_vars_;
  int root_ = 0;
  std::size_t pool_, budget_;
  ExtBarNFA a_;
  int top_ = 0;
  std::map<Key, int> ids_;
  std::vector<Key> keys_;
  std::vector<int> ids_of_;
};

}  // namespace

ExtBarNFA formula_to_automaton(const Formula& phi, const TranslateOptions& opt, TranslateStats* stats) {
  if (!free_vars(phi).empty()) throw PreconditionError("translate: formula has free fixpoint variables");
  if (!free_names(phi).empty()) throw PreconditionError("translate: formula has free names");
  if (!is_guarded(phi)) throw PreconditionError("translate: formula is not guarded");
  Formula f = is_clean(phi) ? phi : annotate(clean(phi));
  std::size_t pool = opt.pool_size ? opt.pool_size : degree(f) + 2;
  return Tableau(f, pool, opt.budget).build(stats);
}

// ------------------------------------------------------ automaton -> formula

Formula automaton_to_formula(const ExtBarNFA& a0) {
  ExtBarNFA a = epsilon_eliminate(a0);
  std::vector<bool> on_path(a.num_states(), false);
  std::function<Formula(int)> form = [&](int q) -> Formula {
    if (a.accept[q] == Acc::Top) return f_top();
    std::string x = "Q" + std::to_string(q);
    if (on_path[q]) return f_var(x);
    on_path[q] = true;
    std::vector<Formula> parts;
    if (a.accept[q] == Acc::Yes) parts.push_back(f_eps());
    for (auto& e : a.out[q]) parts.push_back(f_dia(e.letter, form(e.to)));
    on_path[q] = false;
    Formula body = f_or_all(parts);
    return free_vars(body).count(x) ? f_mu(x, body) : body;
  };
  return annotate(clean(form(a.initial)));
}

}  // namespace barmu
