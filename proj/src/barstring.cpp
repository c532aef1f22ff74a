#include "barmu/barstring.hpp"

#include <map>
#include <sstream>

#include "barmu/errors.hpp"

namespace barmu {

std::string to_string(const Letter& l) { return (l.bar ? "#" : "") + name_to_string(l.name); }

Letter act(const Permutation& p, const Letter& l) { return {l.bar, p.apply(l.name)}; }

std::string to_string(const BarString& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

std::string to_string(const DataWord& d) {
  if (d.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ' ';
    out += name_to_string(d[i]);
  }
  return out;
}

BarString parse_barstring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "eps") return {};
  if (toks.empty()) throw ParseError(ErrorCode::Syntax, 1, 1, "empty bar string (write eps)");
  BarString w;
  int col = 1;
  for (auto& t : toks) {
    bool bar = !t.empty() && t[0] == '#';
    auto n = name_from_string(bar ? std::string_view(t).substr(1) : std::string_view(t));
    if (!n) throw ParseError(ErrorCode::Name, 1, col, "bad letter '" + t + "'");
    w.push_back({bar, *n});
    col += static_cast<int>(t.size()) + 1;
  }
  return w;
}

BarString act(const Permutation& p, const BarString& w) {
  BarString out;
  out.reserve(w.size());
  for (auto& l : w) out.push_back(act(p, l));
  return out;
}

NameSet names(const BarString& w) {
  NameSet s;
  for (auto& l : w) s.insert(l.name);
  return s;
}

NameSet free_names(const BarString& w) {
  NameSet seen_bar, fn;
  for (auto& l : w) {
    if (l.bar)
      seen_bar.insert(l.name);
    else if (!seen_bar.count(l.name))
      fn.insert(l.name);
  }
  return fn;
}

NameSet bound_names(const BarString& w) {
  NameSet s;
  for (auto& l : w)
    if (l.bar) s.insert(l.name);
  return s;
}

bool is_closed(const BarString& w) { return free_names(w).empty(); }

bool is_clean(const BarString& w) {
  NameSet fn = free_names(w), seen;
  for (auto& l : w) {
    if (!l.bar) continue;
    if (fn.count(l.name) || !seen.insert(l.name).second) return false;
  }
  return true;
}

bool in_free(const BarString& w, const NameSet& s) {
  for (Name n : free_names(w))
    if (!s.count(n)) return false;
  return true;
}

namespace {

bool alpha_eq_from(const BarString& w, std::size_t i, const BarString& v, std::size_t j) {
  if (w.size() - i != v.size() - j) return false;
  for (; i < w.size(); ++i, ++j) {
    if (w[i].bar != v[j].bar) return false;
    if (!w[i].bar) {
      if (w[i].name != v[j].name) return false;
      continue;
    }
    BarString x(w.begin() + static_cast<long>(i) + 1, w.end());
    BarString y(v.begin() + static_cast<long>(j) + 1, v.end());
    return abstraction_eq(
        w[i].name, x, v[j].name, y,
        [](const Permutation& p, const BarString& s) { return act(p, s); },
        [](const BarString& s) { return names(s); },
        [](const BarString& s, const BarString& t) { return alpha_eq_from(s, 0, t, 0); });
  }
  return true;
}

}  // namespace

bool alpha_eq(const BarString& w, const BarString& v) { return alpha_eq_from(w, 0, v, 0); }

BarString canonical_form(const BarString& w) {
  NameSet fn = free_names(w);
  BarString out = w;
  Name next = kCanonicalBase;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!out[i].bar) continue;
    while (fn.count(next)) ++next;
    Name old = out[i].name, k = next++;
    out[i].name = k;
    // Rename the occurrences bound by this binder.
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (w[j].name != old) continue;
      if (w[j].bar) break;
      out[j].name = k;
    }
  }
  return out;
}

DataWord ub(const BarString& w) {
  DataWord d;
  d.reserve(w.size());
  for (auto& l : w) d.push_back(l.name);
  return d;
}

std::vector<BarString> enumerate_closed(int maxlen, const std::vector<Name>& pool) {
  std::vector<BarString> out;
  std::set<BarString> seen;
  std::vector<Letter> alphabet;
  for (Name n : pool) alphabet.push_back(Letter::bound(n));
  for (Name n : pool) alphabet.push_back(Letter::plain(n));
  // Length-major, lexicographic within a length.
  std::vector<BarString> layer{{}};
  for (int len = 0; len <= maxlen; ++len) {
    std::vector<BarString> next;
    for (auto& w : layer) {
      // Prefixes of closed strings are closed, so extend only closed ones.
      if (!is_closed(w)) continue;
      if (seen.insert(canonical_form(w)).second) out.push_back(w);
      if (len < maxlen)
        for (auto& l : alphabet) {
          BarString x = w;
          x.push_back(l);
          next.push_back(std::move(x));
        }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<BarString> alpha_variants(const BarString& w, const std::vector<Name>& pool) {
  std::vector<std::size_t> binders;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].bar) binders.push_back(i);
  std::vector<BarString> out;
  std::vector<std::size_t> choice(binders.size(), 0);
  if (pool.empty() && !binders.empty()) return out;
  while (true) {
    BarString x = w;
    for (std::size_t b = 0; b < binders.size(); ++b) {
      std::size_t i = binders[b];
      Name old = w[i].name, k = pool[choice[b]];
      x[i].name = k;
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].name != old) continue;
        if (w[j].bar) break;
        x[j].name = k;
      }
    }
    if (alpha_eq(x, w)) out.push_back(std::move(x));
    std::size_t b = 0;
    for (; b < choice.size(); ++b) {
      if (++choice[b] < pool.size()) break;
      choice[b] = 0;
    }
    if (b == choice.size()) break;
  }
  return out;
}

std::set<DataWord> N_image(const std::vector<BarString>& lang, const std::vector<Name>& pool) {
  std::set<DataWord> out;
  for (auto& w : lang)
    for (auto& v : alpha_variants(w, pool))
      if (is_clean(v)) out.insert(ub(v));
  return out;
}

std::set<DataWord> D_image(const std::vector<BarString>& lang, const std::vector<Name>& pool) {
  std::set<DataWord> out;
  for (auto& w : lang)
    for (auto& v : alpha_variants(w, pool)) out.insert(ub(v));
  return out;
}

}  // namespace barmu
