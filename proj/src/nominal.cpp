#include "barmu/nominal.hpp"

#include <mutex>
#include <unordered_map>

namespace barmu {

namespace {

struct InternTable {
  std::mutex mu;
  std::unordered_map<std::string, Name> ids;
  std::vector<std::string> names;
};

InternTable& interned() {
  static InternTable t;
  return t;
}

bool reserved_word(std::string_view s) {
  return s == "eps" || s == "top" || s == "bot" || s == "mu";
}

}  // namespace

std::string name_to_string(Name n) {
  if (n >= kInternBase) {
    auto& t = interned();
    std::lock_guard lock(t.mu);
    Name i = n - kInternBase;
    if (i < t.names.size()) return t.names[i];
  }
  std::string s(1, static_cast<char>('a' + n % 26));
  if (n / 26 > 0) s += std::to_string(n / 26);
  return s;
}

std::optional<Name> name_from_string(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return std::nullopt;
  for (char ch : s.substr(1))
    if (!((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9'))) return std::nullopt;
  if (reserved_word(s)) return std::nullopt;
  std::string_view digits = s.substr(1);
  bool numeric = true;
  for (char ch : digits) numeric = numeric && ch >= '0' && ch <= '9';
  if (numeric && (digits.empty() || (digits[0] != '0' && digits.size() <= 8))) {
    std::uint64_t k = digits.empty() ? 0 : std::stoull(std::string(digits));
    std::uint64_t id = k * 26 + static_cast<std::uint64_t>(s[0] - 'a');
    if (k > 0 && id < kInternBase) return static_cast<Name>(id);
    if (k == 0) return static_cast<Name>(id);
  }
  auto& t = interned();
  std::lock_guard lock(t.mu);
  std::string key(s);
  if (auto it = t.ids.find(key); it != t.ids.end()) return it->second;
  Name id = kInternBase + static_cast<Name>(t.names.size());
  t.ids.emplace(key, id);
  t.names.push_back(key);
  return id;
}

Name least_fresh(const NameSet& excluded) { return least_fresh_from(excluded, 0); }

Name least_fresh_from(const NameSet& excluded, Name start) {
  Name c = start;
  for (auto it = excluded.lower_bound(start); it != excluded.end() && *it == c; ++it) ++c;
  return c;
}

Name FreshSupply::next() {
  Name c = least_fresh(excluded_);
  excluded_.insert(c);
  return c;
}

Permutation Permutation::transposition(Name a, Name b) {
  Permutation p;
  if (a != b) {
    p.map_[a] = b;
    p.map_[b] = a;
  }
  return p;
}

Permutation Permutation::extending(const std::map<Name, Name>& partial) {
  // Close each chain of the partial injection into a cycle.
  Permutation p;
  std::map<Name, Name> inv;
  for (auto [k, v] : partial) inv[v] = k;
  for (auto [k, v] : partial) p.map_[k] = v;
  for (auto [v, k] : inv) {
    if (partial.count(v)) continue;  // v already mapped
    // v is an image not in the domain: walk back to the chain start.
    Name start = k;
    while (inv.count(start)) start = inv[start];
    p.map_[v] = start;
  }
  p.normalize();
  return p;
}

void Permutation::normalize() {
  for (auto it = map_.begin(); it != map_.end();) {
    if (it->first == it->second)
      it = map_.erase(it);
    else
      ++it;
  }
}

Name Permutation::apply(Name a) const {
  auto it = map_.find(a);
  return it == map_.end() ? a : it->second;
}

NameSet Permutation::apply(const NameSet& s) const {
  NameSet out;
  for (Name n : s) out.insert(apply(n));
  return out;
}

Permutation Permutation::compose(const Permutation& inner) const {
  Permutation p;
  NameSet dom = support();
  NameSet d2 = inner.support();
  dom.insert(d2.begin(), d2.end());
  for (Name n : dom) p.map_[n] = apply(inner.apply(n));
  p.normalize();
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  for (auto [k, v] : map_) p.map_[v] = k;
  return p;
}

NameSet Permutation::support() const {
  NameSet s;
  for (auto& kv : map_) s.insert(kv.first);
  return s;
}

Permutation compose(const Permutation& p1, const Permutation& p2) { return p1.compose(p2); }

std::string to_string(const NameSet& s) {
  std::string out = "{";
  bool first = true;
  for (Name n : s) {
    if (!first) out += ",";
    first = false;
    out += name_to_string(n);
  }
  return out + "}";
}

}  // namespace barmu
