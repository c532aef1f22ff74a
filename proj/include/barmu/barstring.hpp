#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "barmu/nominal.hpp"

namespace barmu {

struct Letter {
  bool bar = false;
  Name name = 0;

  static Letter plain(Name n) { return {false, n}; }
  static Letter bound(Name n) { return {true, n}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

std::string to_string(const Letter& l);
Letter act(const Permutation& p, const Letter& l);

using BarString = std::vector<Letter>;
using DataWord = std::vector<Name>;

std::string to_string(const BarString& w);
std::string to_string(const DataWord& d);
// Whitespace separated letters; "eps" is the empty string.
BarString parse_barstring(std::string_view text);

BarString act(const Permutation& p, const BarString& w);
NameSet names(const BarString& w);
NameSet free_names(const BarString& w);
NameSet bound_names(const BarString& w);
bool is_closed(const BarString& w);
bool is_clean(const BarString& w);
// Predicate form of <S>: FN(w) is contained in S.
bool in_free(const BarString& w, const NameSet& s);

bool alpha_eq(const BarString& w, const BarString& v);
BarString canonical_form(const BarString& w);
DataWord ub(const BarString& w);

// One representative per alpha class of closed strings up to maxlen, with
// binders and plain letters drawn from the pool.
std::vector<BarString> enumerate_closed(int maxlen, const std::vector<Name>& pool);

// All strings alpha-equivalent to w whose binders are renamed into pool.
std::vector<BarString> alpha_variants(const BarString& w, const std::vector<Name>& pool);

// N and D images of a finite alpha-closed language given by representatives,
// restricted to data words over the pool.
std::set<DataWord> N_image(const std::vector<BarString>& lang, const std::vector<Name>& pool);
std::set<DataWord> D_image(const std::vector<BarString>& lang, const std::vector<Name>& pool);

}  // namespace barmu
