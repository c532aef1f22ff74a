#include "barmu/gen.hpp"

#include <functional>

namespace barmu {

Formula random_formula(std::mt19937_64& rng, const GenOptions& opt) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  int var_count = 0;
  // budget: nodes still allowed; bound: names usable as plain letters;
  // guarded / unguarded: variables usable here.
  std::function<Formula(std::size_t, NameSet, std::vector<std::string>, std::vector<std::string>)> gen =
      [&](std::size_t budget, NameSet bound, std::vector<std::string> guarded,
          std::vector<std::string> unguarded) -> Formula {
    std::vector<int> choices = {0, 1};  // eps, ~eps
    if (!guarded.empty()) choices.push_back(2);
    if (budget >= 2) choices.insert(choices.end(), {3, 3, 3, 4, 4, 4});  // modalities
    if (budget >= 3) choices.insert(choices.end(), {5, 5, 6, 6});        // and, or
    if (budget >= 3) choices.insert(choices.end(), {7, 7});              // mu
    switch (choices[pick(choices.size())]) {
      case 0:
        return f_eps();
      case 1:
        return f_not_eps();
      case 2:
        return f_var(guarded[pick(guarded.size())]);
      case 3:
      case 4: {
        bool bar = bound.empty() && !opt.allow_free_names ? true : pick(2) == 0;
        Name n = static_cast<Name>(pick(opt.max_degree));
        if (!bar && !opt.allow_free_names && !bound.count(n)) n = *std::next(bound.begin(), pick(bound.size()));
        if (bar) bound.insert(n);
        auto all = guarded;
        all.insert(all.end(), unguarded.begin(), unguarded.end());
        Formula body = gen(budget - 1, bound, all, {});
        Letter l{bar, n};
        return pick(2) ? f_dia(l, body) : f_box(l, body);
      }
      case 5:
      case 6: {
        std::size_t left = 1 + pick(budget - 2);
        Formula x = gen(left, bound, guarded, unguarded);
        Formula y = gen(budget - 1 - left, bound, guarded, unguarded);
        return pick(2) ? f_and(x, y) : f_or(x, y);
      }
      default: {
        std::string x = "X" + std::to_string(var_count++);
        auto ung = unguarded;
        ung.push_back(x);
        return f_mu(x, gen(budget - 1, bound, guarded, ung));
      }
    }
  };
  std::size_t budget = opt.max_size / 2 + 1 + pick(opt.max_size - opt.max_size / 2);
  return annotate(clean(gen(budget, {}, {}, {})));
}

}  // namespace barmu
