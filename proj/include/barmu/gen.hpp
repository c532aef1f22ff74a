#pragma once

#include <random>

#include "barmu/formula.hpp"

namespace barmu {

struct GenOptions {
  std::size_t max_size = 8;    // node count
  std::size_t max_degree = 2;  // names drawn from the first max_degree names
  bool allow_free_names = false;
};

// Random guarded, clean, annotated formula without free fixpoint
// variables; closed in names unless allow_free_names is set.
Formula random_formula(std::mt19937_64& rng, const GenOptions& opt = {});

}  // namespace barmu
