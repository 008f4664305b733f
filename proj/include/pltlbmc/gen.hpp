#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pltlbmc/model.hpp"
#include "pltlbmc/oracle.hpp"
#include "pltlbmc/pltl.hpp"

namespace pltlbmc {

using Rng = std::mt19937_64;

struct GridModelOptions {
  int min_bits = 1, max_bits = 4;
  int natoms = 3;          // defines a0..a{natoms-1} with random labelling
  int max_fair_sets = 0;   // 0..max_fair_sets acceptance sets
  bool input_bit = false;  // add a free input variable i0
};

// Random explicit graph (out-degree 1-2, 1-2 initial states) as a symbolic model.
SymbolicModel random_grid_model(Rng& rng, const GridModelOptions& opt = {});

struct FormulaOptions {
  int natoms = 3;
  int max_closure = 8;
  int max_depth = 3;
  bool future_only = false;
};

// Random PNF formula over a0..a{natoms-1} within the closure and depth bounds.
Formula random_formula(Rng& rng, const FormulaOptions& opt = {});

// Random lasso word with |prefix| + |loop| <= max_len over a0..a{natoms-1}.
LassoWord random_lasso_word(Rng& rng, int natoms = 3, int max_len = 6);

// Deterministic model whose unique path spells the word (atoms as defines).
SymbolicModel word_model(const LassoWord& w, int natoms = 3);

std::string atom_name(int j);  // a<j>

}  // namespace pltlbmc
