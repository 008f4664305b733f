#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pltlbmc/model.hpp"
#include "pltlbmc/pltl.hpp"

namespace pltlbmc {

// Symbolic Buchi automaton for a PLTL formula with virtual unrolling.
// Loop oracles are shifted one state earlier than in the BMC encodings:
// ba_InLoop holds from index l-1 through k, ba_le marks the last state of
// each loop iteration.
struct TightBA {
  Formula psi = nullptr;
  SymbolicModel automaton;        // atoms are free state variables named as in psi
  std::vector<std::string> atoms; // AP(psi)
  int raw_variable_count = 0;     // sum of (delta+1) over cl(psi) plus the two oracles
};

std::string tba_var(Formula g, int d);  // ba_t<id>_<d>
std::string tba_def(Formula g, int d);  // ba_b<id>_<d>
inline const char* kTbaInLoop = "ba_InLoop";
inline const char* kTbaLe = "ba_le";

TightBA build_tight_ba(Formula psi);
// Same construction with every unrolling depth treated as 0.
TightBA build_untight_ba(Formula psi);

struct ProductError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Synchronous product sharing atomic propositions: the automaton's atom
// variables are replaced by the model's variables or defines. Fairness sets
// of both operands are kept.
SymbolicModel product(const SymbolicModel& m, const TightBA& b);

}  // namespace pltlbmc
