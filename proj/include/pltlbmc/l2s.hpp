#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pltlbmc/model.hpp"

namespace pltlbmc {

inline const char* kLoopClosed = "LoopClosed";
inline const char* kL2sLs = "l2s_ls";
inline const char* kL2sInLoop = "l2s_InLoop";
std::string l2s_copy(const std::string& v);  // l2s_copy_<v>
std::string l2s_acc(int m);                  // l2s_acc<m>

// Safety model whose LoopClosed states are reachable iff the input model has
// an initialised fair path.
struct L2SModel {
  SymbolicModel model;                 // no fairness; target is LoopClosed
  std::vector<std::string> excluded;   // variables dropped from loop detection
  int num_acceptance_sets = 0;
};

L2SModel l2s_transform(const SymbolicModel& m, bool optimise = false);

struct L2SReach {
  bool reachable = false;
  int depth = -1;                       // index of the first LoopClosed state
  std::vector<uint64_t> trace;          // valuations s_0..s_depth over model.vars
};

// Breadth-first search over the reachable explicit expansion.
L2SReach check_l2s_reachability(const L2SModel& l, int max_bits = 24);

}  // namespace pltlbmc
