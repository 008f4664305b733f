#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pltlbmc/encode.hpp"
#include "pltlbmc/model.hpp"
#include "pltlbmc/pltl.hpp"

namespace pltlbmc {

// Lasso-shaped or finite trace over model valuations.
struct Witness {
  std::vector<std::string> var_names;
  std::vector<uint64_t> states;  // s_0..s_k, bit j = var_names[j]
  std::optional<int> loop;       // l with s_{l-1} = s_k
  int k() const { return static_cast<int>(states.size()) - 1; }
  bool value(int i, int var) const { return (states.at(i) >> var) & 1u; }
  // `state <i>: var=val ...` lines with the loop marker before state l.
  std::string to_text() const;
};

struct WitnessValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class VerdictKind { Witness, Proved, BoundExhausted };

struct Verdict {
  VerdictKind kind = VerdictKind::BoundExhausted;
  int k = 0;  // witness bound, proof bound, or max_k
  std::optional<Witness> witness;
  int solver_calls = 0;
  std::string line() const;  // VERDICT ...
  int exit_code() const;     // 0 proved, 1 witness, 2 unknown
};

struct CheckOptions {
  Scheme scheme = Scheme::Pltl;
  std::optional<int> dmax;
  bool force_stabilise = false;
  bool incremental = true;
  bool completeness = false;
  int max_k = 20;
  int increment = 1;
  bool buchi_release = true;
  bool tight = true;            // general-buchi: tight or untight automaton
  bool polarity_aware = false;
  bool semantic_check = true;   // re-evaluate the formula on the decoded witness
  std::string external_solver;  // empty: embedded solver
  int64_t conflict_budget = -1;
};

// Checks m |= spec by searching witnesses of to_pnf(!spec).
Verdict run_bmc(const SymbolicModel& m, const std::string& spec, const CheckOptions& opt = {});
// Searches witnesses of psi directly.
Verdict run_bmc_witness(const SymbolicModel& m, Formula psi, const CheckOptions& opt = {});

// Decodes s_0..s_k and the loop selector; validates init, trans and the loop.
Witness extract_witness(const std::function<bool(Lit)>& value, const TimedVarMap& map,
                        const SymbolicModel& m, int k);
void validate_witness(const SymbolicModel& m, const Witness& w);
// Bounded semantics of psi on the witness.
bool witness_satisfies(const SymbolicModel& m, const Witness& w, Formula psi);

}  // namespace pltlbmc
