#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "pltlbmc/model.hpp"
#include "pltlbmc/pltl.hpp"
#include "pltlbmc/sat.hpp"

namespace pltlbmc {

enum class Role : uint8_t {
  State,       // id = variable index
  LoopSel,     // l_i
  InLoop,      // InLoop_i
  LoopExists,
  Formula,     // id = formula id
  AuxF,        // <<F psi2>>, id = psi2 id
  AuxG,        // <<G psi2>>, id = psi2 id
  AccU,        // <<Acc(psi1 U psi2)>>, id = formula id
  AccR,
  AccFair,     // id = fairness set
  Activation,  // a_k
  SimplePath,  // sp_j
};
const char* role_name(Role r);

// Proxy indices of the incremental encoding.
constexpr int kIndexE = -1;
constexpr int kIndexL = -2;

class TimedVarMap {
 public:
  struct Key {
    Role role;
    int id, i, d;
    bool operator<(const Key& o) const {
      return std::tie(role, id, i, d) < std::tie(o.role, o.id, o.i, o.d);
    }
  };

  void set(Role r, int id, int i, int d, Lit l) { m_[{r, id, i, d}] = l; }
  std::optional<Lit> get(Role r, int id, int i, int d = 0) const;
  // Effective unrolling depth of a formula; lookups above it alias to it.
  void set_depth(int formula_id, int depth) { depth_[formula_id] = depth; }
  int depth(int formula_id) const;
  std::optional<Lit> formula(Formula f, int i, int d) const;
  const std::map<Key, Lit>& entries() const { return m_; }
  // One line per mapped literal: role id i d -> signed DIMACS literal.
  void write_sidecar(std::ostream& out) const;

 private:
  std::map<Key, Lit> m_;
  std::map<int, int> depth_;
};

struct SchemeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solver, circuit builder and variable map shared by one encoding.
class BmcContext {
 public:
  explicit BmcContext(const SymbolicModel& m, bool polarity_aware = false);
  // Reuses a compiled form of m.
  BmcContext(const SymbolicModel& m, std::shared_ptr<const CompiledModel> compiled,
             bool polarity_aware = false);
  BmcContext(const BmcContext&) = delete;
  BmcContext& operator=(const BmcContext&) = delete;

  Solver solver;
  CircuitBuilder cb;
  TimedVarMap map;
  const SymbolicModel& model;

 private:
  std::shared_ptr<const CompiledModel> compiled_;

 public:
  const CompiledModel& cm;

  // State literals at index i (kIndexE allowed); allocated on first use.
  const std::vector<Lit>& state(int i);
  Lit init_at0();
  Lit trans_at(int i);  // T(s_{i-1}, s_i)
  Lit label(const std::string& atom, int i);
  Lit fair(int set, int i);
  Lit states_equal(int i, int j);

 private:
  std::map<int, std::vector<Lit>> states_;
  std::unordered_map<uint64_t, Lit> memo_;
  Lit lower(int node, int cur, int nxt);
};

// I(s_0) and T(s_{i-1}, s_i) for i = 1..k.
Lit encode_model_k(BmcContext& ctx, int k);
// l_i, InLoop_i and LoopExists per the loop constraint table.
Lit encode_loop_constraints(BmcContext& ctx, int k);

struct PltlOptions {
  std::optional<int> dmax;  // cap on the virtual unrolling depth
  bool force_stabilise = false;
};

Lit encode_ltl_fixpoint(BmcContext& ctx, Formula f, int k);
Lit encode_ltl_eventuality(BmcContext& ctx, Formula f, int k);
Lit encode_ltl_buchi(BmcContext& ctx, Formula f, int k, bool release_acceptance = true);
Lit encode_general_buchi(BmcContext& ctx, int k);
Lit encode_pltl(BmcContext& ctx, Formula f, int k, const PltlOptions& opt = {});

enum class Scheme { Fixpoint, Eventuality, Buchi, GeneralBuchi, Pltl };
const char* scheme_name(Scheme s);
Scheme parse_scheme(const std::string& s);

// Builds the scheme's encoding for bound k and asserts it.
void encode_scheme(BmcContext& ctx, Scheme s, Formula f, int k, const PltlOptions& opt = {},
                   bool buchi_release = true);

struct PltlCore;

// Incremental PLTL eventuality encoding with proxy states E and L.
class IncrementalEncoder {
 public:
  IncrementalEncoder(const SymbolicModel& m, Formula f, const PltlOptions& opt = {},
                     bool polarity_aware = false);
  ~IncrementalEncoder();

  // Adds index k; k must be bound() + 1.
  void step(int k);
  int bound() const { return k_; }
  // Witness formula at the current bound, optionally with SimplePath.
  SolveResult query_witness(bool simple_path = false, int64_t budget = -1);
  // Completeness formula (k-dependent part dropped) with SimplePath.
  SolveResult query_completeness(int64_t budget = -1);
  // Unguarded SimplePath_k over the indices added so far.
  Lit build_simple_path(int k);
  // Assumptions used by the last query kind at bound k.
  std::vector<Lit> assumptions(int k, bool witness, bool simple_path) const;

  BmcContext& context() { return *ctx_; }
  Formula formula() const { return f_; }

 private:
  std::unique_ptr<BmcContext> ctx_;
  std::unique_ptr<PltlCore> core_;
  Formula f_;
  int k_ = -1;
  std::vector<Lit> act_, sp_;
  Lit simple_path_pair(int i, int j);
};

int effective_depth(Formula g, const std::optional<int>& dmax);

}  // namespace pltlbmc
