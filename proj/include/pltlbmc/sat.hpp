#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace pltlbmc {

// Literal: variable index (>= 1) and sign. Encoded as 2*var + neg.
struct Lit {
  uint32_t x = 0;
  Lit() = default;
  static Lit make(uint32_t var, bool neg = false) {
    Lit l;
    l.x = 2 * var + (neg ? 1u : 0u);
    return l;
  }
  uint32_t var() const { return x >> 1; }
  bool neg() const { return x & 1u; }
  bool valid() const { return var() != 0; }
  Lit operator~() const {
    Lit l;
    l.x = x ^ 1u;
    return l;
  }
  bool operator==(Lit o) const { return x == o.x; }
  bool operator!=(Lit o) const { return x != o.x; }
  bool operator<(Lit o) const { return x < o.x; }
  int dimacs() const { return neg() ? -static_cast<int>(var()) : static_cast<int>(var()); }
};

enum class SolveResult { Sat, Unsat, Interrupted };

// Incremental CDCL solver: two watched literals, first-UIP learning, VSIDS,
// phase saving, Luby restarts, assumptions. Original clauses are kept verbatim
// for DIMACS export.
class Solver {
 public:
  Solver();
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  uint32_t new_var();
  uint32_t num_vars() const { return nvars_; }
  void add_clause(std::vector<Lit> lits);
  // conflict_budget < 0 means unlimited.
  SolveResult solve(const std::vector<Lit>& assumptions = {}, int64_t conflict_budget = -1);
  bool value(uint32_t var) const;  // model of last SAT answer
  bool value(Lit l) const { return value(l.var()) != l.neg(); }

  size_t num_original_clauses() const { return orig_end_.size(); }
  std::span<const Lit> original_clause(size_t i) const {
    size_t b = i == 0 ? 0 : orig_end_[i - 1];
    return {orig_lits_.data() + b, orig_end_[i] - b};
  }
  const std::vector<Lit>& last_assumptions() const { return last_assumptions_; }
  uint64_t conflicts() const { return stats_conflicts_; }
  uint64_t decisions() const { return stats_decisions_; }

 private:
  struct Impl;
  Impl* impl_;
  uint32_t nvars_ = 0;
  std::vector<Lit> orig_lits_;
  std::vector<size_t> orig_end_;
  std::vector<Lit> last_assumptions_;
  uint64_t stats_conflicts_ = 0, stats_decisions_ = 0;
};

void export_dimacs(const Solver& s, std::ostream& out, bool with_assumptions = false);
void export_dimacs(const Solver& s, const std::string& path, bool with_assumptions = false);

struct DimacsCnf {
  uint32_t nvars = 0;
  std::vector<std::vector<int>> clauses;
};
DimacsCnf parse_dimacs(std::istream& in);

struct ExternalResult {
  SolveResult result = SolveResult::Interrupted;
  std::vector<int> model;  // signed literals from `v` lines
};
// Runs `cmd <file>` on the exported CNF (with assumptions as units) and
// parses `s SATISFIABLE/UNSATISFIABLE` plus `v` lines.
ExternalResult solve_external(const Solver& s, const std::string& cmd,
                              const std::vector<Lit>& assumptions);
ExternalResult solve_external_file(const std::string& cnf_path, const std::string& cmd);

enum class GateKind : uint8_t { And, Iff, Ite };

// Circuit over solver variables with constant folding and structural hashing.
// Clauses for a gate are emitted lazily, the first time the gate is used in
// an asserted clause or assumption. In polarity-aware mode only the needed
// direction of each gate definition is emitted.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(Solver& s, bool polarity_aware = false);

  Lit true_lit() const { return true_; }
  Lit false_lit() const { return ~true_; }
  Lit input();
  Lit constant(bool b) const { return b ? true_ : ~true_; }

  Lit and_(std::vector<Lit> xs);
  Lit or_(std::vector<Lit> xs);
  Lit and_(Lit a, Lit b) { return and_(std::vector<Lit>{a, b}); }
  Lit or_(Lit a, Lit b) { return or_(std::vector<Lit>{a, b}); }
  Lit iff(Lit a, Lit b);
  Lit xor_(Lit a, Lit b) { return ~iff(a, b); }
  Lit implies(Lit a, Lit b) { return or_(~a, b); }
  Lit ite(Lit c, Lit t, Lit e);
  Lit gate(GateKind k, const std::vector<Lit>& in);

  bool is_const(Lit l) const { return l.var() == true_.var(); }
  bool is_gate(Lit l) const;

  // Adds the constraint that `l` holds; top-level conjunctions and
  // equivalences are decomposed into clauses directly.
  void assert_lit(Lit l);
  // (guard -> l), with guard an input literal.
  void assert_guarded(Lit guard, Lit l);
  void add_clause(std::vector<Lit> lits);
  // Makes the definition of `l` available to the solver (for assumptions).
  void ensure(Lit l);

  SolveResult solve(const std::vector<Lit>& assumptions = {}, int64_t budget = -1);
  Solver& solver() { return s_; }
  size_t num_gates() const { return gate_count_; }

 private:
  struct Gate {
    GateKind kind;
    std::vector<Lit> in;
    uint8_t emitted = 0;  // bit0: positive direction, bit1: negative direction
  };
  struct KeyHash {
    size_t operator()(const std::vector<uint32_t>& k) const;
  };
  Solver& s_;
  bool pg_;
  Lit true_;
  std::vector<int32_t> gate_of_var_;  // -1 for inputs
  std::vector<Gate> gates_;
  std::vector<uint32_t> gate_var_;
  std::unordered_map<std::vector<uint32_t>, Lit, KeyHash> hash_;
  size_t gate_count_ = 0;

  Lit make_gate(GateKind k, std::vector<Lit> in);
  void emit(Lit l);
  void assert_rec(Lit l, std::vector<Lit>* guard);
};

}  // namespace pltlbmc
