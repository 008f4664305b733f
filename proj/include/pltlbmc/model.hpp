#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace pltlbmc {

enum class EK { Var, NextVar, True, False, Not, And, Or, Implies, Iff };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;
struct ExprNode {
  EK kind;
  std::string name;
  Expr a, b;
};

Expr e_var(const std::string& n);
Expr e_next(const std::string& n);
Expr e_true();
Expr e_false();
Expr e_not(Expr a);
Expr e_and(Expr a, Expr b);
Expr e_or(Expr a, Expr b);
Expr e_implies(Expr a, Expr b);
Expr e_iff(Expr a, Expr b);
Expr e_and_all(const std::vector<Expr>& xs);
Expr e_or_all(const std::vector<Expr>& xs);
std::string to_string(const Expr& e);

struct SymbolicModel {
  std::vector<std::string> vars;
  std::vector<std::string> inputs;
  Expr init = e_true();
  Expr trans = e_true();
  std::vector<std::pair<std::string, Expr>> defines;
  std::vector<Expr> fairness;

  int var_index(const std::string& n) const;
  const Expr* define(const std::string& n) const;
  bool has_name(const std::string& n) const { return var_index(n) >= 0 || define(n); }
  // Throws ModelError on undefined names, cyclic defines, misplaced next().
  void validate() const;
};

enum class ModelErrorKind { Syntax, UndefinedIdentifier, CyclicDefine, NextOutsideTrans, Duplicate };

struct ModelError : std::runtime_error {
  ModelErrorKind kind;
  int line;
  ModelError(ModelErrorKind k, const std::string& msg, int line = 0);
};

struct ParsedModel {
  SymbolicModel model;
  std::optional<std::string> spec;
};

ParsedModel parse_model(const std::string& text);
ParsedModel load_model(const std::string& path);
std::string write_model(const SymbolicModel& m, const std::optional<std::string>& spec = {});

// Expression DAG with defines inlined and names resolved to variable indices.
class CompiledExpr {
 public:
  enum K : uint8_t { Const, Cur, Nxt, Not, And, Or, Implies, Iff };
  struct Node {
    K k;
    int a = -1, b = -1;  // child nodes, or variable index for Cur/Nxt, value for Const
  };
  std::vector<Node> nodes;

  bool eval(int root, uint64_t cur, uint64_t nxt) const;
  // Kleene evaluation; bits outside the known masks are unknown. 0, 1 or 2 (unknown).
  int eval3(int root, uint64_t cur, uint64_t cur_known, uint64_t nxt, uint64_t nxt_known) const;
  // Highest next-state variable index reachable from root, -1 if none.
  int max_next(int root) const;
};

// All model expressions compiled into one shared DAG.
struct CompiledModel {
  CompiledExpr dag;
  int init = -1;
  std::vector<int> trans_conjuncts;
  std::vector<int> fairness;
  std::unordered_map<std::string, int> labels;  // var or define name -> node
  int nvars = 0;

  explicit CompiledModel(const SymbolicModel& m);
  int label(const std::string& name) const;  // throws ModelError if unknown
};

struct ExplicitModel {
  int nbits = 0;
  std::vector<std::string> var_names;
  std::vector<uint64_t> states;          // valuation per state (bit j = variable j)
  std::vector<uint8_t> initial;          // per state
  std::vector<std::vector<int>> succ;
  std::vector<std::string> label_names;  // variables then defines
  std::vector<std::vector<uint8_t>> labels;  // [label][state]
  std::vector<std::vector<uint8_t>> fair;    // [set][state]

  int label_index(const std::string& name) const;
  int find_state(uint64_t valuation) const;
  size_t num_edges() const;
  std::vector<int> reachable() const;
  std::string state_name(int s) const;

 private:
  friend ExplicitModel build_explicit(const SymbolicModel&, int, bool, bool);
  std::unordered_map<uint64_t, int> index_;
};

struct TooManyBits : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TotalityError : std::runtime_error {
  uint64_t state;
  TotalityError(const std::string& msg, uint64_t s) : std::runtime_error(msg), state(s) {}
};

struct ExpandOptions {
  int max_bits = 16;
  bool reachable_only = false;
  bool require_total = true;
};

ExplicitModel explicit_expand(const SymbolicModel& m, int max_bits = 16);
ExplicitModel explicit_expand(const SymbolicModel& m, const ExpandOptions& opt);

std::set<std::string> input_vars_irrelevant_for_fairness(const SymbolicModel& m);
// Semantic transition-input check on an explicit model: flipping the variable
// in the target of any edge yields another edge.
bool is_transition_input(const ExplicitModel& em, int var);

// Symbolic model over bits b0..b{n-1} whose expansion is the given graph.
SymbolicModel symbolic_from_graph(int nbits, const std::vector<int>& initial,
                                  const std::vector<std::vector<int>>& succ,
                                  const std::vector<std::vector<int>>& fair_sets = {});

}  // namespace pltlbmc
