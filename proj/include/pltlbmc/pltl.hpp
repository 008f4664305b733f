#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pltlbmc {

enum class Op {
  True,
  False,
  Atom,
  NegAtom,
  And,
  Or,
  Next,
  Until,
  Release,
  Prev,   // Y
  PrevZ,  // Z
  Since,
  Trigger,
};

// Hash-consed PNF node. Structurally equal formulas are the same object,
// so pointer identity and `id` both denote the closure element.
struct FormulaNode {
  Op op;
  std::string name;  // Atom / NegAtom only
  const FormulaNode* a = nullptr;
  const FormulaNode* b = nullptr;
  int depth = 0;     // past operator depth
  int id = 0;        // stable, unique per structure
  bool has_past = false;
};
using Formula = const FormulaNode*;

Formula mk_true();
Formula mk_false();
Formula mk_atom(const std::string& name);
Formula mk_neg_atom(const std::string& name);
Formula mk(Op op, Formula a, Formula b = nullptr);

bool is_past(Op op);
bool is_future(Op op);
bool is_temporal(Op op);
bool is_binary(Op op);

int past_depth(Formula f);
// Children before parents, no duplicates, f last.
std::vector<Formula> closure(Formula f);
// Atom names occurring in f (sorted, unique).
std::vector<std::string> atoms_of(Formula f);
std::string to_string(Formula f);

enum class SOp {
  True, False, Atom, Not, And, Or, Implies, Iff,
  X, F, G, U, R, Y, Z, S, T, O, H,
};

struct SurfaceNode;
using Surface = std::shared_ptr<const SurfaceNode>;
struct SurfaceNode {
  SOp op;
  std::string name;
  std::vector<Surface> kids;
};

Surface smk(SOp op, std::vector<Surface> kids = {}, std::string name = {});
std::string to_string(const Surface& s);

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line, int column);
};

Surface parse_formula(const std::string& text);
Formula to_pnf(const Surface& s);
Surface embed(Formula f);
Surface negate(const Surface& s);

}  // namespace pltlbmc
