#include "pltlbmc/gen.hpp"

#include <algorithm>
#include <functional>

namespace pltlbmc {

std::string atom_name(int j) { return "a" + std::to_string(j); }

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Expr cube(int s, int nbits) {
  std::vector<Expr> lits;
  for (int j = 0; j < nbits; ++j) {
    Expr v = e_var("b" + std::to_string(j));
    lits.push_back(((s >> j) & 1) ? v : e_not(v));
  }
  return e_and_all(lits);
}

Expr state_set(const std::vector<int>& states, int nbits) {
  std::vector<Expr> xs;
  for (int s : states) xs.push_back(cube(s, nbits));
  return xs.empty() ? e_false() : e_or_all(xs);
}

}  // namespace

SymbolicModel random_grid_model(Rng& rng, const GridModelOptions& opt) {
  const int nbits = uniform(rng, opt.min_bits, opt.max_bits);
  const int n = 1 << nbits;
  std::vector<std::vector<int>> succ(n);
  for (auto& s : succ) {
    int deg = uniform(rng, 1, 2);
    while (static_cast<int>(s.size()) < std::min(deg, n)) {
      int t = uniform(rng, 0, n - 1);
      if (std::find(s.begin(), s.end(), t) == s.end()) s.push_back(t);
    }
    std::sort(s.begin(), s.end());
  }
  std::vector<int> init;
  int ninit = std::min(uniform(rng, 1, 2), n);
  while (static_cast<int>(init.size()) < ninit) {
    int s = uniform(rng, 0, n - 1);
    if (std::find(init.begin(), init.end(), s) == init.end()) init.push_back(s);
  }
  std::vector<std::vector<int>> fair(uniform(rng, 0, opt.max_fair_sets));
  for (auto& f : fair)
    for (int s = 0; s < n; ++s)
      if (uniform(rng, 0, 2) == 0) f.push_back(s);
  SymbolicModel m = symbolic_from_graph(nbits, init, succ, fair);
  for (int a = 0; a < opt.natoms; ++a) {
    std::vector<int> on;
    for (int s = 0; s < n; ++s)
      if (uniform(rng, 0, 1)) on.push_back(s);
    m.defines.emplace_back(atom_name(a), state_set(on, nbits));
  }
  if (opt.input_bit) {
    m.vars.push_back("i0");
    m.inputs.push_back("i0");
    // The input may drive a label but never the transition or fairness.
    if (opt.natoms > 0) m.defines.back().second = e_or(m.defines.back().second, e_var("i0"));
  }
  return m;
}

Formula random_formula(Rng& rng, const FormulaOptions& opt) {
  std::vector<Op> unary{Op::Next}, binary{Op::And, Op::Or, Op::Until, Op::Release};
  if (!opt.future_only) {
    unary.insert(unary.end(), {Op::Prev, Op::PrevZ});
    binary.insert(binary.end(), {Op::Since, Op::Trigger});
  }
  std::function<Formula(int)> gen = [&](int size) -> Formula {
    if (size <= 1) {
      int r = uniform(rng, 0, 19);
      if (r == 0) return mk_true();
      if (r == 1) return mk_false();
      std::string a = atom_name(uniform(rng, 0, opt.natoms - 1));
      return r < 12 ? mk_atom(a) : mk_neg_atom(a);
    }
    if (size == 2 || uniform(rng, 0, 3) == 0) {
      Op op = unary[uniform(rng, 0, static_cast<int>(unary.size()) - 1)];
      return mk(op, gen(size - 1));
    }
    Op op = binary[uniform(rng, 0, static_cast<int>(binary.size()) - 1)];
    int left = uniform(rng, 1, size - 2);
    return mk(op, gen(left), gen(size - 1 - left));
  };
  for (;;) {
    Formula f = gen(uniform(rng, 1, opt.max_closure));
    if (static_cast<int>(closure(f).size()) <= opt.max_closure && f->depth <= opt.max_depth) return f;
  }
}

LassoWord random_lasso_word(Rng& rng, int natoms, int max_len) {
  LassoWord w;
  int total = uniform(rng, 1, max_len);
  int plen = uniform(rng, 0, total - 1);
  auto letter = [&]() {
    std::vector<std::string> s;
    for (int a = 0; a < natoms; ++a)
      if (uniform(rng, 0, 1)) s.push_back(atom_name(a));
    return s;
  };
  for (int i = 0; i < plen; ++i) w.prefix.push_back(letter());
  for (int i = plen; i < total; ++i) w.loop.push_back(letter());
  return w;
}

SymbolicModel word_model(const LassoWord& w, int natoms) {
  const int n = static_cast<int>(w.prefix.size() + w.loop.size());
  int nbits = 1;
  while ((1 << nbits) < n) ++nbits;
  std::vector<std::vector<int>> succ(1 << nbits);
  for (int s = 0; s < (1 << nbits); ++s)
    succ[s] = {s + 1 < n ? s + 1 : static_cast<int>(w.prefix.size())};
  SymbolicModel m = symbolic_from_graph(nbits, {0}, succ);
  for (int a = 0; a < natoms; ++a) {
    std::vector<int> on;
    for (int s = 0; s < n; ++s)
      if (w.holds(atom_name(a), s)) on.push_back(s);
    m.defines.emplace_back(atom_name(a), state_set(on, nbits));
  }
  return m;
}

}  // namespace pltlbmc
