#include "pltlbmc/tightba.hpp"

#include <algorithm>
#include <set>

namespace pltlbmc {

std::string tba_var(Formula g, int d) {
  return "ba_t" + std::to_string(g->id) + "_" + std::to_string(d);
}
std::string tba_def(Formula g, int d) {
  return "ba_b" + std::to_string(g->id) + "_" + std::to_string(d);
}

namespace {

struct Builder {
  bool tight;
  TightBA out;

  int depth(Formula g) const { return tight ? g->depth : 0; }

  // Current-state expression of |[g]|^d with aliasing above delta(g).
  Expr cur(Formula g, int d) const {
    d = std::min(d, depth(g));
    switch (g->op) {
      case Op::True: return e_true();
      case Op::False: return e_false();
      case Op::Atom: return e_var(g->name);
      case Op::NegAtom: return e_not(e_var(g->name));
      case Op::And:
      case Op::Or: return e_var(tba_def(g, d));
      default: return e_var(tba_var(g, d));
    }
  }
  Expr nxt(Formula g, int d) const {
    d = std::min(d, depth(g));
    switch (g->op) {
      case Op::True: return e_true();
      case Op::False: return e_false();
      case Op::Atom: return e_next(g->name);
      case Op::NegAtom: return e_not(e_next(g->name));
      case Op::And:
      case Op::Or: return e_next(tba_def(g, d));
      default: return e_next(tba_var(g, d));
    }
  }

  TightBA build(Formula psi) {
    out.psi = psi;
    auto& a = out.automaton;
    auto cl = closure(psi);
    out.atoms = atoms_of(psi);
    for (const auto& p : out.atoms) a.vars.push_back(p);
    a.vars.push_back(kTbaInLoop);
    a.vars.push_back(kTbaLe);
    out.raw_variable_count = 2;
    for (Formula g : cl) {
      out.raw_variable_count += depth(g) + 1;
      for (int d = 0; d <= depth(g); ++d) {
        if (is_temporal(g->op)) a.vars.push_back(tba_var(g, d));
        if (g->op == Op::And) a.defines.emplace_back(tba_def(g, d), e_and(cur(g->a, d), cur(g->b, d)));
        if (g->op == Op::Or) a.defines.emplace_back(tba_def(g, d), e_or(cur(g->a, d), cur(g->b, d)));
      }
    }

    Expr inloop = e_var(kTbaInLoop), le = e_var(kTbaLe);
    std::vector<Expr> init, trans, fair;
    trans.push_back(e_implies(inloop, e_next(kTbaInLoop)));
    init.push_back(e_implies(le, inloop));
    trans.push_back(e_implies(le, inloop));
    trans.push_back(e_implies(e_next(kTbaLe), e_next(kTbaInLoop)));

    for (Formula g : cl) {
      if (!is_temporal(g->op)) continue;
      const int top = depth(g);
      for (int d = 0; d <= top; ++d) {
        Expr guard = e_not(le);
        if (d > 0) guard = e_and(guard, e_not(e_and(e_not(inloop), e_next(kTbaInLoop))));
        const int m = std::min(d + 1, top);
        Expr in_iter, at_end;
        switch (g->op) {
          case Op::Next:
            in_iter = e_iff(cur(g, d), nxt(g->a, d));
            at_end = e_iff(cur(g, d), nxt(g->a, m));
            break;
          case Op::Until:
            in_iter = e_iff(cur(g, d), e_or(cur(g->b, d), e_and(cur(g->a, d), nxt(g, d))));
            at_end = e_iff(cur(g, d), e_or(cur(g->b, d), e_and(cur(g->a, d), nxt(g, m))));
            break;
          case Op::Release:
            in_iter = e_iff(cur(g, d), e_and(cur(g->b, d), e_or(cur(g->a, d), nxt(g, d))));
            at_end = e_iff(cur(g, d), e_and(cur(g->b, d), e_or(cur(g->a, d), nxt(g, m))));
            break;
          case Op::Prev:
          case Op::PrevZ:
            in_iter = e_iff(nxt(g, d), cur(g->a, d));
            at_end = e_iff(nxt(g, m), cur(g->a, d));
            break;
          case Op::Since:
            in_iter = e_iff(nxt(g, d), e_or(nxt(g->b, d), e_and(nxt(g->a, d), cur(g, d))));
            at_end = e_iff(nxt(g, m), e_or(nxt(g->b, m), e_and(nxt(g->a, m), cur(g, d))));
            break;
          case Op::Trigger:
            in_iter = e_iff(nxt(g, d), e_and(nxt(g->b, d), e_or(nxt(g->a, d), cur(g, d))));
            at_end = e_iff(nxt(g, m), e_and(nxt(g->b, m), e_or(nxt(g->a, m), cur(g, d))));
            break;
          default: break;
        }
        trans.push_back(e_implies(guard, in_iter));
        trans.push_back(e_implies(le, at_end));
      }
      switch (g->op) {
        case Op::Prev: init.push_back(e_not(cur(g, 0))); break;
        case Op::PrevZ: init.push_back(cur(g, 0)); break;
        case Op::Since:
        case Op::Trigger: init.push_back(e_iff(cur(g, 0), cur(g->b, 0))); break;
        case Op::Until: fair.push_back(e_or(e_not(cur(g, top)), cur(g->b, top))); break;
        case Op::Release: fair.push_back(e_or(cur(g, top), e_not(cur(g->b, top)))); break;
        default: break;
      }
    }
    init.push_back(cur(psi, 0));
    fair.push_back(le);
    a.init = e_and_all(init);
    a.trans = e_and_all(trans);
    a.fairness = fair;
    return out;
  }
};

}  // namespace

TightBA build_tight_ba(Formula psi) { return Builder{true, {}}.build(psi); }
TightBA build_untight_ba(Formula psi) { return Builder{false, {}}.build(psi); }

SymbolicModel product(const SymbolicModel& m, const TightBA& b) {
  for (const auto& p : b.atoms)
    if (!m.has_name(p)) throw ProductError("atom '" + p + "' is not a model variable or define");
  std::set<std::string> atoms(b.atoms.begin(), b.atoms.end());
  SymbolicModel r = m;
  for (const auto& v : b.automaton.vars) {
    if (atoms.count(v)) continue;
    if (m.has_name(v)) throw ProductError("name clash on '" + v + "'");
    r.vars.push_back(v);
  }
  for (const auto& d : b.automaton.defines) {
    if (m.has_name(d.first)) throw ProductError("name clash on '" + d.first + "'");
    r.defines.push_back(d);
  }
  r.init = e_and(m.init, b.automaton.init);
  r.trans = e_and(m.trans, b.automaton.trans);
  for (const auto& f : b.automaton.fairness) r.fairness.push_back(f);
  return r;
}

}  // namespace pltlbmc
