#include "pltlbmc/l2s.hpp"

#include <algorithm>
#include <deque>

namespace pltlbmc {

std::string l2s_copy(const std::string& v) { return "l2s_copy_" + v; }
std::string l2s_acc(int m) { return "l2s_acc" + std::to_string(m); }

namespace {

Expr primed(const Expr& e) {
  switch (e->kind) {
    case EK::Var: return e_next(e->name);
    case EK::NextVar: throw ModelError(ModelErrorKind::NextOutsideTrans, "next() inside a fairness constraint");
    case EK::True:
    case EK::False: return e;
    case EK::Not: return e_not(primed(e->a));
    case EK::And: return e_and(primed(e->a), primed(e->b));
    case EK::Or: return e_or(primed(e->a), primed(e->b));
    case EK::Implies: return e_implies(primed(e->a), primed(e->b));
    case EK::Iff: return e_iff(primed(e->a), primed(e->b));
  }
  return e;
}

}  // namespace

L2SModel l2s_transform(const SymbolicModel& m, bool optimise) {
  m.validate();
  L2SModel out;
  auto& r = out.model;
  std::vector<std::string> tracked;
  auto skip = optimise ? input_vars_irrelevant_for_fairness(m) : std::set<std::string>{};
  for (const auto& v : m.vars) {
    if (skip.count(v))
      out.excluded.push_back(v);
    else
      tracked.push_back(v);
  }
  const int nacc = static_cast<int>(m.fairness.size());
  out.num_acceptance_sets = nacc;

  r.vars = m.vars;
  r.inputs = m.inputs;
  r.defines = m.defines;
  for (const auto& v : tracked) r.vars.push_back(l2s_copy(v));
  r.vars.push_back(kL2sLs);
  r.vars.push_back(kL2sInLoop);
  r.vars.push_back(kLoopClosed);
  for (int i = 0; i < nacc; ++i) r.vars.push_back(l2s_acc(i));
  for (const auto& n : r.vars)
    if (std::count(r.vars.begin(), r.vars.end(), n) > 1 || m.define(n))
      throw ModelError(ModelErrorKind::Duplicate, "name clash on '" + n + "'");

  Expr ls = e_var(kL2sLs), inloop = e_var(kL2sInLoop);
  auto state_lines = [&](bool next) {
    auto v = [&](const std::string& n) { return next ? e_next(n) : e_var(n); };
    std::vector<Expr> xs;
    Expr c = v(kLoopClosed);
    xs.push_back(e_implies(c, v(kL2sInLoop)));
    for (const auto& t : tracked) xs.push_back(e_implies(c, e_iff(v(t), v(l2s_copy(t)))));
    for (int i = 0; i < nacc; ++i) xs.push_back(e_implies(c, v(l2s_acc(i))));
    return xs;
  };

  std::vector<Expr> init{m.init, e_not(ls), e_not(inloop)};
  for (int i = 0; i < nacc; ++i) init.push_back(e_not(e_var(l2s_acc(i))));
  for (auto& x : state_lines(false)) init.push_back(x);

  std::vector<Expr> trans{m.trans};
  trans.push_back(e_iff(e_next(kL2sInLoop), e_or(inloop, e_next(kL2sLs))));
  trans.push_back(e_implies(inloop, e_not(e_next(kL2sLs))));
  for (const auto& t : tracked) {
    trans.push_back(e_implies(e_next(kL2sLs), e_iff(e_next(l2s_copy(t)), e_var(t))));
    trans.push_back(e_implies(e_not(e_next(kL2sLs)), e_iff(e_next(l2s_copy(t)), e_var(l2s_copy(t)))));
  }
  for (int i = 0; i < nacc; ++i)
    trans.push_back(e_iff(e_next(l2s_acc(i)),
                          e_or(e_var(l2s_acc(i)), e_and(e_next(kL2sInLoop), primed(m.fairness[i])))));
  for (auto& x : state_lines(true)) trans.push_back(x);

  r.init = e_and_all(init);
  r.trans = e_and_all(trans);
  return out;
}

L2SReach check_l2s_reachability(const L2SModel& l, int max_bits) {
  ExpandOptions opt;
  opt.max_bits = max_bits;
  opt.reachable_only = true;
  opt.require_total = false;
  ExplicitModel em = explicit_expand(l.model, opt);
  const int target = em.label_index(kLoopClosed);
  const int n = static_cast<int>(em.states.size());
  std::vector<int> parent(n, -2), dist(n, -1);
  std::deque<int> q;
  for (int s = 0; s < n; ++s)
    if (em.initial[s]) {
      parent[s] = -1;
      dist[s] = 0;
      q.push_back(s);
    }
  L2SReach out;
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    if (em.labels[target][s]) {
      out.reachable = true;
      out.depth = dist[s];
      for (int t = s; t >= 0; t = parent[t]) out.trace.push_back(em.states[t]);
      std::reverse(out.trace.begin(), out.trace.end());
      return out;
    }
    for (int t : em.succ[s])
      if (dist[t] < 0) {
        dist[t] = dist[s] + 1;
        parent[t] = s;
        q.push_back(t);
      }
  }
  return out;
}

}  // namespace pltlbmc
