#include "pltlbmc/encode.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <ostream>
#include <set>

namespace pltlbmc {

const char* role_name(Role r) {
  switch (r) {
    case Role::State: return "state";
    case Role::LoopSel: return "l";
    case Role::InLoop: return "inloop";
    case Role::LoopExists: return "loopexists";
    case Role::Formula: return "formula";
    case Role::AuxF: return "auxF";
    case Role::AuxG: return "auxG";
    case Role::AccU: return "accU";
    case Role::AccR: return "accR";
    case Role::AccFair: return "accFair";
    case Role::Activation: return "act";
    case Role::SimplePath: return "sp";
  }
  return "?";
}

std::optional<Lit> TimedVarMap::get(Role r, int id, int i, int d) const {
  auto it = m_.find({r, id, i, d});
  if (it == m_.end()) return std::nullopt;
  return it->second;
}

int TimedVarMap::depth(int formula_id) const {
  auto it = depth_.find(formula_id);
  return it == depth_.end() ? 0 : it->second;
}

std::optional<Lit> TimedVarMap::formula(Formula f, int i, int d) const {
  return get(Role::Formula, f->id, i, std::min(d, depth(f->id)));
}

void TimedVarMap::write_sidecar(std::ostream& out) const {
  for (const auto& [key, lit] : m_) {
    out << role_name(key.role) << ' ' << key.id << ' ';
    if (key.i == kIndexE)
      out << 'E';
    else if (key.i == kIndexL)
      out << 'L';
    else
      out << key.i;
    out << ' ' << key.d << " -> " << lit.dimacs() << '\n';
  }
}

int effective_depth(Formula g, const std::optional<int>& dmax) {
  return dmax ? std::min(*dmax, g->depth) : g->depth;
}

// ---------------------------------------------------------------- context

constexpr int kNone = INT_MIN;

BmcContext::BmcContext(const SymbolicModel& m, bool polarity_aware)
    : BmcContext(m, std::make_shared<const CompiledModel>(m), polarity_aware) {}

BmcContext::BmcContext(const SymbolicModel& m, std::shared_ptr<const CompiledModel> compiled,
                       bool polarity_aware)
    : cb(solver, polarity_aware), model(m), compiled_(std::move(compiled)), cm(*compiled_) {}

const std::vector<Lit>& BmcContext::state(int i) {
  auto it = states_.find(i);
  if (it != states_.end()) return it->second;
  std::vector<Lit> s(cm.nvars);
  for (int v = 0; v < cm.nvars; ++v) {
    s[v] = cb.input();
    map.set(Role::State, v, i, 0, s[v]);
  }
  return states_.emplace(i, std::move(s)).first->second;
}

Lit BmcContext::lower(int node, int cur, int nxt) {
  auto slot = [](int i) { return static_cast<uint64_t>(i == kNone ? 0 : i + 3) & 0xffffu; };
  const uint64_t key = (static_cast<uint64_t>(node) << 32) | (slot(cur) << 16) | slot(nxt);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const auto& n = cm.dag.nodes[node];
  Lit r;
  switch (n.k) {
    case CompiledExpr::Const: r = cb.constant(n.a != 0); break;
    case CompiledExpr::Cur: r = state(cur)[n.a]; break;
    case CompiledExpr::Nxt:
      if (nxt == kNone) throw SchemeError("next() outside a transition constraint");
      r = state(nxt)[n.a];
      break;
    case CompiledExpr::Not: r = ~lower(n.a, cur, nxt); break;
    case CompiledExpr::And: r = cb.and_(lower(n.a, cur, nxt), lower(n.b, cur, nxt)); break;
    case CompiledExpr::Or: r = cb.or_(lower(n.a, cur, nxt), lower(n.b, cur, nxt)); break;
    case CompiledExpr::Implies:
      r = cb.implies(lower(n.a, cur, nxt), lower(n.b, cur, nxt));
      break;
    case CompiledExpr::Iff: r = cb.iff(lower(n.a, cur, nxt), lower(n.b, cur, nxt)); break;
  }
  memo_.emplace(key, r);
  return r;
}

Lit BmcContext::init_at0() { return lower(cm.init, 0, kNone); }

Lit BmcContext::trans_at(int i) {
  std::vector<Lit> xs;
  for (int t : cm.trans_conjuncts) xs.push_back(lower(t, i - 1, i));
  return cb.and_(xs);
}

Lit BmcContext::label(const std::string& atom, int i) { return lower(cm.label(atom), i, kNone); }

Lit BmcContext::fair(int set, int i) { return lower(cm.fairness.at(set), i, kNone); }

Lit BmcContext::states_equal(int i, int j) {
  const auto& a = state(i);
  const auto& b = state(j);
  std::vector<Lit> xs;
  for (size_t v = 0; v < a.size(); ++v) xs.push_back(cb.iff(a[v], b[v]));
  return cb.and_(xs);
}

// ---------------------------------------------------------------- model and loop

Lit encode_model_k(BmcContext& ctx, int k) {
  std::vector<Lit> xs{ctx.init_at0()};
  ctx.state(0);
  for (int i = 1; i <= k; ++i) xs.push_back(ctx.trans_at(i));
  return ctx.cb.and_(xs);
}

namespace {

Lit loop_sel(BmcContext& ctx, int i) {
  if (auto l = ctx.map.get(Role::LoopSel, 0, i)) return *l;
  Lit l = i == 0 ? ctx.cb.false_lit() : ctx.cb.input();
  ctx.map.set(Role::LoopSel, 0, i, 0, l);
  return l;
}

Lit in_loop(BmcContext& ctx, int i) {
  if (auto l = ctx.map.get(Role::InLoop, 0, i)) return *l;
  Lit l = i == 0 ? ctx.cb.false_lit() : ctx.cb.or_(in_loop(ctx, i - 1), loop_sel(ctx, i));
  ctx.map.set(Role::InLoop, 0, i, 0, l);
  return l;
}

}  // namespace

Lit encode_loop_constraints(BmcContext& ctx, int k) {
  auto& cb = ctx.cb;
  std::vector<Lit> xs;
  loop_sel(ctx, 0);
  in_loop(ctx, 0);
  for (int i = 1; i <= k; ++i) {
    Lit l = loop_sel(ctx, i);
    xs.push_back(cb.implies(l, ctx.states_equal(i - 1, k)));
    xs.push_back(cb.implies(in_loop(ctx, i - 1), ~l));
    in_loop(ctx, i);
  }
  ctx.map.set(Role::LoopExists, 0, k, 0, in_loop(ctx, k));
  return cb.and_(xs);
}

// ---------------------------------------------------------------- formula core

struct PltlCore {
  BmcContext& c;
  Formula root;
  std::optional<int> dmax;
  bool force;
  std::vector<Formula> cl;
  std::set<int> fresh;   // indices where every subformula is a free variable
  int end;               // index standing for k in the past loop-back terms
  bool define_nontemporal = false;  // non-temporal nodes are variables defined per index

  PltlCore(BmcContext& ctx, Formula f, const PltlOptions& opt, std::set<int> fresh_, int end_)
      : c(ctx), root(f), dmax(opt.dmax), force(opt.force_stabilise), cl(closure(f)),
        fresh(std::move(fresh_)), end(end_) {
    for (Formula g : cl) c.map.set_depth(g->id, eff(g));
  }

  int eff(Formula g) const { return effective_depth(g, dmax); }

  Lit fv(Formula g, int i, int d) {
    d = std::max(0, std::min(d, eff(g)));
    if (auto l = c.map.get(Role::Formula, g->id, i, d)) return *l;
    Lit r;
    if (fresh.count(i) || is_temporal(g->op) || define_nontemporal)
      r = c.cb.input();
    else
      r = definition(g, i, d);
    c.map.set(Role::Formula, g->id, i, d, r);
    return r;
  }

  Lit definition(Formula g, int i, int d) {
    auto& cb = c.cb;
    switch (g->op) {
      case Op::True: return cb.true_lit();
      case Op::False: return cb.false_lit();
      case Op::Atom: return c.label(g->name, i);
      case Op::NegAtom: return ~c.label(g->name, i);
      case Op::And: return cb.and_(fv(g->a, i, d), fv(g->b, i, d));
      case Op::Or: return cb.or_(fv(g->a, i, d), fv(g->b, i, d));
      default: throw SchemeError("definition of a temporal node");
    }
  }

  // Value of x one step back from index i at unrolling d; `top` selects the
  // stabilisation forcing variant.
  Lit prev_term(Formula x, int i, int d, bool top) {
    if (!top && d == 0) return fv(x, i - 1, 0);
    int back = top ? d : d - 1;
    return c.cb.ite(loop_sel(c, i), fv(x, end, back), fv(x, i - 1, d));
  }

  Lit past_rhs(Formula g, int i, int d, bool top) {
    auto& cb = c.cb;
    switch (g->op) {
      case Op::Prev:
        return i == 0 ? cb.false_lit() : prev_term(g->a, i, d, top);
      case Op::PrevZ:
        return i == 0 ? cb.true_lit() : prev_term(g->a, i, d, top);
      case Op::Since:
        if (i == 0) return fv(g->b, 0, d);
        return cb.or_(fv(g->b, i, d), cb.and_(fv(g->a, i, d), prev_term(g, i, d, top)));
      case Op::Trigger:
        if (i == 0) return fv(g->b, 0, d);
        return cb.and_(fv(g->b, i, d), cb.or_(fv(g->a, i, d), prev_term(g, i, d, top)));
      default: throw SchemeError("not a past operator");
    }
  }

  Lit temporal(Formula g, int i, int d) {
    auto& cb = c.cb;
    Lit v = fv(g, i, d);
    Lit rhs;
    switch (g->op) {
      case Op::Next: rhs = fv(g->a, i + 1, d); break;
      case Op::Until:
        rhs = cb.or_(fv(g->b, i, d), cb.and_(fv(g->a, i, d), fv(g, i + 1, d)));
        break;
      case Op::Release:
        rhs = cb.and_(fv(g->b, i, d), cb.or_(fv(g->a, i, d), fv(g, i + 1, d)));
        break;
      default: rhs = past_rhs(g, i, d, false);
    }
    return cb.iff(v, rhs);
  }

  bool needs_forcing(Formula g) const {
    return is_past(g->op) && (force || eff(g) < g->depth);
  }

  // Constraints of index i for all temporal subformulas and unrollings.
  void index_constraints(int i, std::vector<Lit>& out) {
    for (Formula g : cl) {
      if (!is_temporal(g->op)) {
        if (define_nontemporal && !fresh.count(i))
          for (int d = 0; d <= eff(g); ++d) out.push_back(c.cb.iff(fv(g, i, d), definition(g, i, d)));
        continue;
      }
      for (int d = 0; d <= eff(g); ++d) out.push_back(temporal(g, i, d));
      if (i >= 1 && needs_forcing(g))
        out.push_back(c.cb.iff(fv(g, i, eff(g)), past_rhs(g, i, eff(g), true)));
    }
  }

  Lit aux_f(Formula b, int i) {
    if (auto l = c.map.get(Role::AuxF, b->id, i)) return *l;
    Lit r = i == 0 ? c.cb.false_lit()
                   : c.cb.or_(aux_f(b, i - 1), c.cb.and_(in_loop(c, i), fv(b, i, eff(b))));
    c.map.set(Role::AuxF, b->id, i, 0, r);
    return r;
  }

  Lit aux_g(Formula b, int i) {
    if (auto l = c.map.get(Role::AuxG, b->id, i)) return *l;
    Lit r = i == 0 ? c.cb.true_lit()
                   : c.cb.and_(aux_g(b, i - 1), c.cb.or_(~in_loop(c, i), fv(b, i, eff(b))));
    c.map.set(Role::AuxG, b->id, i, 0, r);
    return r;
  }

  Lit acc(Formula g, int i) {
    Role role = g->op == Op::Until ? Role::AccU : Role::AccR;
    if (auto l = c.map.get(role, g->id, i)) return *l;
    Lit r;
    if (i == 0) {
      r = c.cb.false_lit();
    } else {
      Lit hit = g->op == Op::Until ? c.cb.or_(fv(g->b, i, 0), ~fv(g, i, 0))
                                   : c.cb.or_(~fv(g->b, i, 0), fv(g, i, 0));
      r = c.cb.or_(acc(g, i - 1), c.cb.and_(in_loop(c, i), hit));
    }
    c.map.set(role, g->id, i, 0, r);
    return r;
  }
};

namespace {

void require_future(Formula f, const char* scheme) {
  if (f->has_past) throw SchemeError(std::string(scheme) + " encoding does not support past operators");
}

enum class Aux { Eventuality, Buchi, BuchiNoRelease };

Lit monolithic(BmcContext& ctx, Formula f, int k, const PltlOptions& opt, Aux aux) {
  auto& cb = ctx.cb;
  std::vector<Lit> xs{encode_model_k(ctx, k), encode_loop_constraints(ctx, k)};
  PltlCore core(ctx, f, opt, {k + 1}, k);
  Lit le = *ctx.map.get(Role::LoopExists, 0, k);
  for (int i = 0; i <= k; ++i) core.index_constraints(i, xs);
  for (Formula g : core.cl) {
    for (int d = 0; d <= core.eff(g); ++d) {
      Lit last = core.fv(g, k + 1, d);
      xs.push_back(cb.implies(~le, ~last));
      int up = std::min(d + 1, core.eff(g));
      for (int i = 1; i <= k; ++i)
        xs.push_back(cb.implies(loop_sel(ctx, i), cb.iff(last, core.fv(g, i, up))));
    }
  }
  for (Formula g : core.cl) {
    if (g->op != Op::Until && g->op != Op::Release) continue;
    if (aux == Aux::Eventuality) {
      Lit top = core.fv(g, k, core.eff(g));
      if (g->op == Op::Until)
        xs.push_back(cb.implies(le, cb.implies(top, core.aux_f(g->b, k))));
      else
        xs.push_back(cb.implies(le, cb.implies(core.aux_g(g->b, k), top)));
    } else if (g->op == Op::Until || aux == Aux::Buchi) {
      xs.push_back(cb.implies(le, core.acc(g, k)));
    }
  }
  xs.push_back(core.fv(f, 0, 0));
  return cb.and_(xs);
}

}  // namespace

Lit encode_ltl_eventuality(BmcContext& ctx, Formula f, int k) {
  require_future(f, "eventuality");
  return monolithic(ctx, f, k, {}, Aux::Eventuality);
}

Lit encode_ltl_buchi(BmcContext& ctx, Formula f, int k, bool release_acceptance) {
  require_future(f, "buchi");
  return monolithic(ctx, f, k, {}, release_acceptance ? Aux::Buchi : Aux::BuchiNoRelease);
}

Lit encode_pltl(BmcContext& ctx, Formula f, int k, const PltlOptions& opt) {
  if (opt.dmax && *opt.dmax < 0) throw SchemeError("dmax must be non-negative");
  return monolithic(ctx, f, k, opt, Aux::Eventuality);
}

Lit encode_ltl_fixpoint(BmcContext& ctx, Formula f, int k) {
  require_future(f, "fixpoint");
  auto& cb = ctx.cb;
  std::vector<Lit> xs{encode_model_k(ctx, k), encode_loop_constraints(ctx, k)};
  std::map<std::pair<int, int>, Lit> memo, amemo;

  std::function<Lit(Formula, int)> tr;
  std::function<Lit(Formula, int)> atr = [&](Formula g, int i) -> Lit {
    auto key = std::make_pair(g->id, i);
    if (auto it = amemo.find(key); it != amemo.end()) return it->second;
    Lit r;
    if (i == k)
      r = tr(g->b, k);
    else if (g->op == Op::Until)
      r = cb.or_(tr(g->b, i), cb.and_(tr(g->a, i), atr(g, i + 1)));
    else
      r = cb.and_(tr(g->b, i), cb.or_(tr(g->a, i), atr(g, i + 1)));
    amemo.emplace(key, r);
    return r;
  };
  auto via_loop = [&](auto&& term) {
    std::vector<Lit> ys;
    for (int j = 1; j <= k; ++j) ys.push_back(cb.and_(loop_sel(ctx, j), term(j)));
    return cb.or_(ys);
  };
  tr = [&](Formula g, int i) -> Lit {
    auto key = std::make_pair(g->id, i);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Lit r;
    switch (g->op) {
      case Op::True: r = cb.true_lit(); break;
      case Op::False: r = cb.false_lit(); break;
      case Op::Atom: r = ctx.label(g->name, i); break;
      case Op::NegAtom: r = ~ctx.label(g->name, i); break;
      case Op::And: r = cb.and_(tr(g->a, i), tr(g->b, i)); break;
      case Op::Or: r = cb.or_(tr(g->a, i), tr(g->b, i)); break;
      case Op::Next:
        r = i < k ? tr(g->a, i + 1) : via_loop([&](int j) { return tr(g->a, j); });
        break;
      case Op::Until:
        if (i < k)
          r = cb.or_(tr(g->b, i), cb.and_(tr(g->a, i), tr(g, i + 1)));
        else
          r = cb.or_(tr(g->b, k), cb.and_(tr(g->a, k), via_loop([&](int j) { return atr(g, j); })));
        break;
      case Op::Release:
        if (i < k)
          r = cb.and_(tr(g->b, i), cb.or_(tr(g->a, i), tr(g, i + 1)));
        else
          r = cb.and_(tr(g->b, k), cb.or_(tr(g->a, k), via_loop([&](int j) { return atr(g, j); })));
        break;
      default: throw SchemeError("fixpoint encoding does not support past operators");
    }
    memo.emplace(key, r);
    ctx.map.set(Role::Formula, g->id, i, 0, r);
    return r;
  };
  xs.push_back(tr(f, 0));
  return cb.and_(xs);
}

Lit encode_general_buchi(BmcContext& ctx, int k) {
  auto& cb = ctx.cb;
  std::vector<Lit> xs{encode_model_k(ctx, k), encode_loop_constraints(ctx, k)};
  xs.push_back(in_loop(ctx, k));
  for (int m = 0; m < static_cast<int>(ctx.cm.fairness.size()); ++m) {
    Lit a = cb.false_lit();
    ctx.map.set(Role::AccFair, m, 0, 0, a);
    for (int i = 1; i <= k; ++i) {
      a = cb.or_(a, cb.and_(in_loop(ctx, i), ctx.fair(m, i)));
      ctx.map.set(Role::AccFair, m, i, 0, a);
    }
    xs.push_back(a);
  }
  return cb.and_(xs);
}

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Fixpoint: return "fixpoint";
    case Scheme::Eventuality: return "eventuality";
    case Scheme::Buchi: return "buchi";
    case Scheme::GeneralBuchi: return "general-buchi";
    case Scheme::Pltl: return "pltl";
  }
  return "?";
}

Scheme parse_scheme(const std::string& s) {
  for (Scheme x : {Scheme::Fixpoint, Scheme::Eventuality, Scheme::Buchi, Scheme::GeneralBuchi,
                   Scheme::Pltl})
    if (s == scheme_name(x)) return x;
  throw SchemeError("unknown scheme: " + s);
}

void encode_scheme(BmcContext& ctx, Scheme s, Formula f, int k, const PltlOptions& opt,
                   bool buchi_release) {
  Lit l;
  switch (s) {
    case Scheme::Fixpoint: l = encode_ltl_fixpoint(ctx, f, k); break;
    case Scheme::Eventuality: l = encode_ltl_eventuality(ctx, f, k); break;
    case Scheme::Buchi: l = encode_ltl_buchi(ctx, f, k, buchi_release); break;
    case Scheme::GeneralBuchi: l = encode_general_buchi(ctx, k); break;
    case Scheme::Pltl: l = encode_pltl(ctx, f, k, opt); break;
  }
  ctx.cb.assert_lit(l);
}

// ---------------------------------------------------------------- incremental

IncrementalEncoder::IncrementalEncoder(const SymbolicModel& m, Formula f, const PltlOptions& opt,
                                       bool polarity_aware)
    : ctx_(std::make_unique<BmcContext>(m, polarity_aware)), f_(f) {
  if (opt.dmax && *opt.dmax < 0) throw SchemeError("dmax must be non-negative");
  core_ = std::make_unique<PltlCore>(*ctx_, f, opt, std::set<int>{kIndexE, kIndexL}, kIndexE);
  core_->define_nontemporal = true;
  ctx_->map.set(Role::LoopExists, 0, kIndexE, 0, ctx_->cb.input());
  ctx_->state(kIndexE);
}

IncrementalEncoder::~IncrementalEncoder() = default;

void IncrementalEncoder::step(int k) {
  if (k != k_ + 1)
    throw std::logic_error("step(" + std::to_string(k) + ") out of order, expected " +
                           std::to_string(k_ + 1));
  auto& c = *ctx_;
  auto& cb = c.cb;
  auto& core = *core_;
  Lit le = *c.map.get(Role::LoopExists, 0, kIndexE);
  std::vector<Lit> inv;
  c.state(k);
  if (k == 0) {
    inv.push_back(c.init_at0());
    loop_sel(c, 0);
    in_loop(c, 0);
    for (Formula g : core.cl)
      for (int d = 0; d <= core.eff(g); ++d) inv.push_back(cb.implies(~le, ~core.fv(g, kIndexL, d)));
    for (Formula g : core.cl) {
      if (g->op == Op::Until) {
        Lit fe = cb.input();
        c.map.set(Role::AuxF, g->b->id, kIndexE, 0, fe);
        inv.push_back(cb.implies(le, cb.implies(core.fv(g, kIndexE, core.eff(g)), fe)));
      } else if (g->op == Op::Release) {
        Lit ge = cb.input();
        c.map.set(Role::AuxG, g->b->id, kIndexE, 0, ge);
        inv.push_back(cb.implies(le, cb.implies(ge, core.fv(g, kIndexE, core.eff(g)))));
      }
    }
    inv.push_back(core.fv(f_, 0, 0));
  } else {
    inv.push_back(c.trans_at(k));
    Lit l = loop_sel(c, k);
    inv.push_back(cb.implies(l, c.states_equal(k - 1, kIndexE)));
    inv.push_back(cb.implies(in_loop(c, k - 1), ~l));
    in_loop(c, k);
    for (Formula g : core.cl)
      for (int d = 0; d <= core.eff(g); ++d)
        inv.push_back(cb.implies(l, cb.iff(core.fv(g, kIndexL, d), core.fv(g, k, d))));
  }
  core.index_constraints(k, inv);
  for (Lit x : inv) cb.assert_lit(x);

  Lit a = cb.input();
  c.map.set(Role::Activation, 0, k, 0, a);
  act_.push_back(a);
  std::vector<Lit> dep{cb.iff(le, in_loop(c, k)), c.states_equal(kIndexE, k)};
  for (Formula g : core.cl) {
    for (int d = 0; d <= core.eff(g); ++d) {
      dep.push_back(cb.iff(core.fv(g, kIndexE, d), core.fv(g, k, d)));
      dep.push_back(cb.iff(core.fv(g, k + 1, d), core.fv(g, kIndexL, std::min(d + 1, core.eff(g)))));
    }
    if (g->op == Op::Until)
      dep.push_back(cb.iff(*c.map.get(Role::AuxF, g->b->id, kIndexE), core.aux_f(g->b, k)));
    else if (g->op == Op::Release)
      dep.push_back(cb.iff(*c.map.get(Role::AuxG, g->b->id, kIndexE), core.aux_g(g->b, k)));
  }
  for (Lit x : dep) cb.assert_guarded(a, x);

  if (k >= 1) {
    Lit sp = cb.input();
    c.map.set(Role::SimplePath, 0, k, 0, sp);
    sp_.push_back(sp);
    for (int i = 0; i < k; ++i) cb.assert_guarded(sp, simple_path_pair(i, k));
  }
  k_ = k;
}

Lit IncrementalEncoder::simple_path_pair(int i, int j) {
  auto& c = *ctx_;
  auto& cb = c.cb;
  auto& core = *core_;
  std::vector<Lit> any;
  const auto& si = c.state(i);
  const auto& sj = c.state(j);
  for (size_t v = 0; v < si.size(); ++v) any.push_back(cb.xor_(si[v], sj[v]));
  Lit li = in_loop(c, i), lj = in_loop(c, j);
  any.push_back(cb.xor_(li, lj));
  std::vector<Lit> deep;
  for (Formula g : core.cl) {
    if (!is_temporal(g->op)) continue;
    any.push_back(cb.xor_(core.fv(g, i, 0), core.fv(g, j, 0)));
    for (int d = 1; d <= core.eff(g); ++d) deep.push_back(cb.xor_(core.fv(g, i, d), core.fv(g, j, d)));
    if (g->op == Op::Until) deep.push_back(cb.xor_(core.aux_f(g->b, i), core.aux_f(g->b, j)));
    if (g->op == Op::Release) deep.push_back(cb.xor_(core.aux_g(g->b, i), core.aux_g(g->b, j)));
  }
  any.push_back(cb.and_({li, lj, cb.or_(deep)}));
  return cb.or_(any);
}

Lit IncrementalEncoder::build_simple_path(int k) {
  if (k > k_) throw std::logic_error("simple path beyond the current bound");
  std::vector<Lit> xs;
  for (int j = 1; j <= k; ++j)
    for (int i = 0; i < j; ++i) xs.push_back(simple_path_pair(i, j));
  return ctx_->cb.and_(xs);
}

std::vector<Lit> IncrementalEncoder::assumptions(int k, bool witness, bool simple_path) const {
  std::vector<Lit> as;
  for (int j = 0; j < k; ++j) as.push_back(~act_[j]);
  as.push_back(witness ? act_[k] : ~act_[k]);
  if (simple_path)
    for (int j = 1; j <= k; ++j) as.push_back(sp_[j - 1]);
  return as;
}

SolveResult IncrementalEncoder::query_witness(bool simple_path, int64_t budget) {
  if (k_ < 0) throw std::logic_error("query before step(0)");
  return ctx_->cb.solve(assumptions(k_, true, simple_path), budget);
}

SolveResult IncrementalEncoder::query_completeness(int64_t budget) {
  if (k_ < 0) throw std::logic_error("query before step(0)");
  return ctx_->cb.solve(assumptions(k_, false, true), budget);
}

}  // namespace pltlbmc
