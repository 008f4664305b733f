#include "pltlbmc/check.hpp"

#include <sstream>

#include "pltlbmc/oracle.hpp"
#include "pltlbmc/tightba.hpp"

namespace pltlbmc {

std::string Witness::to_text() const {
  std::ostringstream out;
  for (int i = 0; i <= k(); ++i) {
    if (loop && *loop == i) out << "-- loop starts here --\n";
    out << "state " << i << ":";
    for (size_t v = 0; v < var_names.size(); ++v) out << ' ' << var_names[v] << '=' << value(i, v);
    out << '\n';
  }
  return out.str();
}

std::string Verdict::line() const {
  switch (kind) {
    case VerdictKind::Witness: return "VERDICT WITNESS k=" + std::to_string(k);
    case VerdictKind::Proved: return "VERDICT PROVED k=" + std::to_string(k);
    case VerdictKind::BoundExhausted: return "VERDICT UNKNOWN max_k=" + std::to_string(k);
  }
  return "";
}

int Verdict::exit_code() const {
  switch (kind) {
    case VerdictKind::Proved: return 0;
    case VerdictKind::Witness: return 1;
    case VerdictKind::BoundExhausted: return 2;
  }
  return 3;
}

Witness extract_witness(const std::function<bool(Lit)>& value, const TimedVarMap& map,
                        const SymbolicModel& m, int k) {
  Witness w;
  w.var_names = m.vars;
  for (int i = 0; i <= k; ++i) {
    uint64_t s = 0;
    for (size_t v = 0; v < m.vars.size(); ++v) {
      auto l = map.get(Role::State, static_cast<int>(v), i);
      if (!l) throw WitnessValidationError("state variable missing at index " + std::to_string(i));
      if (value(*l)) s |= 1ull << v;
    }
    w.states.push_back(s);
  }
  for (int i = 1; i <= k; ++i) {
    auto l = map.get(Role::LoopSel, 0, i);
    if (l && value(*l)) {
      if (w.loop) throw WitnessValidationError("more than one loop selector is true");
      w.loop = i;
    }
  }
  validate_witness(m, w);
  return w;
}

void validate_witness(const SymbolicModel& m, const Witness& w) {
  CompiledModel cm(m);
  if (w.states.empty()) throw WitnessValidationError("empty witness");
  if (!cm.dag.eval(cm.init, w.states[0], 0))
    throw WitnessValidationError("state 0 violates the initial condition");
  for (int i = 1; i <= w.k(); ++i)
    for (int c : cm.trans_conjuncts)
      if (!cm.dag.eval(c, w.states[i - 1], w.states[i]))
        throw WitnessValidationError("transition " + std::to_string(i - 1) + " -> " +
                                     std::to_string(i) + " violates TRANS");
  if (w.loop) {
    int l = *w.loop;
    if (l < 1 || l > w.k() || w.states[l - 1] != w.states[w.k()])
      throw WitnessValidationError("loop state mismatch at l=" + std::to_string(l));
  }
}

bool witness_satisfies(const SymbolicModel& m, const Witness& w, Formula psi) {
  CompiledModel cm(m);
  auto atom = [&](const std::string& a, int t) { return cm.dag.eval(cm.label(a), w.states[t], 0); };
  return eval_bounded_word(psi, w.k(), w.loop, atom);
}

namespace {

struct Runner {
  const SymbolicModel& m;
  Formula psi;
  const CheckOptions& opt;
  Verdict v;
  std::vector<int> ext_model;

  SolveResult solve(BmcContext& c, const std::vector<Lit>& as) {
    ++v.solver_calls;
    if (opt.external_solver.empty()) return c.cb.solve(as, opt.conflict_budget);
    for (Lit l : as) c.cb.ensure(l);
    auto r = solve_external(c.solver, opt.external_solver, as);
    ext_model = std::move(r.model);
    return r.result;
  }

  std::function<bool(Lit)> valuation(BmcContext& c) {
    if (opt.external_solver.empty()) return [&c](Lit l) { return c.solver.value(l); };
    std::vector<uint8_t> val(c.solver.num_vars() + 1, 0);
    for (int x : ext_model)
      if (x > 0 && x < static_cast<int>(val.size())) val[x] = 1;
    return [val = std::move(val)](Lit l) { return (l.var() < val.size() && val[l.var()]) != l.neg(); };
  }

  Verdict found(BmcContext& c, const SymbolicModel& encoded, int k) {
    Witness w = extract_witness(valuation(c), c.map, encoded, k);
    if (encoded.vars.size() != m.vars.size()) {
      for (auto& s : w.states) s &= (m.vars.size() >= 64 ? ~0ull : ((1ull << m.vars.size()) - 1));
      w.var_names = m.vars;
      if (w.loop && w.states[*w.loop - 1] != w.states[w.k()])
        throw WitnessValidationError("projected loop state mismatch");
      validate_witness(m, w);
    }
    if (opt.semantic_check && !witness_satisfies(m, w, psi))
      throw WitnessValidationError("decoded witness does not satisfy the formula");
    v.kind = VerdictKind::Witness;
    v.k = k;
    v.witness = std::move(w);
    return v;
  }

  Verdict exhausted() {
    v.kind = VerdictKind::BoundExhausted;
    v.k = opt.max_k;
    return v;
  }

  Verdict monolithic() {
    SymbolicModel prod;
    const SymbolicModel* enc = &m;
    if (opt.scheme == Scheme::GeneralBuchi && psi != mk_true()) {
      prod = product(m, opt.tight ? build_tight_ba(psi) : build_untight_ba(psi));
      enc = &prod;
    }
    PltlOptions po{opt.dmax, opt.force_stabilise};
    for (int k = 0; k <= opt.max_k; k += opt.increment) {
      BmcContext c(*enc, opt.polarity_aware);
      encode_scheme(c, opt.scheme, psi, k, po, opt.buchi_release);
      auto r = solve(c, {});
      if (r == SolveResult::Sat) return found(c, *enc, k);
    }
    return exhausted();
  }

  Verdict incremental() {
    IncrementalEncoder enc(m, psi, PltlOptions{opt.dmax, opt.force_stabilise}, opt.polarity_aware);
    auto& c = enc.context();
    const int n = opt.increment;
    if (n == 1) {
      for (int k = 0; k <= opt.max_k; ++k) {
        enc.step(k);
        if (opt.completeness && solve(c, enc.assumptions(k, false, true)) == SolveResult::Unsat) {
          v.kind = VerdictKind::Proved;
          v.k = k;
          return v;
        }
        if (solve(c, enc.assumptions(k, true, opt.completeness)) == SolveResult::Sat)
          return found(c, m, k);
      }
      return exhausted();
    }
    for (int cp = 0; cp <= opt.max_k; cp += n) {
      while (enc.bound() < cp - 1) enc.step(enc.bound() + 1);
      if (opt.completeness) {
        if (cp > 0 && solve(c, enc.assumptions(cp - 1, true, false)) == SolveResult::Sat)
          return found(c, m, cp - 1);
        enc.step(cp);
        if (solve(c, enc.assumptions(cp, false, true)) == SolveResult::Unsat) {
          v.kind = VerdictKind::Proved;
          v.k = cp;
          return v;
        }
      } else {
        enc.step(cp);
        if (solve(c, enc.assumptions(cp, true, false)) == SolveResult::Sat) return found(c, m, cp);
      }
    }
    if (opt.completeness && enc.bound() >= 0 &&
        solve(c, enc.assumptions(enc.bound(), true, false)) == SolveResult::Sat)
      return found(c, m, enc.bound());
    return exhausted();
  }
};

}  // namespace

Verdict run_bmc_witness(const SymbolicModel& m, Formula psi, const CheckOptions& opt) {
  if (opt.increment < 1) throw std::invalid_argument("increment must be at least 1");
  if (opt.max_k < 0) throw std::invalid_argument("max_k must be non-negative");
  const bool inc = opt.scheme == Scheme::Pltl && opt.incremental;
  if (opt.completeness && !inc)
    throw std::invalid_argument("completeness requires the incremental pltl scheme");
  if ((opt.scheme == Scheme::Fixpoint || opt.scheme == Scheme::Eventuality ||
       opt.scheme == Scheme::Buchi) && psi->has_past)
    throw SchemeError(std::string(scheme_name(opt.scheme)) + " encoding does not support past operators");
  for (const auto& a : atoms_of(psi))
    if (!m.has_name(a)) throw ModelError(ModelErrorKind::UndefinedIdentifier, "unknown atom '" + a + "'");
  Runner r{m, psi, opt, {}, {}};
  return inc ? r.incremental() : r.monolithic();
}

Verdict run_bmc(const SymbolicModel& m, const std::string& spec, const CheckOptions& opt) {
  return run_bmc_witness(m, to_pnf(negate(parse_formula(spec))), opt);
}

}  // namespace pltlbmc
