// Acceptance run: one PASS/FAIL line per criterion.
#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "pltlbmc/check.hpp"
#include "pltlbmc/encode.hpp"
#include "pltlbmc/gen.hpp"
#include "pltlbmc/l2s.hpp"
#include "pltlbmc/model.hpp"
#include "pltlbmc/oracle.hpp"
#include "pltlbmc/tightba.hpp"

using namespace pltlbmc;
using Clock = std::chrono::steady_clock;

namespace {

struct Config {
  uint64_t seed = 0;
  int jobs = 1;
  int models = 200;
  int formulas = 300;
  int max_k = 6;
  int exact_stride = 10;
  int cnfs = 1000;
  int external_cnfs = 200;
  std::string external;
  std::string fixtures = PLTLBMC_FIXTURES;
};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex mu;
  auto work = [&] {
    for (int i; (i = next++) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> g(mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> ts;
  for (int j = 1; j < jobs; ++j) ts.emplace_back(work);
  work();
  for (auto& t : ts) t.join();
  if (err) std::rethrow_exception(err);
}

struct Line {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Line> results;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  results.push_back({id, name, pass, detail});
  std::printf("[%s] criterion %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string pct(long ok, long n) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f%% (%ld/%ld)", n ? 100.0 * ok / n : 100.0, ok, n);
  return buf;
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

// ------------------------------------------------------------------ grid

struct Grid {
  std::vector<SymbolicModel> models;
  std::vector<std::shared_ptr<const CompiledModel>> compiled;
  std::vector<ExplicitModel> explicit_models;
  std::vector<Formula> formulas;
  std::vector<uint8_t> oracle;  // [pair][k] bounded witness exists
  int kmax = 6;

  size_t pairs() const { return models.size() * formulas.size(); }
  uint8_t at(size_t pair, int k) const { return oracle[pair * (kmax + 1) + k]; }
  std::optional<int> min_k(size_t pair) const {
    for (int k = 0; k <= kmax; ++k)
      if (at(pair, k)) return k;
    return std::nullopt;
  }
};

Grid make_grid(const Config& c) {
  Grid g;
  g.kmax = c.max_k;
  Rng rng(c.seed);
  for (int i = 0; i < c.models; ++i) g.models.push_back(random_grid_model(rng));
  for (int i = 0; i < c.formulas; ++i) {
    FormulaOptions o;
    o.future_only = i % 2 == 0;
    g.formulas.push_back(random_formula(rng, o));
  }
  for (auto& m : g.models) {
    g.compiled.push_back(std::make_shared<const CompiledModel>(m));
    g.explicit_models.push_back(explicit_expand(m));
  }
  g.oracle.assign(g.pairs() * (g.kmax + 1), 0);
  return g;
}

// Criteria 1 and 2.
void oracle_equivalence(Grid& g, const Config& c) {
  const std::vector<Scheme> future = {Scheme::Fixpoint, Scheme::Eventuality, Scheme::Buchi};
  const int nf = static_cast<int>(g.formulas.size());
  const int K = g.kmax + 1;
  // verdict[pair][scheme][k]: fixpoint, eventuality, buchi, pltl, incremental
  std::vector<int8_t> verdict(g.pairs() * 5 * K, -1);
  auto t0 = Clock::now();
  parallel_for(static_cast<int>(g.pairs()), c.jobs, [&](int p) {
    const int mi = p / nf;
    Formula f = g.formulas[p % nf];
    BoundedSearch bs = exists_witness_bounded(g.explicit_models[mi], f, g.kmax);
    for (int k = 0; k < K; ++k) g.oracle[p * K + k] = bs.sat_at[k];
    auto put = [&](int s, int k, bool v) { verdict[(static_cast<size_t>(p) * 5 + s) * K + k] = v; };
    for (int k = 0; k < K; ++k) {
      for (int s = 0; s < 3 && !f->has_past; ++s) {
        BmcContext ctx(g.models[mi], g.compiled[mi]);
        encode_scheme(ctx, future[s], f, k);
        put(s, k, ctx.cb.solve() == SolveResult::Sat);
      }
      BmcContext ctx(g.models[mi], g.compiled[mi]);
      encode_scheme(ctx, Scheme::Pltl, f, k);
      put(3, k, ctx.cb.solve() == SolveResult::Sat);
    }
    IncrementalEncoder inc(g.models[mi], f);
    for (int k = 0; k < K; ++k) {
      inc.step(k);
      put(4, k, inc.query_witness() == SolveResult::Sat);
    }
  });
  const double t1 = since(t0);

  long n1 = 0, ok1 = 0, n2f = 0, ok2f = 0, n2i = 0, ok2i = 0;
  for (size_t p = 0; p < g.pairs(); ++p) {
    auto v = [&](int s, int k) { return verdict[(p * 5 + s) * K + k]; };
    for (int k = 0; k < K; ++k) {
      const bool want = g.at(p, k);
      for (int s = 0; s < 5; ++s) {
        if (v(s, k) < 0) continue;
        ++n1;
        ok1 += (v(s, k) == want);
      }
      if (v(0, k) >= 0) {
        n2f += 3;
        ok2f += (v(0, k) == v(1, k)) + (v(1, k) == v(2, k)) + (v(0, k) == v(2, k));
      }
      ++n2i;
      ok2i += v(3, k) == v(4, k);
    }
  }
  std::ostringstream d1;
  d1 << pct(ok1, n1) << " verdicts agree with the oracle over " << g.models.size() << " models x "
     << g.formulas.size() << " formulas x k=0.." << g.kmax << "; time " << secs(t1)
     << " (limit 600 s, " << c.jobs << " job(s))";
  report(1, "oracle equivalence", ok1 == n1 && t1 < 600, d1.str());
  std::ostringstream d2;
  d2 << "future-only pairwise " << pct(ok2f, n2f) << "; incremental vs monolithic pltl " << pct(ok2i, n2i);
  report(2, "scheme agreement", ok2f == n2f && ok2i == n2i, d2.str());
}

// ------------------------------------------------------------------ 3

void running_example(const Config& c) {
  ParsedModel pm = load_model(c.fixtures + "/counter.mod");
  const std::string spec = "!(F ((x3) & O ((x4) & O (x5))))";
  std::ostringstream d;
  bool ok = true;
  for (bool inc : {true, false}) {
    CheckOptions o;
    o.incremental = inc;
    Verdict v = run_bmc(pm.model, spec, o);
    const bool hit = v.kind == VerdictKind::Witness && v.k == 6 && v.witness && v.witness->loop == 3;
    ok = ok && hit;
    d << (inc ? "incremental" : "monolithic") << " full unrolling k=" << v.k
      << " l=" << (v.witness && v.witness->loop ? std::to_string(*v.witness->loop) : "-") << "; ";
  }
  const int golden = 11;
  for (bool inc : {true, false}) {
    CheckOptions o;
    o.incremental = inc;
    o.dmax = 0;
    Verdict v = run_bmc(pm.model, spec, o);
    const bool hit = v.kind == VerdictKind::Witness && v.k == golden && v.k > 6;
    ok = ok && hit;
    d << (inc ? "incremental" : "monolithic") << " dmax=0 k=" << v.k << "; ";
  }
  d << "expected (6,3) and dmax=0 k=" << golden << " (exact)";
  report(3, "running example", ok, d.str());
}

// ------------------------------------------------------------------ 4

void unique_model(const Grid& g, const Config& c) {
  const int nf = static_cast<int>(g.formulas.size());
  const int want = 200;
  long tried = 0, unsat = 0, unrestricted_unsat = 0;
  for (size_t p = 0; p < g.pairs() && tried < want; p += 7) {
    auto k = g.min_k(p);
    if (!k) continue;
    const int mi = static_cast<int>(p / nf);
    Formula f = g.formulas[p % nf];
    for (int restricted = 1; restricted >= 0; --restricted) {
      BmcContext ctx(g.models[mi], g.compiled[mi]);
      encode_scheme(ctx, Scheme::Pltl, f, *k);
      for (auto& [key, lit] : ctx.map.entries()) ctx.cb.ensure(lit);
      if (ctx.cb.solve() != SolveResult::Sat) throw std::logic_error("grid instance not satisfiable");
      int l = 0;
      for (auto& [key, lit] : ctx.map.entries())
        if (key.role == Role::LoopSel && ctx.solver.value(lit)) l = key.i;
      std::vector<Lit> pin, block;
      for (auto& [key, lit] : ctx.map.entries()) {
        const Lit v = ctx.solver.value(lit) ? lit : ~lit;
        if (key.role == Role::State || key.role == Role::LoopSel) {
          pin.push_back(v);
          continue;
        }
        if (key.role != Role::Formula && key.role != Role::AuxF && key.role != Role::AuxG) continue;
        if (ctx.cb.is_const(lit)) continue;
        // light nodes: d > 0 before the loop, and index k+1 without a loop
        const bool light = key.i <= *k ? (key.d > 0 && (l == 0 || key.i < l)) : l == 0;
        if (restricted && light) continue;
        block.push_back(~v);
      }
      ctx.cb.add_clause(block);
      const bool u = ctx.cb.solve(pin) == SolveResult::Unsat;
      if (restricted) {
        ++tried;
        unsat += u;
      } else {
        unrestricted_unsat += u;
      }
    }
  }
  std::ostringstream d;
  d << pct(unsat, tried) << " satisfiable instances have a unique formula assignment (light nodes excluded); "
    << "unrestricted blocking " << pct(unrestricted_unsat, tried) << "; need >= 100";
  report(4, "unique model", tried >= 100 && unsat == tried, d.str());
}

// ------------------------------------------------------------------ 5

void l2s_correctness(const Config& c) {
  Rng rng(c.seed + 5);
  const int n = 120;
  long ok = 0, opt_n = 0, opt_ok = 0, reachable = 0;
  std::vector<std::string> failures;
  OracleLimits lim;
  lim.max_bits = 8;
  lim.max_k = 64;
  lim.max_paths = 50000000;
  for (int i = 0; i < n; ++i) {
    GridModelOptions go;
    go.max_fair_sets = 2;
    go.input_bit = i % 2 == 1;
    SymbolicModel m = random_grid_model(rng, go);
    ExplicitModel em = explicit_expand(m);
    auto fl = fair_lasso_search(em, lim);
    L2SReach r = check_l2s_reachability(l2s_transform(m, false));
    bool good = r.reachable == fl.has_value() && r.reachable == has_fair_cycle(em);
    if (good && fl) good = r.depth == fl->k;
    if (r.reachable) ++reachable;
    if (go.input_bit && !input_vars_irrelevant_for_fairness(m).empty()) {
      ++opt_n;
      L2SReach ro = check_l2s_reachability(l2s_transform(m, true));
      const bool same = ro.reachable == r.reachable && ro.depth == r.depth;
      opt_ok += same;
      good = good && same;
    }
    ok += good;
    if (!good && failures.size() < 3) failures.push_back("model " + std::to_string(i));
  }
  std::ostringstream d;
  d << pct(ok, n) << " models: LoopClosed reachability and BFS depth match the minimal fair lasso (" << reachable
    << " reachable); optimisation preserves verdict and depth on " << pct(opt_ok, opt_n) << " models with inputs";
  for (auto& f : failures) d << "; failed " << f;
  report(5, "l2s correctness", ok == n && opt_ok == opt_n && opt_n > 0, d.str());
}

// ------------------------------------------------------------------ 6

void completeness(const Grid& g, const Config& c) {
  const int nf = static_cast<int>(g.formulas.size());
  std::atomic<long> proved{0}, witness{0}, unknown{0}, wrong_min{0}, contradicted{0};
  std::atomic<long> exact_n{0}, exact_ok{0};
  std::mutex mu;
  std::vector<std::string> failures;
  auto fail = [&](const std::string& s) {
    std::lock_guard<std::mutex> lk(mu);
    if (failures.size() < 3) failures.push_back(s);
  };
  auto t0 = Clock::now();
  parallel_for(static_cast<int>(g.pairs()), c.jobs, [&](int p) {
    const int mi = p / nf;
    Formula f = g.formulas[p % nf];
    CheckOptions o;
    o.completeness = true;
    o.max_k = 64;
    Verdict v = run_bmc_witness(g.models[mi], f, o);
    bool violated = false;
    if (v.kind == VerdictKind::Proved) {
      ++proved;
      if (g.min_k(p)) {
        ++contradicted;
        fail("proved but oracle finds a witness: " + to_string(f));
      }
    } else if (v.kind == VerdictKind::Witness) {
      ++witness;
      violated = true;
      std::optional<int> mk = g.min_k(p);
      if (!mk && v.k > g.kmax) {
        OracleLimits lim;
        lim.max_k = v.k;
        lim.max_paths = 50000000;
        mk = exists_witness_bounded(g.explicit_models[mi], f, v.k, lim).min_k();
      }
      if (mk != v.k) {
        ++wrong_min;
        fail("witness k=" + std::to_string(v.k) + " not minimal: " + to_string(f));
      }
    } else {
      ++unknown;
      fail("no verdict by k=64: " + to_string(f));
    }
    if (c.exact_stride > 0 && p % c.exact_stride == 0 && v.kind != VerdictKind::BoundExhausted) {
      ExpandOptions eo;
      eo.max_bits = 30;
      eo.reachable_only = true;
      eo.require_total = false;
      const bool cyc = has_fair_cycle(explicit_expand(product(g.models[mi], build_tight_ba(f)), eo));
      // a fair product cycle is an infinite witness; a no-loop witness needs none
      const bool agree = violated ? (cyc || !v.witness->loop) : !cyc;
      ++exact_n;
      exact_ok += agree;
      if (!agree) fail("exact product check disagrees: " + to_string(f));
    }
  });
  const double t = since(t0);
  const long n = static_cast<long>(g.pairs());
  std::ostringstream d;
  d << n << " instances: " << proved << " proved, " << witness << " witnesses, " << unknown << " unknown; "
    << "proved vs oracle lasso enumeration contradictions " << contradicted << "; non-minimal witnesses " << wrong_min
    << "; exact product agreement " << pct(exact_ok, exact_n) << " (every " << c.exact_stride
    << "th instance); time " << secs(t) << " (limit 900 s)";
  for (auto& f : failures) d << "; " << f;
  report(6, "completeness", unknown == 0 && contradicted == 0 && wrong_min == 0 && exact_ok == exact_n && t < 900,
         d.str());
}

// ------------------------------------------------------------------ 7

void tight_ba(const Config& c) {
  Rng rng(c.seed + 7);
  const int n = 150;
  long member_ok = 0, accepted = 0, shape_ok = 0, untight_longer = 0;
  std::vector<std::string> failures;
  for (int i = 0; i < n; ++i) {
    LassoWord w = random_lasso_word(rng, 3, 6);
    FormulaOptions fo;
    Formula f = random_formula(rng, fo);
    const bool truth = LassoEvaluator(f, w.as_lasso()).holds(0);
    SymbolicModel wm = word_model(w, 3);
    SymbolicModel prod = product(wm, build_tight_ba(f));
    ExpandOptions eo;
    eo.max_bits = 30;
    eo.reachable_only = true;
    eo.require_total = false;
    const bool acc = has_fair_cycle(explicit_expand(prod, eo));
    member_ok += acc == truth;
    if (acc != truth && failures.size() < 3) failures.push_back(to_string(f) + " on " + w.to_string());
    if (!truth) continue;
    ++accepted;
    const int k = static_cast<int>(w.prefix.size() + w.loop.size());
    BmcContext ctx(prod);
    encode_scheme(ctx, Scheme::GeneralBuchi, mk_true(), k);
    bool shape = ctx.cb.solve() == SolveResult::Sat;
    if (shape) {
      Witness wt = extract_witness([&](Lit l) { return ctx.solver.value(l); }, ctx.map, prod, k);
      shape = wt.loop == static_cast<int>(w.prefix.size()) + 1;
    }
    shape_ok += shape;
    if (!shape && failures.size() < 3) failures.push_back("no (|b|+|g|)-shaped run: " + to_string(f));
    BmcContext ut(product(wm, build_untight_ba(f)));
    encode_scheme(ut, Scheme::GeneralBuchi, mk_true(), k);
    untight_longer += ut.cb.solve() != SolveResult::Sat;
  }
  std::ostringstream d;
  d << "membership matches exact evaluation on " << pct(member_ok, n) << " pairs; " << pct(shape_ok, accepted)
    << " accepted words have a shape-matching accepting run (untight automaton needs a longer run on "
    << untight_longer << ")";
  for (auto& f : failures) d << "; " << f;
  report(7, "tight automaton", member_ok == n && shape_ok == accepted && accepted > 0, d.str());
}

// ------------------------------------------------------------------ 8

// Initialised (k,l)-loops of an explicit model with k <= kmax, at most `limit`.
std::vector<BoundedPath> lasso_paths(const ExplicitModel& em, int kmax, size_t limit) {
  std::vector<BoundedPath> out;
  std::vector<int> path;
  std::function<void(int)> dfs = [&](int s) {
    if (out.size() >= limit) return;
    path.push_back(s);
    const int k = static_cast<int>(path.size()) - 1;
    for (int l = 1; l <= k; ++l)
      if (path[l - 1] == path[k] && out.size() < limit) out.push_back({&em, path, l});
    if (k < kmax)
      for (int t : em.succ[s]) dfs(t);
    path.pop_back();
  };
  for (size_t s = 0; s < em.states.size(); ++s)
    if (em.initial[s]) dfs(static_cast<int>(s));
  return out;
}

void stabilisation(const Grid& g, const Config& c) {
  const int nf = static_cast<int>(g.formulas.size());
  std::atomic<long> checks{0}, bad{0}, copies{0}, copies_bad{0};
  auto t0 = Clock::now();
  parallel_for(static_cast<int>(g.models.size()), c.jobs, [&](int mi) {
    auto paths = lasso_paths(g.explicit_models[mi], 5, 6);
    for (int fi = 0; fi < nf; ++fi) {
      Formula f = g.formulas[fi];
      auto cl = closure(f);
      for (const auto& bp : paths) {
        LassoEvaluator ev(f, path_lasso(bp));
        const int k = bp.k(), l = *bp.loop, p = k - l + 1;
        for (Formula sub : cl) {
          const int delta = past_depth(sub);
          ++copies;
          if (ev.stable_copy(sub) > delta) ++copies_bad;
          for (int64_t i = l + static_cast<int64_t>(delta) * p; i < l + (delta + 3) * p; ++i) {
            const int d = d_unrolling_index(i, k, l);
            const int64_t j = i - static_cast<int64_t>(d - delta) * p;
            ++checks;
            if (ev.at(sub, i) != ev.at(sub, j)) ++bad;
          }
        }
      }
    }
  });
  std::ostringstream d;
  d << pct(checks - bad, checks) << " positions beyond the delta-unrolling repeat with the loop period; "
    << pct(copies - copies_bad, copies) << " subformula sequences stabilise by copy delta; time " << secs(since(t0));
  report(8, "stabilisation", bad == 0 && copies_bad == 0 && checks > 0, d.str());
}

// ------------------------------------------------------------------ 9

struct Cnf {
  int n = 0;
  std::vector<std::vector<int>> clauses;
};

Cnf random_cnf(Rng& rng, int n) {
  Cnf f;
  f.n = n;
  std::uniform_int_distribution<int> var(1, n), len(1, 4), sign(0, 1);
  const int m = std::uniform_int_distribution<int>(n, 5 * n + 2)(rng);
  for (int i = 0; i < m; ++i) {
    std::vector<int> c;
    int l = len(rng);
    if (l == 4) l = 3;
    for (int j = 0; j < l; ++j) c.push_back(sign(rng) ? var(rng) : -var(rng));
    f.clauses.push_back(c);
  }
  return f;
}

bool brute_sat(const Cnf& f, const std::vector<int>& assume, size_t upto) {
  std::vector<std::pair<uint32_t, uint32_t>> masks;
  auto add = [&](const std::vector<int>& c) {
    uint32_t pos = 0, neg = 0;
    for (int l : c) (l > 0 ? pos : neg) |= 1u << (std::abs(l) - 1);
    masks.emplace_back(pos, neg);
  };
  for (size_t i = 0; i < upto; ++i) add(f.clauses[i]);
  for (int a : assume) add({a});
  for (uint32_t a = 0; a < (1u << f.n); ++a) {
    bool ok = true;
    for (auto [pos, neg] : masks)
      if (!((a & pos) | (~a & neg))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

bool model_ok(const Solver& s, const Cnf& f, size_t upto, const std::vector<int>& assume) {
  auto val = [&](int l) { return s.value(Lit::make(std::abs(l), l < 0)); };
  for (int a : assume)
    if (!val(a)) return false;
  for (size_t i = 0; i < upto; ++i) {
    bool sat = false;
    for (int l : f.clauses[i]) sat = sat || val(l);
    if (!sat) return false;
  }
  return true;
}

std::vector<Lit> lits(const std::vector<int>& c) {
  std::vector<Lit> out;
  for (int l : c) out.push_back(Lit::make(std::abs(l), l < 0));
  return out;
}

void sat_layer(const Config& c) {
  Rng rng(c.seed + 9);
  long n = 0, ok = 0, inc_n = 0, inc_ok = 0, ext_n = 0, ext_ok = 0;
  const auto tmp = std::filesystem::temp_directory_path() / ("pltlbmc_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(tmp);
  for (int i = 0; i < c.cnfs; ++i) {
    Cnf f = random_cnf(rng, 1 + i % 20);
    Solver s;
    for (auto& cl : f.clauses) s.add_clause(lits(cl));
    const bool got = s.solve() == SolveResult::Sat;
    const bool want = brute_sat(f, {}, f.clauses.size());
    ++n;
    ok += got == want && (!got || model_ok(s, f, f.clauses.size(), {}));
    if (!c.external.empty() && ext_n < c.external_cnfs) {
      const auto path = (tmp / ("f" + std::to_string(i) + ".cnf")).string();
      export_dimacs(s, path);
      ExternalResult r = solve_external_file(path, c.external);
      ++ext_n;
      ext_ok += (r.result == SolveResult::Sat) == want;
      std::filesystem::remove(path);
    }
    // incremental: clauses in three batches, random assumptions between them
    Solver si;
    size_t added = 0;
    for (int b = 1; b <= 3; ++b) {
      const size_t upto = f.clauses.size() * b / 3;
      for (; added < upto; ++added) si.add_clause(lits(f.clauses[added]));
      std::vector<int> as;
      for (int j = std::uniform_int_distribution<int>(0, 2)(rng); j > 0; --j) {
        int v = std::uniform_int_distribution<int>(1, f.n)(rng);
        as.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? v : -v);
      }
      const bool g2 = si.solve(lits(as)) == SolveResult::Sat;
      const bool w2 = brute_sat(f, as, upto);
      ++inc_n;
      inc_ok += g2 == w2 && (!g2 || model_ok(si, f, upto, as));
    }
  }
  std::filesystem::remove_all(tmp);
  std::ostringstream d;
  d << pct(ok, n) << " CNFs (1-20 vars) match exhaustive enumeration; incremental batches with assumptions "
    << pct(inc_ok, inc_n);
  if (c.external.empty())
    d << "; external solver not configured";
  else
    d << "; external solver agrees on " << pct(ext_ok, ext_n);
  report(9, "sat layer", ok == n && inc_ok == inc_n && ext_ok == ext_n && n >= 1000, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Acceptance criteria"};
  app.add_option("--seed", c.seed, "Seed");
  app.add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--models", c.models, "Grid models");
  app.add_option("--formulas", c.formulas, "Grid formulas");
  app.add_option("--exact-stride", c.exact_stride, "Exact product check on every n-th instance (0: off)");
  app.add_option("--cnfs", c.cnfs, "Random CNF instances");
  app.add_option("--external", c.external, "External DIMACS solver command");
  app.add_option("--external-cnfs", c.external_cnfs, "CNFs sent to the external solver");
  app.add_option("--fixtures", c.fixtures, "Fixture directory");
  CLI11_PARSE(app, argc, argv);

  auto t0 = Clock::now();
  try {
    std::printf("seed=%llu jobs=%d grid=%dx%d\n", static_cast<unsigned long long>(c.seed), c.jobs, c.models,
                c.formulas);
    Grid g = make_grid(c);
    oracle_equivalence(g, c);
    running_example(c);
    unique_model(g, c);
    l2s_correctness(c);
    completeness(g, c);
    tight_ba(c);
    stabilisation(g, c);
    sat_layer(c);
  } catch (const std::exception& e) {
    std::printf("[FAIL] aborted: %s\n", e.what());
    return 1;
  }
  int failed = 0;
  for (auto& r : results) failed += !r.pass;
  std::printf("%d/%zu criteria passed in %s\n", static_cast<int>(results.size()) - failed, results.size(),
              secs(since(t0)).c_str());
  return failed == 0 && results.size() == 9 ? 0 : 1;
}
