#include <algorithm>
#include <cassert>
#include <cmath>

#include "pltlbmc/sat.hpp"

namespace pltlbmc {

namespace {

constexpr uint8_t kFalse = 0, kTrue = 1, kUndef = 2;
constexpr uint32_t kNoReason = UINT32_MAX;

struct Clause {
  std::vector<uint32_t> lits;
  bool learnt = false;
  bool deleted = false;
  uint32_t lbd = 0;
  double act = 0;
};

struct Watcher {
  uint32_t cref;
  uint32_t blocker;
};

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

}  // namespace

struct Solver::Impl {
  std::vector<Clause> clauses;
  std::vector<std::vector<Watcher>> watches;  // by literal
  std::vector<uint8_t> assigns;                 // by var
  std::vector<int> level;
  std::vector<uint32_t> reason;
  std::vector<uint8_t> polarity;
  std::vector<double> activity;
  std::vector<uint8_t> seen;
  std::vector<uint32_t> trail;
  std::vector<size_t> trail_lim;
  size_t qhead = 0;
  bool ok = true;
  double var_inc = 1, cla_inc = 1;
  std::vector<uint8_t> model;
  std::vector<uint32_t> scratch;
  size_t num_learnts = 0;
  double max_learnts = 2000;

  // binary heap over variables by activity
  std::vector<uint32_t> heap;
  std::vector<int> heap_pos;

  uint64_t conflicts = 0, decisions = 0;

  uint8_t val(uint32_t lit) const {
    uint8_t a = assigns[lit >> 1];
    return a == kUndef ? kUndef : (a ^ (lit & 1u));
  }
  int dlevel() const { return static_cast<int>(trail_lim.size()); }

  void grow(uint32_t nv) {
    size_t n = nv + 1;
    if (assigns.size() >= n) return;
    size_t old = assigns.size();
    assigns.resize(n, kUndef);
    level.resize(n, 0);
    reason.resize(n, kNoReason);
    polarity.resize(n, 1);  // prefer false
    activity.resize(n, 0);
    seen.resize(n, 0);
    heap_pos.resize(n, -1);
    watches.resize(2 * n);
    for (size_t v = std::max<size_t>(old, 1); v < n; ++v) heap_insert(static_cast<uint32_t>(v));
  }

  // ---- heap
  bool lt(uint32_t a, uint32_t b) const { return activity[a] > activity[b]; }
  void heap_up(int i) {
    uint32_t v = heap[i];
    while (i > 0) {
      int p = (i - 1) / 2;
      if (!lt(v, heap[p])) break;
      heap[i] = heap[p];
      heap_pos[heap[i]] = i;
      i = p;
    }
    heap[i] = v;
    heap_pos[v] = i;
  }
  void heap_down(int i) {
    uint32_t v = heap[i];
    int n = static_cast<int>(heap.size());
    for (;;) {
      int c = 2 * i + 1;
      if (c >= n) break;
      if (c + 1 < n && lt(heap[c + 1], heap[c])) ++c;
      if (!lt(heap[c], v)) break;
      heap[i] = heap[c];
      heap_pos[heap[i]] = i;
      i = c;
    }
    heap[i] = v;
    heap_pos[v] = i;
  }
  void heap_insert(uint32_t v) {
    if (heap_pos[v] >= 0) return;
    heap.push_back(v);
    heap_pos[v] = static_cast<int>(heap.size()) - 1;
    heap_up(heap_pos[v]);
  }
  uint32_t heap_pop() {
    uint32_t v = heap[0];
    heap_pos[v] = -1;
    uint32_t last = heap.back();
    heap.pop_back();
    if (!heap.empty()) {
      heap[0] = last;
      heap_pos[last] = 0;
      heap_down(0);
    }
    return v;
  }

  void bump_var(uint32_t v) {
    activity[v] += var_inc;
    if (activity[v] > 1e100) {
      for (auto& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
    if (heap_pos[v] >= 0) heap_up(heap_pos[v]);
  }
  void bump_clause(Clause& c) {
    c.act += cla_inc;
    if (c.act > 1e20) {
      for (auto& cl : clauses)
        if (cl.learnt) cl.act *= 1e-20;
      cla_inc *= 1e-20;
    }
  }

  void enqueue(uint32_t lit, uint32_t from) {
    uint32_t v = lit >> 1;
    assigns[v] = (lit & 1u) ? kFalse : kTrue;
    level[v] = dlevel();
    reason[v] = from;
    trail.push_back(lit);
  }

  void cancel_until(int lvl) {
    if (dlevel() <= lvl) return;
    for (size_t i = trail.size(); i-- > trail_lim[lvl];) {
      uint32_t v = trail[i] >> 1;
      polarity[v] = trail[i] & 1u;
      assigns[v] = kUndef;
      reason[v] = kNoReason;
      heap_insert(v);
    }
    trail.resize(trail_lim[lvl]);
    trail_lim.resize(lvl);
    qhead = trail.size();
  }

  void attach(uint32_t cref) {
    Clause& c = clauses[cref];
    watches[c.lits[0]].push_back({cref, c.lits[1]});
    watches[c.lits[1]].push_back({cref, c.lits[0]});
  }

  uint32_t propagate() {
    while (qhead < trail.size()) {
      uint32_t p = trail[qhead++];
      uint32_t falsel = p ^ 1u;
      auto& ws = watches[falsel];
      size_t i = 0, j = 0, n = ws.size();
      while (i < n) {
        Watcher w = ws[i++];
        if (val(w.blocker) == kTrue) {
          ws[j++] = w;
          continue;
        }
        Clause& c = clauses[w.cref];
        auto& L = c.lits;
        if (L[0] == falsel) std::swap(L[0], L[1]);
        uint32_t first = L[0];
        if (first != w.blocker && val(first) == kTrue) {
          ws[j++] = {w.cref, first};
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < L.size(); ++k) {
          if (val(L[k]) != kFalse) {
            std::swap(L[1], L[k]);
            watches[L[1]].push_back({w.cref, first});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = {w.cref, first};
        if (val(first) == kFalse) {
          while (i < n) ws[j++] = ws[i++];
          ws.resize(j);
          qhead = trail.size();
          return w.cref;
        }
        enqueue(first, w.cref);
      }
      ws.resize(j);
    }
    return kNoReason;
  }

  bool redundant(uint32_t lit) {
    uint32_t r = reason[lit >> 1];
    if (r == kNoReason) return false;
    const auto& L = clauses[r].lits;
    for (size_t k = 1; k < L.size(); ++k) {
      uint32_t v = L[k] >> 1;
      if (!seen[v] && level[v] > 0) return false;
    }
    return true;
  }

  void analyze(uint32_t confl, std::vector<uint32_t>& out, int& bt_level, uint32_t& lbd) {
    int path = 0;
    uint32_t p = UINT32_MAX;
    out.clear();
    out.push_back(0);
    size_t idx = trail.size();
    do {
      Clause& c = clauses[confl];
      if (c.learnt) bump_clause(c);
      for (size_t k = (p == UINT32_MAX ? 0 : 1); k < c.lits.size(); ++k) {
        uint32_t q = c.lits[k];
        uint32_t v = q >> 1;
        if (!seen[v] && level[v] > 0) {
          bump_var(v);
          seen[v] = 1;
          if (level[v] >= dlevel())
            ++path;
          else
            out.push_back(q);
        }
      }
      while (!seen[trail[--idx] >> 1]) {
      }
      p = trail[idx];
      confl = reason[p >> 1];
      seen[p >> 1] = 0;
      --path;
    } while (path > 0);
    out[0] = p ^ 1u;

    // local minimisation
    size_t j = 1;
    std::vector<uint32_t> removed;
    for (size_t i = 1; i < out.size(); ++i) {
      if (redundant(out[i]))
        removed.push_back(out[i]);
      else
        out[j++] = out[i];
    }
    out.resize(j);
    for (uint32_t q : removed) seen[q >> 1] = 0;
    for (size_t i = 1; i < out.size(); ++i) seen[out[i] >> 1] = 0;

    bt_level = 0;
    if (out.size() > 1) {
      size_t mi = 1;
      for (size_t i = 2; i < out.size(); ++i)
        if (level[out[i] >> 1] > level[out[mi] >> 1]) mi = i;
      std::swap(out[1], out[mi]);
      bt_level = level[out[1] >> 1];
    }
    std::vector<int> lv;
    for (uint32_t q : out) lv.push_back(level[q >> 1]);
    std::sort(lv.begin(), lv.end());
    lbd = static_cast<uint32_t>(std::unique(lv.begin(), lv.end()) - lv.begin());
  }

  void reduce_db() {
    // only called at decision level 0: level-0 reasons are never inspected
    for (uint32_t lit : trail) reason[lit >> 1] = kNoReason;
    std::vector<uint32_t> cand;
    for (uint32_t i = 0; i < clauses.size(); ++i) {
      const Clause& c = clauses[i];
      if (c.learnt && !c.deleted && c.lbd > 2) cand.push_back(i);
    }
    std::sort(cand.begin(), cand.end(), [&](uint32_t a, uint32_t b) {
      if (clauses[a].lbd != clauses[b].lbd) return clauses[a].lbd > clauses[b].lbd;
      return clauses[a].act < clauses[b].act;
    });
    for (size_t i = 0; i < cand.size() / 2; ++i) {
      Clause& c = clauses[cand[i]];
      c.deleted = true;
      c.lits.clear();
      c.lits.shrink_to_fit();
      --num_learnts;
    }
    for (auto& w : watches) w.clear();
    for (uint32_t i = 0; i < clauses.size(); ++i)
      if (!clauses[i].deleted) attach(i);
    max_learnts *= 1.1;
  }

  uint32_t pick_branch() {
    while (!heap.empty()) {
      uint32_t v = heap_pop();
      if (assigns[v] == kUndef) {
        ++decisions;
        return 2 * v + polarity[v];
      }
    }
    return UINT32_MAX;
  }

  // Returns kTrue (sat), kFalse (unsat), kUndef (restart or budget)
  uint8_t search(int64_t nof_conflicts, const std::vector<uint32_t>& assumps, int64_t& budget) {
    std::vector<uint32_t> learnt;
    int64_t local = 0;
    for (;;) {
      uint32_t confl = propagate();
      if (confl != kNoReason) {
        ++conflicts;
        ++local;
        if (dlevel() == 0) {
          ok = false;
          return kFalse;
        }
        if (budget == 0) {
          cancel_until(0);
          return kUndef;
        }
        if (budget > 0) --budget;
        int bt;
        uint32_t lbd;
        analyze(confl, learnt, bt, lbd);
        cancel_until(bt);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          Clause c;
          c.lits = learnt;
          c.learnt = true;
          c.lbd = lbd;
          clauses.push_back(std::move(c));
          uint32_t cref = static_cast<uint32_t>(clauses.size() - 1);
          attach(cref);
          bump_clause(clauses[cref]);
          ++num_learnts;
          enqueue(learnt[0], cref);
        }
        var_inc /= 0.95;
        cla_inc /= 0.999;
      } else {
        if (nof_conflicts >= 0 && local >= nof_conflicts) {
          cancel_until(0);
          return kUndef;
        }
        uint32_t next = UINT32_MAX;
        while (dlevel() < static_cast<int>(assumps.size())) {
          uint32_t p = assumps[dlevel()];
          if (val(p) == kTrue) {
            trail_lim.push_back(trail.size());
          } else if (val(p) == kFalse) {
            return kFalse;
          } else {
            next = p;
            break;
          }
        }
        if (next == UINT32_MAX) {
          next = pick_branch();
          if (next == UINT32_MAX) return kTrue;
        }
        trail_lim.push_back(trail.size());
        enqueue(next, kNoReason);
      }
    }
  }
};

Solver::Solver() : impl_(new Impl) { impl_->grow(0); }
Solver::~Solver() { delete impl_; }

uint32_t Solver::new_var() {
  ++nvars_;
  impl_->grow(nvars_);
  return nvars_;
}

void Solver::add_clause(std::vector<Lit> lits) {
  Impl& I = *impl_;
  uint32_t top = 0;
  for (Lit l : lits) top = std::max(top, l.var());
  while (top > nvars_) new_var();
  orig_lits_.insert(orig_lits_.end(), lits.begin(), lits.end());
  orig_end_.push_back(orig_lits_.size());
  if (!I.ok) return;
  auto& c = I.scratch;
  c.clear();
  for (Lit l : lits) c.push_back(l.x);
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  size_t n = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i + 1 < c.size() && (c[i] ^ 1u) == c[i + 1]) return;  // tautology
    uint8_t v = I.val(c[i]);
    if (v == kTrue) return;
    if (v == kUndef) c[n++] = c[i];
  }
  std::vector<uint32_t> kept(c.begin(), c.begin() + n);
  if (kept.empty()) {
    I.ok = false;
    return;
  }
  if (kept.size() == 1) {
    I.enqueue(kept[0], kNoReason);
    if (I.propagate() != kNoReason) I.ok = false;
    return;
  }
  Clause cl;
  cl.lits = std::move(kept);
  I.clauses.push_back(std::move(cl));
  I.attach(static_cast<uint32_t>(I.clauses.size() - 1));
}

SolveResult Solver::solve(const std::vector<Lit>& assumptions, int64_t conflict_budget) {
  Impl& I = *impl_;
  last_assumptions_ = assumptions;
  for (Lit l : assumptions)
    while (l.var() > nvars_) new_var();
  if (!I.ok) return SolveResult::Unsat;
  std::vector<uint32_t> as;
  for (Lit l : assumptions) as.push_back(l.x);
  int64_t budget = conflict_budget < 0 ? -1 : conflict_budget;
  uint8_t st = kUndef;
  int restarts = 0;
  uint64_t c0 = I.conflicts, d0 = I.decisions;
  while (st == kUndef) {
    int64_t nof = static_cast<int64_t>(luby(2, restarts++) * 100);
    st = I.search(nof, as, budget);
    if (st == kUndef && budget == 0) break;
    if (st == kUndef && static_cast<double>(I.num_learnts) > I.max_learnts) I.reduce_db();
  }
  stats_conflicts_ += I.conflicts - c0;
  stats_decisions_ += I.decisions - d0;
  SolveResult res;
  if (st == kTrue) {
    I.model.assign(nvars_ + 1, 0);
    for (uint32_t v = 1; v <= nvars_; ++v) I.model[v] = I.assigns[v] == kTrue;
    res = SolveResult::Sat;
  } else if (st == kFalse) {
    res = SolveResult::Unsat;
  } else {
    res = SolveResult::Interrupted;
  }
  I.cancel_until(0);
  if (st == kFalse && assumptions.empty()) I.ok = false;
  return res;
}

bool Solver::value(uint32_t var) const {
  return var < impl_->model.size() && impl_->model[var];
}

}  // namespace pltlbmc
