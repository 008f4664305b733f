#include "pltlbmc/oracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace pltlbmc {

// ---------------------------------------------------------------- words

bool LassoWord::holds(const std::string& atom, int64_t t) const {
  const auto& pos = t < static_cast<int64_t>(prefix.size())
                        ? prefix[t]
                        : loop[(t - prefix.size()) % loop.size()];
  return std::find(pos.begin(), pos.end(), atom) != pos.end();
}

Lasso LassoWord::as_lasso() const {
  if (loop.empty()) throw std::invalid_argument("lasso word needs a nonempty loop");
  Lasso w;
  w.n = static_cast<int>(prefix.size() + loop.size());
  w.loop = static_cast<int>(prefix.size());
  LassoWord copy = *this;
  w.atom = [copy](const std::string& a, int t) { return copy.holds(a, t); };
  return w;
}

std::string LassoWord::to_string() const {
  auto set = [](const std::vector<std::string>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
    return out + "}";
  };
  std::string out;
  for (auto& s : prefix) out += set(s);
  out += "(";
  for (auto& s : loop) out += set(s);
  return out + ")^w";
}

// ---------------------------------------------------------------- exact

LassoEvaluator::LassoEvaluator(Formula root, const Lasso& w)
    : root_(root), loop_(w.loop), p_(w.period()) {
  if (w.n < 1 || w.loop < 0 || w.loop >= w.n) throw std::invalid_argument("bad lasso shape");
  const int64_t l = loop_, p = p_;
  auto len = [&](int c) { return static_cast<size_t>(l + (c + 1) * p); };
  constexpr int kMaxCopies = 4096;

  for (Formula g : closure(root)) {
    Seq s;
    switch (g->op) {
      case Op::True:
      case Op::False:
        s.v.assign(len(0), g->op == Op::True);
        break;
      case Op::Atom:
      case Op::NegAtom:
        s.v.resize(len(0));
        for (size_t t = 0; t < s.v.size(); ++t)
          s.v[t] = w.atom(g->name, static_cast<int>(t)) != (g->op == Op::NegAtom);
        break;
      case Op::And:
      case Op::Or: {
        const Seq &a = seq_.at(g->a->id), &b = seq_.at(g->b->id);
        s.c = std::max(a.c, b.c);
        s.v.resize(len(s.c));
        for (size_t t = 0; t < s.v.size(); ++t)
          s.v[t] = g->op == Op::And ? (get(a, t) && get(b, t)) : (get(a, t) || get(b, t));
        break;
      }
      case Op::Next: {
        const Seq& a = seq_.at(g->a->id);
        s.c = a.c;
        s.v.resize(len(s.c));
        for (size_t t = 0; t < s.v.size(); ++t) s.v[t] = get(a, t + 1);
        break;
      }
      case Op::Until:
      case Op::Release: {
        const Seq &a = seq_.at(g->a->id), &b = seq_.at(g->b->id);
        s.c = std::max(a.c, b.c);
        const int64_t L = static_cast<int64_t>(len(s.c));
        const int64_t back = l + s.c * p;
        const bool until = g->op == Op::Until;
        s.v.assign(L, until ? 0 : 1);
        for (bool changed = true; changed;) {
          changed = false;
          for (int64_t t = L - 1; t >= 0; --t) {
            bool nx = s.v[t + 1 < L ? t + 1 : back];
            bool v = until ? (get(b, t) || (get(a, t) && nx)) : (get(b, t) && (get(a, t) || nx));
            if (v != static_cast<bool>(s.v[t])) {
              s.v[t] = v;
              changed = true;
            }
          }
        }
        break;
      }
      case Op::Prev:
      case Op::PrevZ:
      case Op::Since:
      case Op::Trigger: {
        const Seq& a = seq_.at(g->a->id);
        const Seq* b = g->b ? &seq_.at(g->b->id) : nullptr;
        const int cc = std::max(a.c, b ? b->c : 0);
        auto step = [&](int64_t t) -> bool {
          switch (g->op) {
            case Op::Prev: return t > 0 && get(a, t - 1);
            case Op::PrevZ: return t == 0 || get(a, t - 1);
            case Op::Since: return get(*b, t) || (t > 0 && get(a, t) && s.v[t - 1]);
            default: return get(*b, t) && (t == 0 || get(a, t) || s.v[t - 1]);
          }
        };
        for (int j = 0;; ++j) {
          if (j > kMaxCopies) throw std::runtime_error("past operator sequence did not stabilise");
          size_t from = s.v.size(), to = len(j);
          s.v.resize(to);
          for (size_t t = from; t < to; ++t) s.v[t] = step(static_cast<int64_t>(t));
          if (j >= 1 && j - 1 >= cc &&
              std::equal(s.v.begin() + (to - p), s.v.end(), s.v.begin() + (to - 2 * p))) {
            s.c = j - 1;
            s.v.resize(len(s.c));
            break;
          }
        }
        break;
      }
    }
    seq_.emplace(g->id, std::move(s));
  }
}

bool LassoEvaluator::get(const Seq& s, int64_t t) const {
  if (t < static_cast<int64_t>(s.v.size())) return s.v[t];
  return s.v[loop_ + s.c * p_ + (t - loop_) % p_];
}

bool LassoEvaluator::at(Formula f, int64_t t) const {
  auto it = seq_.find(f->id);
  if (it == seq_.end()) throw std::invalid_argument("formula not in evaluated closure");
  return get(it->second, t);
}

int LassoEvaluator::stable_copy(Formula f) const { return seq_.at(f->id).c; }

// ---------------------------------------------------------------- bounded

namespace {

using Table = std::unordered_map<int, std::vector<uint8_t>>;

// Evaluates over positions 0..N-1. back >= 0: position N-1 is followed by
// `back` and future operators are fixpoints on that graph. back < 0: finite
// prefix with the no-loop table.
Table eval_positions(Formula f, int N, int back, const std::function<bool(const std::string&, int)>& atom) {
  Table tab;
  for (Formula g : closure(f)) {
    std::vector<uint8_t> v(N);
    const std::vector<uint8_t>* a = g->a ? &tab.at(g->a->id) : nullptr;
    const std::vector<uint8_t>* b = g->b ? &tab.at(g->b->id) : nullptr;
    switch (g->op) {
      case Op::True: std::fill(v.begin(), v.end(), 1); break;
      case Op::False: break;
      case Op::Atom:
      case Op::NegAtom:
        for (int t = 0; t < N; ++t) v[t] = atom(g->name, t) != (g->op == Op::NegAtom);
        break;
      case Op::And:
        for (int t = 0; t < N; ++t) v[t] = (*a)[t] && (*b)[t];
        break;
      case Op::Or:
        for (int t = 0; t < N; ++t) v[t] = (*a)[t] || (*b)[t];
        break;
      case Op::Next:
        for (int t = 0; t < N; ++t) {
          int nx = t + 1 < N ? t + 1 : back;
          v[t] = nx >= 0 && (*a)[nx];
        }
        break;
      case Op::Until:
      case Op::Release: {
        const bool until = g->op == Op::Until;
        if (back < 0) {
          for (int t = N - 1; t >= 0; --t) {
            bool nx = t + 1 < N && v[t + 1];
            v[t] = until ? ((*b)[t] || ((*a)[t] && nx))
                         : ((*b)[t] && ((*a)[t] || nx));
          }
        } else {
          std::fill(v.begin(), v.end(), until ? 0 : 1);
          for (bool changed = true; changed;) {
            changed = false;
            for (int t = N - 1; t >= 0; --t) {
              bool nx = v[t + 1 < N ? t + 1 : back];
              bool x = until ? ((*b)[t] || ((*a)[t] && nx)) : ((*b)[t] && ((*a)[t] || nx));
              if (x != static_cast<bool>(v[t])) {
                v[t] = x;
                changed = true;
              }
            }
          }
        }
        break;
      }
      case Op::Prev:
        for (int t = 0; t < N; ++t) v[t] = t > 0 && (*a)[t - 1];
        break;
      case Op::PrevZ:
        for (int t = 0; t < N; ++t) v[t] = t == 0 || (*a)[t - 1];
        break;
      case Op::Since:
        for (int t = 0; t < N; ++t) v[t] = (*b)[t] || (t > 0 && (*a)[t] && v[t - 1]);
        break;
      case Op::Trigger:
        for (int t = 0; t < N; ++t) v[t] = (*b)[t] && (t == 0 || (*a)[t] || v[t - 1]);
        break;
    }
    tab.emplace(g->id, std::move(v));
  }
  return tab;
}

std::function<bool(const std::string&, int)> path_atoms(const BoundedPath& path,
                                                       std::vector<int> positions) {
  const ExplicitModel* em = path.em;
  auto cache = std::make_shared<std::unordered_map<std::string, int>>();
  return [em, cache, positions = std::move(positions)](const std::string& a, int t) {
    auto it = cache->find(a);
    if (it == cache->end()) {
      int li = em->label_index(a);
      if (li < 0) throw ModelError(ModelErrorKind::UndefinedIdentifier, "unknown atom '" + a + "'");
      it = cache->emplace(a, li).first;
    }
    return em->labels[it->second][positions[t]] != 0;
  };
}

}  // namespace

Lasso path_lasso(const BoundedPath& path) {
  if (!path.loop) throw std::invalid_argument("path has no loop");
  Lasso w;
  w.n = path.k() + 1;
  w.loop = *path.loop;
  w.atom = path_atoms(path, path.states);
  return w;
}

std::unordered_map<int, std::vector<uint8_t>> eval_bounded_all(const BoundedPath& path, Formula f) {
  const int k = path.k();
  if (!path.loop) {
    return eval_positions(f, k + 1, -1, path_atoms(path, path.states));
  }
  const int l = *path.loop;
  if (l < 1 || l > k || path.states[l - 1] != path.states[k])
    throw std::invalid_argument("invalid (k,l)-loop");
  const int p = k - l + 1, delta = past_depth(f);
  const int N = l + (delta + 1) * p;
  std::vector<int> pos(N);
  for (int t = 0; t < N; ++t) pos[t] = path.states[t < l ? t : l + (t - l) % p];
  Table full = eval_positions(f, N, l + delta * p, path_atoms(path, pos));
  for (auto& [id, v] : full) v.resize(k + 1);
  return full;
}

bool eval_bounded(const BoundedPath& path, Formula f, int i) {
  if (i < 0 || i > path.k()) throw std::out_of_range("position outside the bounded path");
  return eval_bounded_all(path, f).at(f->id)[i];
}

bool eval_bounded_word(Formula f, int k, std::optional<int> loop,
                       const std::function<bool(const std::string&, int)>& atom) {
  if (!loop) return eval_positions(f, k + 1, -1, atom).at(f->id)[0];
  const int l = *loop;
  if (l < 1 || l > k) throw std::invalid_argument("invalid (k,l)-loop");
  const int p = k - l + 1, delta = past_depth(f);
  const int N = l + (delta + 1) * p;
  auto unrolled = [&](const std::string& a, int t) { return atom(a, t < l ? t : l + (t - l) % p); };
  return eval_positions(f, N, l + delta * p, unrolled).at(f->id)[0];
}

std::optional<int> BoundedSearch::min_k() const {
  for (size_t k = 0; k < sat_at.size(); ++k)
    if (sat_at[k]) return static_cast<int>(k);
  return std::nullopt;
}

BoundedSearch exists_witness_bounded(const ExplicitModel& em, Formula f, int kmax,
                                     const OracleLimits& lim) {
  if (em.nbits > lim.max_bits)
    throw BudgetExceeded("oracle limited to " + std::to_string(lim.max_bits) + " state bits");
  if (kmax > lim.max_k) throw BudgetExceeded("oracle limited to k <= " + std::to_string(lim.max_k));
  for (const auto& a : atoms_of(f))
    if (em.label_index(a) < 0)
      throw ModelError(ModelErrorKind::UndefinedIdentifier, "unknown atom '" + a + "'");
  BoundedSearch r;
  r.sat_at.assign(kmax + 1, 0);
  r.witness.resize(kmax + 1);
  uint64_t paths = 0;
  BoundedPath bp{&em, {}, std::nullopt};

  auto done_from = [&](int k) {
    for (int j = k; j <= kmax; ++j)
      if (!r.sat_at[j]) return false;
    return true;
  };
  std::function<void()> dfs = [&]() {
    const int k = bp.k();
    if (++paths > lim.max_paths) throw BudgetExceeded("oracle path budget exceeded");
    if (!r.sat_at[k]) {
      bp.loop.reset();
      bool ok = eval_positions(f, k + 1, -1, path_atoms(bp, bp.states)).at(f->id)[0];
      for (int l = 1; !ok && l <= k; ++l) {
        if (bp.states[l - 1] != bp.states[k]) continue;
        bp.loop = l;
        ok = eval_bounded_all(bp, f).at(f->id)[0];
      }
      if (ok) {
        r.sat_at[k] = 1;
        r.witness[k] = bp;
      }
      bp.loop.reset();
    }
    if (k == kmax || done_from(k + 1)) return;
    for (int t : em.succ[bp.states.back()]) {
      bp.states.push_back(t);
      dfs();
      bp.states.pop_back();
    }
  };
  for (size_t s = 0; s < em.states.size(); ++s) {
    if (!em.initial[s]) continue;
    bp.states = {static_cast<int>(s)};
    dfs();
  }
  return r;
}

bool exists_witness_bounded_at(const ExplicitModel& em, Formula f, int k, const OracleLimits& lim) {
  return exists_witness_bounded(em, f, k, lim).sat_at[k] != 0;
}

int d_unrolling_index(int64_t i, int k, int l) {
  if (l < 1 || l > k || i < 0) throw std::invalid_argument("invalid (k,l)-loop index");
  const int64_t p = k - l + 1;
  return i < l ? 0 : static_cast<int>((i - l) / p);
}

int64_t fold_to_depth(int64_t i, int k, int l, int delta) {
  int d = d_unrolling_index(i, k, l);
  return d <= delta ? i : i - static_cast<int64_t>(d - delta) * (k - l + 1);
}

// ---------------------------------------------------------------- fairness

std::optional<FairLasso> fair_lasso_search(const ExplicitModel& em, const OracleLimits& lim) {
  const int n = static_cast<int>(em.states.size());
  const int nf = static_cast<int>(em.fair.size());
  if (nf > 16) throw BudgetExceeded("too many fairness sets");
  const uint32_t full = (1u << nf) - 1;
  auto mask_of = [&](int s) {
    uint32_t m = 0;
    for (int j = 0; j < nf; ++j)
      if (em.fair[j][s]) m |= 1u << j;
    return m;
  };
  // Shortest initialised stems.
  std::vector<int> dist(n, -1), par(n, -1);
  std::deque<int> q;
  for (int s = 0; s < n; ++s)
    if (em.initial[s]) {
      dist[s] = 0;
      q.push_back(s);
    }
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    for (int t : em.succ[s])
      if (dist[t] < 0) {
        dist[t] = dist[s] + 1;
        par[t] = s;
        q.push_back(t);
      }
  }
  std::optional<FairLasso> best;
  uint64_t work = 0;
  for (int qs = 0; qs < n; ++qs) {
    if (dist[qs] < 0) continue;
    // Shortest cycle through qs covering every fair set, BFS over (state, mask).
    const size_t W = static_cast<size_t>(n) << nf;
    std::vector<int> d(W, -1), from(W, -1);
    auto key = [&](int s, uint32_t m) { return (static_cast<size_t>(s) << nf) | m; };
    std::deque<size_t> bq;
    size_t start = key(qs, mask_of(qs));
    d[start] = 0;
    bq.push_back(start);
    int cyc = -1;
    size_t end = 0;
    while (!bq.empty() && cyc < 0) {
      size_t u = bq.front();
      bq.pop_front();
      int s = static_cast<int>(u >> nf);
      uint32_t m = static_cast<uint32_t>(u & full);
      for (int t : em.succ[s]) {
        if (++work > lim.max_paths * 8) throw BudgetExceeded("fair lasso search budget exceeded");
        uint32_t m2 = m | mask_of(t);
        if (t == qs && m2 == full) {
          cyc = d[u] + 1;
          end = u;
          break;
        }
        size_t v = key(t, m2);
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          from[v] = static_cast<int>(u);
          bq.push_back(v);
        }
      }
    }
    if (cyc < 0) continue;
    int k = dist[qs] + cyc;
    if (best && best->k <= k) continue;
    FairLasso fl;
    fl.k = k;
    fl.l = dist[qs] + 1;
    std::vector<int> stem;
    for (int s = qs; s >= 0; s = par[s]) stem.push_back(s);
    std::reverse(stem.begin(), stem.end());
    std::vector<int> loop;
    for (long u = static_cast<long>(end); u >= 0 && u != static_cast<long>(start);
         u = from[u])
      loop.push_back(static_cast<int>(static_cast<size_t>(u) >> nf));
    std::reverse(loop.begin(), loop.end());
    fl.path = stem;
    fl.path.insert(fl.path.end(), loop.begin(), loop.end());
    fl.path.push_back(qs);
    best = fl;
  }
  return best;
}

bool has_fair_cycle(const ExplicitModel& em) {
  const int n = static_cast<int>(em.states.size());
  std::vector<uint8_t> reach(n, 0);
  for (int s : em.reachable()) reach[s] = 1;
  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<uint8_t> on(n, 0);
  int counter = 0, ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (!reach[root] || index[root] >= 0) continue;
    std::vector<std::pair<int, size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on[root] = 1;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < em.succ[v].size()) {
        int w = em.succ[v][i++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        for (;;) {
          int w = stack.back();
          stack.pop_back();
          on[w] = 0;
          comp[w] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  std::vector<std::vector<int>> members(ncomp);
  for (int s = 0; s < n; ++s)
    if (comp[s] >= 0) members[comp[s]].push_back(s);
  for (auto& mem : members) {
    bool cyclic = mem.size() > 1;
    if (!cyclic)
      for (int t : em.succ[mem[0]]) cyclic |= t == mem[0];
    if (!cyclic) continue;
    bool fair = true;
    for (auto& fs : em.fair) {
      bool hit = false;
      for (int s : mem) hit |= fs[s] != 0;
      fair &= hit;
    }
    if (fair) return true;
  }
  return false;
}

}  // namespace pltlbmc
