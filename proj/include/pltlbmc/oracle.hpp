#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pltlbmc/model.hpp"
#include "pltlbmc/pltl.hpp"

namespace pltlbmc {

// Infinite word of positions 0..n-1 where position n-1 is followed by `loop`.
struct Lasso {
  int n = 1;
  int loop = 0;
  std::function<bool(const std::string&, int)> atom;
  int period() const { return n - loop; }
};

struct LassoWord {
  std::vector<std::vector<std::string>> prefix;  // beta
  std::vector<std::vector<std::string>> loop;    // gamma, nonempty
  Lasso as_lasso() const;
  bool holds(const std::string& atom, int64_t t) const;
  std::string to_string() const;
};

// Exact PLTL semantics on a lasso. Each subformula's truth sequence is stored
// up to the first loop copy from which it repeats; that copy is found by
// direct comparison, not assumed.
class LassoEvaluator {
 public:
  LassoEvaluator(Formula root, const Lasso& w);
  bool at(Formula f, int64_t t) const;
  bool holds(int64_t t = 0) const { return at(root_, t); }
  int stable_copy(Formula f) const;

 private:
  struct Seq {
    int c = 0;
    std::vector<uint8_t> v;
  };
  Formula root_;
  int64_t loop_, p_;
  std::unordered_map<int, Seq> seq_;
  bool get(const Seq& s, int64_t t) const;
};

struct BoundedPath {
  const ExplicitModel* em = nullptr;
  std::vector<int> states;  // s_0..s_k (explicit state indices)
  std::optional<int> loop;  // l with s_{l-1} = s_k, 1 <= l <= k
  int k() const { return static_cast<int>(states.size()) - 1; }
};

// Truth of every closure element at positions 0..k of a bounded path: the
// loop case by physical unrolling to delta+1 loop copies, the no-loop case by
// the finite-prefix table.
std::unordered_map<int, std::vector<uint8_t>> eval_bounded_all(const BoundedPath& path, Formula f);
bool eval_bounded(const BoundedPath& path, Formula f, int i);
// Same semantics at position 0 over an arbitrary labelling of positions 0..k.
bool eval_bounded_word(Formula f, int k, std::optional<int> loop,
                       const std::function<bool(const std::string&, int)>& atom);

struct OracleLimits {
  int max_bits = 6;
  int max_k = 8;
  uint64_t max_paths = 2000000;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundedSearch {
  std::vector<uint8_t> sat_at;                    // index k
  std::vector<std::optional<BoundedPath>> witness;  // one per satisfied k
  std::optional<int> min_k() const;
};

// Enumerates all initialised k-paths and loop choices for k = 0..kmax.
BoundedSearch exists_witness_bounded(const ExplicitModel& em, Formula f, int kmax,
                                     const OracleLimits& lim = {});
bool exists_witness_bounded_at(const ExplicitModel& em, Formula f, int k,
                               const OracleLimits& lim = {});

// Smallest d >= 0 with i < l + (d+1)p, p = k - l + 1.
int d_unrolling_index(int64_t i, int k, int l);
// Position in the delta-unrolling with the same truth value (Prop. of stabilisation).
int64_t fold_to_depth(int64_t i, int k, int l, int delta);

struct FairLasso {
  int k = 0, l = 0;
  std::vector<int> path;  // s_0..s_k
};
// Minimal-k initialised fair (k,l)-loop.
std::optional<FairLasso> fair_lasso_search(const ExplicitModel& em, const OracleLimits& lim = {});
// Fair reachable SCC test (no length information).
bool has_fair_cycle(const ExplicitModel& em);

// Lasso induced by a (k,l)-loop path over the model's labels.
Lasso path_lasso(const BoundedPath& path);

}  // namespace pltlbmc
