#pragma once

#include <string>

#include "pltlbmc/check.hpp"
#include "pltlbmc/encode.hpp"
#include "pltlbmc/model.hpp"
#include "pltlbmc/oracle.hpp"
#include "pltlbmc/pltl.hpp"

namespace pltlbmc::test {

inline const SymbolicModel& counter() {
  static const ParsedModel pm = load_model(std::string(PLTLBMC_FIXTURES) + "/counter.mod");
  return pm.model;
}

inline Formula pnf(const std::string& s) { return to_pnf(parse_formula(s)); }

inline const char* kRunning = "F (x3 & O (x4 & O x5))";

// Counter path 0 1 2 3 4 5 2 as a (6,3)-loop; explicit state index = counter value.
inline BoundedPath counter_loop(const ExplicitModel& em) {
  return BoundedPath{&em, {0, 1, 2, 3, 4, 5, 2}, 3};
}

inline bool sat_at(const SymbolicModel& m, Scheme s, Formula f, int k, const PltlOptions& o = {}) {
  BmcContext ctx(m);
  encode_scheme(ctx, s, f, k, o);
  return ctx.cb.solve() == SolveResult::Sat;
}

}  // namespace pltlbmc::test
