#include <doctest.h>

#include <random>
#include <sstream>

#include "pltlbmc/sat.hpp"

using namespace pltlbmc;

namespace {

Lit L(int d) { return Lit::make(std::abs(d), d < 0); }

std::vector<Lit> C(std::initializer_list<int> ds) {
  std::vector<Lit> out;
  for (int d : ds) out.push_back(L(d));
  return out;
}

bool brute(int n, const std::vector<std::vector<int>>& cls, const std::vector<int>& as = {}) {
  for (uint32_t a = 0; a < (1u << n); ++a) {
    auto v = [&](int l) { return (((a >> (std::abs(l) - 1)) & 1u) != 0) == (l > 0); };
    bool ok = std::all_of(as.begin(), as.end(), v);
    for (size_t i = 0; ok && i < cls.size(); ++i) ok = std::any_of(cls[i].begin(), cls[i].end(), v);
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("constant folding and hashing") {
  Solver s;
  CircuitBuilder cb(s);
  Lit x = cb.input(), y = cb.input();
  CHECK(cb.and_(x, cb.true_lit()) == x);
  CHECK(cb.and_(x, cb.false_lit()) == cb.false_lit());
  CHECK(cb.or_(x, cb.true_lit()) == cb.true_lit());
  CHECK(cb.iff(x, x) == cb.true_lit());
  CHECK(cb.iff(x, ~x) == cb.false_lit());
  CHECK(cb.and_(x, ~x) == cb.false_lit());
  CHECK(cb.and_(x, y) == cb.and_(y, x));
  CHECK(cb.ite(cb.true_lit(), x, y) == x);
  CHECK(cb.ite(cb.false_lit(), x, y) == y);
}

TEST_CASE("gate semantics by truth table") {
  for (bool polarity : {false, true}) {
    for (int row = 0; row < 8; ++row) {
      const bool c = row & 1, a = row & 2, b = row & 4;
      Solver s;
      CircuitBuilder cb(s, polarity);
      Lit vc = cb.input(), va = cb.input(), vb = cb.input();
      const std::vector<Lit> pin = {c ? vc : ~vc, a ? va : ~va, b ? vb : ~vb};
      struct G {
        Lit out;
        bool want;
      };
      const std::vector<G> gates = {{cb.ite(vc, va, vb), c ? a : b},
                                    {cb.and_({vc, va, vb}), c && a && b},
                                    {cb.or_({vc, va, vb}), c || a || b},
                                    {cb.iff(va, vb), a == b},
                                    {cb.xor_(va, vb), a != b},
                                    {cb.implies(va, vb), !a || b}};
      for (const G& g : gates) {
        std::vector<Lit> as = pin;
        as.push_back(g.want ? g.out : ~g.out);
        CHECK(cb.solve(as) == SolveResult::Sat);
        as.back() = ~as.back();
        CHECK(cb.solve(as) == SolveResult::Unsat);
      }
    }
  }
}

TEST_CASE("solve basics") {
  Solver s;
  CHECK(s.solve() == SolveResult::Sat);
  s.add_clause(C({-1}));
  CHECK(s.solve(C({1})) == SolveResult::Unsat);
  CHECK(s.solve() == SolveResult::Sat);
  CHECK_FALSE(s.value(1));
  s.add_clause({});
  CHECK(s.solve() == SolveResult::Unsat);
}

TEST_CASE("pigeonhole 4 into 3 is unsatisfiable") {
  Solver s;
  auto p = [](int i, int h) { return 3 * i + h + 1; };
  for (int i = 0; i < 4; ++i) s.add_clause(C({p(i, 0), p(i, 1), p(i, 2)}));
  for (int h = 0; h < 3; ++h)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) s.add_clause(C({-p(i, h), -p(j, h)}));
  CHECK(s.solve() == SolveResult::Unsat);
}

TEST_CASE("conflict budget interrupts") {
  Solver s;
  auto p = [](int i, int h) { return 8 * i + h + 1; };
  for (int i = 0; i < 9; ++i) {
    std::vector<Lit> c;
    for (int h = 0; h < 8; ++h) c.push_back(L(p(i, h)));
    s.add_clause(c);
  }
  for (int h = 0; h < 8; ++h)
    for (int i = 0; i < 9; ++i)
      for (int j = i + 1; j < 9; ++j) s.add_clause(C({-p(i, h), -p(j, h)}));
  CHECK(s.solve({}, 10) == SolveResult::Interrupted);
}

TEST_CASE("DIMACS export") {
  Solver e;
  std::ostringstream o1;
  export_dimacs(e, o1);
  CHECK(o1.str() == "p cnf 0 0\n");
  Solver s;
  s.add_clause(C({1, -2}));
  std::ostringstream o2;
  export_dimacs(s, o2);
  CHECK(o2.str() == "p cnf 2 1\n1 -2 0\n");
  s.solve(C({2}));
  std::ostringstream o3;
  export_dimacs(s, o3, true);
  CHECK(o3.str() == "p cnf 2 2\n1 -2 0\n2 0\n");
  std::istringstream in("c comment\np cnf 3 2\n1 -3 0\n2\n3 0\n");
  DimacsCnf cnf = parse_dimacs(in);
  CHECK(cnf.nvars == 3);
  CHECK(cnf.clauses == std::vector<std::vector<int>>{{1, -3}, {2, 3}});
}

TEST_CASE("property: random CNFs match enumeration") {
  std::mt19937 rng(7);
  for (int it = 0; it < 400; ++it) {
    const int n = 1 + it % 12;
    std::vector<std::vector<int>> cls;
    Solver s;
    for (int c = 0, m = 1 + rng() % (5 * n); c < m; ++c) {
      std::vector<int> cl;
      for (int j = 0, len = 1 + rng() % 3; j < len; ++j) cl.push_back((rng() % 2 ? 1 : -1) * (1 + int(rng() % n)));
      cls.push_back(cl);
      std::vector<Lit> ls;
      for (int d : cl) ls.push_back(L(d));
      s.add_clause(ls);
    }
    const bool got = s.solve() == SolveResult::Sat;
    REQUIRE(got == brute(n, cls));
    if (got)
      for (auto& cl : cls) CHECK(std::any_of(cl.begin(), cl.end(), [&](int d) { return s.value(L(d)); }));
  }
}

TEST_CASE("property: incremental use stays sound") {
  std::mt19937 rng(9);
  for (int it = 0; it < 3000; ++it) {
    const int n = 3 + rng() % 6;
    Solver s;
    std::vector<std::vector<int>> cls;
    bool was_unsat = false;
    for (int round = 0; round < 4; ++round) {
      for (int c = 0, m = rng() % (2 * n); c < m; ++c) {
        std::vector<int> cl;
        for (int j = 0, len = 1 + rng() % 3; j < len; ++j) cl.push_back((rng() % 2 ? 1 : -1) * (1 + int(rng() % n)));
        cls.push_back(cl);
        std::vector<Lit> ls;
        for (int d : cl) ls.push_back(L(d));
        s.add_clause(ls);
      }
      std::vector<int> as;
      for (int j = 0, na = rng() % 3; j < na; ++j) as.push_back((rng() % 2 ? 1 : -1) * (1 + int(rng() % n)));
      std::vector<Lit> las;
      for (int d : as) las.push_back(L(d));
      const bool got = s.solve(las) == SolveResult::Sat;
      REQUIRE(got == brute(n, cls, as));
      if (as.empty()) {
        CHECK(!(was_unsat && got));
        was_unsat = was_unsat || !got;
      }
    }
  }
}

TEST_CASE("level-zero conflict under assumptions is remembered") {
  Solver s;
  for (auto c : {C({2, 1}), C({2, -3}), C({-3, 1})}) s.add_clause(c);
  CHECK(s.solve(C({2})) == SolveResult::Sat);
  for (auto c : {C({2, -1}), C({2, 3}), C({1, 3}), C({3, 2}), C({-2, -1})}) s.add_clause(c);
  CHECK(s.solve(C({2, 3})) == SolveResult::Unsat);
  CHECK(s.solve() == SolveResult::Unsat);
}

TEST_CASE("property: Tseitin lowering is equisatisfiable and projective") {
  std::mt19937 rng(5);
  for (int it = 0; it < 200; ++it) {
    Solver s;
    CircuitBuilder cb(s, it % 2 == 1);
    std::vector<Lit> in;
    for (int i = 0; i < 4; ++i) in.push_back(cb.input());
    std::vector<Lit> nodes = in;
    for (int g = 0; g < 8; ++g) {
      Lit a = nodes[rng() % nodes.size()], b = nodes[rng() % nodes.size()], c = nodes[rng() % nodes.size()];
      if (rng() % 2) a = ~a;
      switch (rng() % 4) {
        case 0: nodes.push_back(cb.and_(a, b)); break;
        case 1: nodes.push_back(cb.or_(a, b)); break;
        case 2: nodes.push_back(cb.iff(a, b)); break;
        default: nodes.push_back(cb.ite(a, b, c)); break;
      }
    }
    Lit root = nodes.back();
    // direct evaluation of the circuit for every input assignment
    bool any = false;
    for (uint32_t a = 0; a < 16; ++a) {
      std::vector<Lit> pin;
      for (int i = 0; i < 4; ++i) pin.push_back((a >> i) & 1 ? in[i] : ~in[i]);
      pin.push_back(root);
      const bool sat = cb.solve(pin) == SolveResult::Sat;
      any = any || sat;
      pin.back() = ~root;
      // full lowering defines root as a function of the inputs
      if (it % 2 == 0) CHECK(sat != (cb.solve(pin) == SolveResult::Sat));
    }
    cb.assert_lit(root);
    const bool sat = s.solve() == SolveResult::Sat;
    CHECK(sat == any);
    if (sat) {
      std::vector<Lit> pin;
      for (Lit x : in) pin.push_back(s.value(x) ? x : ~x);
      CHECK(cb.solve(pin) == SolveResult::Sat);
    }
  }
}
