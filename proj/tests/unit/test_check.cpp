#include <doctest.h>

#include "common.hpp"
#include "pltlbmc/gen.hpp"

using namespace pltlbmc;
using namespace pltlbmc::test;

namespace {

Verdict check(const std::string& spec, CheckOptions o = {}) { return run_bmc(counter(), spec, o); }

}  // namespace

TEST_CASE("running example witness") {
  for (bool inc : {true, false}) {
    CheckOptions o;
    o.incremental = inc;
    Verdict v = check("!(F ((x3) & O ((x4) & O (x5))))", o);
    CHECK(v.kind == VerdictKind::Witness);
    CHECK(v.k == 6);
    CHECK(v.exit_code() == 1);
    CHECK(v.line() == "VERDICT WITNESS k=6");
    REQUIRE(v.witness);
    CHECK(v.witness->loop == 3);
    CHECK(v.witness->states == std::vector<uint64_t>{0, 1, 2, 3, 4, 5, 2});
    const std::string text = v.witness->to_text();
    CHECK(text.find("state 0: b0=0 b1=0 b2=0\n") == 0);
    CHECK(text.find("-- loop starts here --\nstate 3: b0=1 b1=1 b2=0\n") != std::string::npos);
  }
  CheckOptions d0;
  d0.dmax = 0;
  CHECK(check("!(F ((x3) & O ((x4) & O (x5))))", d0).k == 11);
}

TEST_CASE("schemes on G !x4") {
  CHECK(check("G !x4").k == 4);
  CHECK_FALSE(check("G !x4").witness->loop);
  for (Scheme s : {Scheme::Fixpoint, Scheme::Eventuality, Scheme::Buchi}) {
    CheckOptions o;
    o.scheme = s;
    CHECK(check("G !x4", o).k == 4);
  }
  CheckOptions gb;
  gb.scheme = Scheme::GeneralBuchi;
  Verdict v = check("G !x4", gb);
  CHECK(v.kind == VerdictKind::Witness);
  CHECK(v.k == 6);
  CHECK(v.witness->loop == 3);
  gb.tight = false;
  CHECK(check("G !x4", gb).k == 6);
  gb.tight = true;
  CHECK(check("!(F ((x3) & O ((x4) & O (x5))))", gb).k == 6);
  gb.tight = false;
  CHECK(check("!(F ((x3) & O ((x4) & O (x5))))", gb).k == 12);
}

TEST_CASE("no-loop witness") {
  Verdict v = check("!((x0 | x1) U x2)");
  CHECK(v.kind == VerdictKind::Witness);
  CHECK(v.k == 2);
  REQUIRE(v.witness);
  CHECK_FALSE(v.witness->loop);
  CHECK(v.witness->to_text().find("loop") == std::string::npos);
  CheckOptions o;
  o.max_k = 8;
  CHECK(check("!(x0 U x2)", o).kind == VerdictKind::BoundExhausted);
  CHECK(check("!(x0 U x2)", o).line() == "VERDICT UNKNOWN max_k=8");
  CHECK(check("!(x0 U x2)", o).exit_code() == 2);
}

TEST_CASE("completeness") {
  CheckOptions o;
  o.completeness = true;
  Verdict v = check("G !p7", o);
  CHECK(v.kind == VerdictKind::Proved);
  CHECK(v.k == 10);
  CHECK(v.exit_code() == 0);
  CHECK(v.line() == "VERDICT PROVED k=10");
  CHECK(check("G (x5 -> O x4)", o).k == 12);
  CHECK(check("G (x5 -> O x4)", o).kind == VerdictKind::Proved);
  Verdict w = check("!(F ((x3) & O ((x4) & O (x5))))", o);
  CHECK(w.kind == VerdictKind::Witness);
  CHECK(w.k == 6);
  o.increment = 3;
  CHECK(check("G !p7", o).k == 12);
  Verdict w3 = check("G !x4", o);
  CHECK(w3.kind == VerdictKind::Witness);
  CHECK(w3.k == 5);
  CheckOptions bad;
  bad.completeness = true;
  bad.incremental = false;
  CHECK_THROWS_AS(check("G !p7", bad), std::invalid_argument);
  bad.incremental = true;
  bad.scheme = Scheme::Fixpoint;
  CHECK_THROWS_AS(check("G !p7", bad), std::invalid_argument);
}

TEST_CASE("increments without completeness") {
  CheckOptions o;
  o.increment = 2;
  Verdict v = check("!(F ((x3) & O ((x4) & O (x5))))", o);
  CHECK(v.k == 6);
  o.increment = 4;
  CHECK(check("!(F ((x3) & O ((x4) & O (x5))))", o).k == 8);
  o.increment = 0;
  CHECK_THROWS_AS(check("G !p7", o), std::invalid_argument);
}

TEST_CASE("unknown atoms and bad schemes") {
  CHECK_THROWS_AS(check("G !nosuch"), ModelError);
  CheckOptions o;
  o.scheme = Scheme::Buchi;
  CHECK_THROWS_AS(check("G (x5 -> O x4)", o), SchemeError);
}

TEST_CASE("witness validation catches corrupted assignments") {
  Verdict v = check("!(F ((x3) & O ((x4) & O (x5))))");
  Witness w = *v.witness;
  CHECK_NOTHROW(validate_witness(counter(), w));
  Witness bad_trans = w;
  bad_trans.states[4] = 5;
  CHECK_THROWS_AS(validate_witness(counter(), bad_trans), WitnessValidationError);
  Witness bad_init = w;
  bad_init.states[0] = 1;
  CHECK_THROWS_AS(validate_witness(counter(), bad_init), WitnessValidationError);
  Witness bad_loop = w;
  bad_loop.loop = 4;
  CHECK_THROWS_AS(validate_witness(counter(), bad_loop), WitnessValidationError);
  CHECK(witness_satisfies(counter(), w, pnf(kRunning)));
  CHECK_FALSE(witness_satisfies(counter(), w, pnf("F p7")));

  BmcContext c(counter());
  encode_scheme(c, Scheme::Pltl, pnf(kRunning), 6);
  REQUIRE(c.cb.solve() == SolveResult::Sat);
  auto flip = *c.map.get(Role::State, 1, 4, 0);
  auto corrupted = [&](Lit l) { return l.var() == flip.var() ? !c.solver.value(l) : c.solver.value(l); };
  CHECK_NOTHROW(extract_witness([&](Lit l) { return c.solver.value(l); }, c.map, counter(), 6));
  CHECK_THROWS_AS(extract_witness(corrupted, c.map, counter(), 6), WitnessValidationError);
}

TEST_CASE("property: verdicts agree with the oracle") {
  Rng rng(41);
  for (int i = 0; i < 15; ++i) {
    SymbolicModel m = random_grid_model(rng);
    ExplicitModel em = explicit_expand(m);
    for (int j = 0; j < 10; ++j) {
      Formula f = random_formula(rng);
      CheckOptions o;
      o.max_k = 6;
      Verdict v = run_bmc_witness(m, f, o);
      auto mk = exists_witness_bounded(em, f, 6).min_k();
      CHECK(v.kind == (mk ? VerdictKind::Witness : VerdictKind::BoundExhausted));
      if (mk) {
        CHECK(v.k == *mk);
        CHECK(witness_satisfies(m, *v.witness, f));
      }
      o.completeness = true;
      o.max_k = 64;
      Verdict c = run_bmc_witness(m, f, o);
      CHECK(c.kind != VerdictKind::BoundExhausted);
      if (c.kind == VerdictKind::Proved) CHECK_FALSE(mk);
    }
  }
}
