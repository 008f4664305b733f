#include <doctest.h>

#include "common.hpp"

using namespace pltlbmc;
using pltlbmc::test::counter;

TEST_CASE("counter fixture") {
  const SymbolicModel& m = counter();
  CHECK(m.vars.size() == 3);
  for (int v = 0; v < 6; ++v) CHECK(m.define("x" + std::to_string(v)) != nullptr);
  ExplicitModel em = explicit_expand(m);
  CHECK(em.states.size() == 8);
  CHECK(em.reachable().size() == 6);
  const std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 2}};
  for (auto [a, b] : edges) CHECK(em.succ[a] == std::vector<int>{b});
  CHECK(em.initial[0]);
  CHECK(std::count(em.initial.begin(), em.initial.end(), 1) == 1);
  CHECK(em.labels[em.label_index("x4")][4]);
  CHECK_FALSE(em.labels[em.label_index("x4")][5]);
}

TEST_CASE("unconstrained transition relation is complete") {
  ParsedModel pm = parse_model("VAR a b\nINIT true\n");
  ExplicitModel em = explicit_expand(pm.model);
  CHECK(em.states.size() == 4);
  CHECK(em.num_edges() == 16);
}

TEST_CASE("model errors") {
  auto kind = [](const std::string& text) {
    try {
      parse_model(text).model.validate();
    } catch (const ModelError& e) {
      return e.kind;
    }
    FAIL("expected a model error");
    return ModelErrorKind::Syntax;
  };
  CHECK(kind("VAR a\nDEFINE d := d & a\n") == ModelErrorKind::CyclicDefine);
  CHECK(kind("VAR a\nDEFINE d := e\nDEFINE e := d\n") == ModelErrorKind::CyclicDefine);
  CHECK(kind("VAR a\nINIT b\n") == ModelErrorKind::UndefinedIdentifier);
  CHECK(kind("VAR a\nINIT next(a)\n") == ModelErrorKind::NextOutsideTrans);
  CHECK(kind("VAR a\nFAIRNESS next(a)\n") == ModelErrorKind::NextOutsideTrans);
  CHECK(kind("VAR a\nINIT (a\n") == ModelErrorKind::Syntax);
  CHECK(kind("VAR a a\n") == ModelErrorKind::Duplicate);
  try {
    parse_model("VAR a\n\nINIT zz\n").model.validate();
  } catch (const ModelError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("totality") {
  ParsedModel pm = parse_model("VAR a\nTRANS false\n");
  CHECK_THROWS_AS(explicit_expand(pm.model), TotalityError);
  ExpandOptions o;
  o.require_total = false;
  CHECK(explicit_expand(pm.model, o).num_edges() == 0);
  ParsedModel big = parse_model("VAR a b c\n");
  CHECK_THROWS_AS(explicit_expand(big.model, 2), TooManyBits);
}

TEST_CASE("input variables irrelevant for fairness") {
  ParsedModel free_input = parse_model("VAR s\nINPUT i\nTRANS next(s) <-> i\nFAIRNESS s\n");
  CHECK(input_vars_irrelevant_for_fairness(free_input.model) == std::set<std::string>{"i"});
  ParsedModel fair_input = parse_model("VAR s\nINPUT i\nTRANS next(s) <-> i\nFAIRNESS i\n");
  CHECK(input_vars_irrelevant_for_fairness(fair_input.model).empty());
  CHECK(input_vars_irrelevant_for_fairness(counter()).empty());
  ExplicitModel em = explicit_expand(free_input.model);
  CHECK(is_transition_input(em, em.label_index("i")));
  CHECK_FALSE(is_transition_input(em, em.label_index("s")));
}

TEST_CASE("write_model round-trips") {
  ParsedModel pm = parse_model(write_model(counter(), std::string("G !p7")));
  REQUIRE(pm.spec);
  CHECK(*pm.spec == "G !p7");
  ExplicitModel a = explicit_expand(counter()), b = explicit_expand(pm.model);
  CHECK(a.succ == b.succ);
  CHECK(a.initial == b.initial);
}

TEST_CASE("symbolic model from an explicit graph") {
  SymbolicModel m = symbolic_from_graph(2, {1}, {{1, 2}, {3}, {0}, {3}}, {{2}});
  ExplicitModel em = explicit_expand(m);
  CHECK(em.succ == std::vector<std::vector<int>>{{1, 2}, {3}, {0}, {3}});
  CHECK(em.initial == std::vector<uint8_t>{0, 1, 0, 0});
  REQUIRE(em.fair.size() == 1);
  CHECK(em.fair[0] == std::vector<uint8_t>{0, 0, 1, 0});
}
