// pltlbmc command-line front end.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pltlbmc/check.hpp"
#include "pltlbmc/encode.hpp"
#include "pltlbmc/gen.hpp"
#include "pltlbmc/l2s.hpp"
#include "pltlbmc/model.hpp"
#include "pltlbmc/oracle.hpp"
#include "pltlbmc/tightba.hpp"

using namespace pltlbmc;
using nlohmann::json;

namespace {

constexpr int kExitError = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string model_path;
  std::string spec;
  std::string scheme = "pltl";
  std::string dmax = "full";
  bool force_stabilise = false;
  bool emit_json = false;
};

void add_common(CLI::App* c, Common& o) {
  c->add_option("model", o.model_path, "Model file")->required();
  c->add_option("--spec", o.spec, "Property (overrides the model's SPEC)");
  c->add_option("--scheme", o.scheme, "fixpoint|eventuality|buchi|pltl|general-buchi");
  c->add_option("--dmax", o.dmax, "Unrolling depth cap: N or full");
  c->add_flag("--force-stabilise", o.force_stabilise, "Always emit stabilisation forcing");
  c->add_flag("--emit-json", o.emit_json, "Print the verdict as one JSON record");
}

std::optional<int> parse_dmax(const std::string& s) {
  if (s == "full") return std::nullopt;
  try {
    size_t pos = 0;
    int d = std::stoi(s, &pos);
    if (pos == s.size() && d >= 0) return d;
  } catch (const std::exception&) {
  }
  throw UsageError("--dmax expects a non-negative integer or 'full'");
}

std::string resolve_spec(const ParsedModel& pm, const std::string& spec) {
  if (!spec.empty()) return spec;
  if (pm.spec) return *pm.spec;
  throw UsageError("no property: pass --spec or add a SPEC line to the model");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  return f;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  open_out(path) << text;
}

json verdict_json(const Verdict& v) {
  json j;
  j["verdict"] = v.kind == VerdictKind::Witness ? "WITNESS"
                 : v.kind == VerdictKind::Proved ? "PROVED"
                                                 : "UNKNOWN";
  j[v.kind == VerdictKind::BoundExhausted ? "max_k" : "k"] = v.k;
  j["solver_calls"] = v.solver_calls;
  if (v.witness) {
    const Witness& w = *v.witness;
    j["loop"] = w.loop ? json(*w.loop) : json(nullptr);
    json trace = json::array();
    for (int i = 0; i <= w.k(); ++i) {
      json s = json::object();
      for (size_t b = 0; b < w.var_names.size(); ++b) s[w.var_names[b]] = w.value(i, static_cast<int>(b)) ? 1 : 0;
      trace.push_back(s);
    }
    j["trace"] = trace;
  }
  return j;
}

int print_verdict(const Verdict& v, bool as_json) {
  if (as_json) {
    std::cout << verdict_json(v).dump() << "\n";
  } else {
    std::cout << v.line() << "\n";
    if (v.witness) std::cout << v.witness->to_text();
  }
  return v.exit_code();
}

struct CheckArgs {
  Common c;
  bool no_incremental = false;
  bool complete = false;
  int max_k = 20;
  int increment = 1;
  bool untight = false;
  bool no_release = false;
  bool polarity = false;
  std::vector<std::string> solver;
};

CheckOptions check_options(const CheckArgs& a) {
  CheckOptions o;
  o.scheme = parse_scheme(a.c.scheme);
  o.dmax = parse_dmax(a.c.dmax);
  o.force_stabilise = a.c.force_stabilise;
  o.incremental = !a.no_incremental;
  o.completeness = a.complete;
  o.max_k = a.max_k;
  o.increment = a.increment;
  o.tight = !a.untight;
  o.buchi_release = !a.no_release;
  o.polarity_aware = a.polarity;
  if (!a.solver.empty()) {
    if (a.solver.size() != 2 || a.solver[0] != "external")
      throw UsageError("--solver expects 'external <cmd>'");
    o.external_solver = a.solver[1];
  }
  if (o.completeness && (o.scheme != Scheme::Pltl || !o.incremental))
    throw UsageError("--complete requires --scheme pltl without --no-incremental");
  return o;
}

int cmd_check(const CheckArgs& a) {
  CheckOptions o = check_options(a);
  ParsedModel pm = load_model(a.c.model_path);
  Verdict v = run_bmc(pm.model, resolve_spec(pm, a.c.spec), o);
  return print_verdict(v, a.c.emit_json);
}

struct EncodeArgs {
  Common c;
  int k = 0;
  std::string out = "-";
  std::string map_path;
  bool untight = false;
  bool no_release = false;
};

int cmd_encode(const EncodeArgs& a) {
  ParsedModel pm = load_model(a.c.model_path);
  Formula psi = to_pnf(negate(parse_formula(resolve_spec(pm, a.c.spec))));
  Scheme s = parse_scheme(a.c.scheme);
  SymbolicModel prod;
  const SymbolicModel* m = &pm.model;
  if (s == Scheme::GeneralBuchi) {
    prod = product(pm.model, a.untight ? build_untight_ba(psi) : build_tight_ba(psi));
    m = &prod;
  }
  BmcContext ctx(*m);
  encode_scheme(ctx, s, psi, a.k, PltlOptions{parse_dmax(a.c.dmax), a.c.force_stabilise}, !a.no_release);
  if (a.out.empty() || a.out == "-") {
    export_dimacs(ctx.solver, std::cout);
  } else {
    export_dimacs(ctx.solver, a.out);
  }
  std::string map_path = a.map_path;
  if (map_path.empty() && !a.out.empty() && a.out != "-") map_path = a.out + ".map";
  if (!map_path.empty()) {
    auto f = open_out(map_path);
    ctx.map.write_sidecar(f);
  }
  return 0;
}

struct L2sArgs {
  std::string model_path;
  std::string out = "-";
  bool optimise = false;
  bool reach = false;
};

int cmd_l2s(const L2sArgs& a) {
  ParsedModel pm = load_model(a.model_path);
  L2SModel l = l2s_transform(pm.model, a.optimise);
  write_text(a.out, write_model(l.model, std::string("G !") + kLoopClosed));
  if (a.reach) {
    L2SReach r = check_l2s_reachability(l);
    std::ostream& os = (a.out.empty() || a.out == "-") ? std::cerr : std::cout;
    if (r.reachable)
      os << "LoopClosed reachable depth=" << r.depth << "\n";
    else
      os << "LoopClosed unreachable\n";
  }
  return 0;
}

struct TbaArgs {
  std::string formula;
  std::string model_path;
  std::string out = "-";
  bool untight = false;
};

int cmd_tightba(const TbaArgs& a) {
  Formula psi = to_pnf(parse_formula(a.formula));
  TightBA b = a.untight ? build_untight_ba(psi) : build_tight_ba(psi);
  if (a.model_path.empty()) {
    write_text(a.out, write_model(b.automaton, std::string("false")));
  } else {
    ParsedModel pm = load_model(a.model_path);
    write_text(a.out, write_model(product(pm.model, b), std::string("false")));
  }
  return 0;
}

struct OracleArgs {
  Common c;
  int max_k = 8;
  bool exact = false;
  int max_bits = 6;
};

int cmd_oracle(const OracleArgs& a) {
  ParsedModel pm = load_model(a.c.model_path);
  Formula psi = to_pnf(negate(parse_formula(resolve_spec(pm, a.c.spec))));
  for (const auto& at : atoms_of(psi))
    if (!pm.model.has_name(at)) throw ModelError(ModelErrorKind::UndefinedIdentifier, "unknown atom '" + at + "'");
  ExplicitModel em = explicit_expand(pm.model, a.max_bits);
  OracleLimits lim;
  lim.max_bits = a.max_bits;
  lim.max_k = std::max(lim.max_k, a.max_k);
  BoundedSearch bs = exists_witness_bounded(em, psi, a.max_k, lim);
  Verdict v;
  if (auto k = bs.min_k()) {
    const BoundedPath& p = *bs.witness[*k];
    Witness w;
    w.var_names = em.var_names;
    for (int s : p.states) w.states.push_back(em.states[s]);
    w.loop = p.loop;
    v.kind = VerdictKind::Witness;
    v.k = *k;
    v.witness = std::move(w);
  } else {
    v.kind = VerdictKind::BoundExhausted;
    v.k = a.max_k;
  }
  std::optional<bool> violated;
  if (a.exact) {
    ExpandOptions eo;
    eo.max_bits = 24;
    eo.reachable_only = true;
    eo.require_total = false;
    violated = has_fair_cycle(explicit_expand(product(pm.model, build_tight_ba(psi)), eo));
    if (!*violated && v.kind == VerdictKind::Witness)
      throw std::logic_error("bounded witness without an accepting product cycle");
    if (!*violated) {
      v.kind = VerdictKind::Proved;
      v.k = a.max_k;
    }
  }
  if (a.c.emit_json) {
    json j = verdict_json(v);
    if (violated) j["exact"] = *violated ? "violated" : "holds";
    std::cout << j.dump() << "\n";
    return v.exit_code();
  }
  int rc = print_verdict(v, false);
  if (violated) std::cout << "exact: " << (*violated ? "violated" : "holds") << "\n";
  return rc;
}

struct RandomArgs {
  uint64_t seed = 0;
  int min_bits = 1, max_bits = 4, natoms = 3, fair_sets = 0;
  bool input = false;
  bool spec = true;
  std::string out = "-";
};

int cmd_random(const RandomArgs& a) {
  Rng rng(a.seed);
  GridModelOptions go;
  go.min_bits = a.min_bits;
  go.max_bits = a.max_bits;
  go.natoms = a.natoms;
  go.max_fair_sets = a.fair_sets;
  go.input_bit = a.input;
  SymbolicModel m = random_grid_model(rng, go);
  std::optional<std::string> spec;
  if (a.spec) {
    FormulaOptions fo;
    fo.natoms = a.natoms;
    spec = to_string(negate(embed(random_formula(rng, fo))));
  }
  write_text(a.out, write_model(m, spec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded model checking for linear temporal logic with past"};
  app.require_subcommand(1);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Search for a witness of the negated property");
  add_common(check, ca.c);
  check->add_flag("--no-incremental", ca.no_incremental, "One monolithic instance per bound");
  check->add_flag("--complete", ca.complete, "Add the completeness check");
  check->add_option("--max-k", ca.max_k, "Largest bound")->check(CLI::NonNegativeNumber);
  check->add_option("--increment", ca.increment, "Bound step")->check(CLI::PositiveNumber);
  check->add_flag("--untight", ca.untight, "general-buchi: treat all depths as 0");
  check->add_flag("--no-release-acceptance", ca.no_release, "buchi: drop the release acceptance");
  check->add_flag("--polarity", ca.polarity, "Polarity-aware gate definitions");
  check->add_option("--solver", ca.solver, "external <cmd>")->expected(2);

  EncodeArgs ea;
  auto* encode = app.add_subcommand("encode", "Write the encoding for one bound as DIMACS");
  add_common(encode, ea.c);
  encode->add_option("-k,--k", ea.k, "Bound")->required()->check(CLI::NonNegativeNumber);
  encode->add_option("-o,--out", ea.out, "DIMACS output (default stdout)");
  encode->add_option("--map", ea.map_path, "Variable map output (default <out>.map)");
  encode->add_flag("--untight", ea.untight, "general-buchi: treat all depths as 0");
  encode->add_flag("--no-release-acceptance", ea.no_release, "buchi: drop the release acceptance");

  L2sArgs la;
  auto* l2s = app.add_subcommand("l2s", "Liveness-to-safety transformation");
  l2s->add_option("model", la.model_path, "Model file with FAIRNESS lines")->required();
  l2s->add_option("-o,--out", la.out, "Output model (default stdout)");
  l2s->add_flag("--optimise", la.optimise, "Drop input variables from loop detection");
  l2s->add_flag("--reach", la.reach, "Also report LoopClosed reachability");

  TbaArgs ta;
  auto* tba = app.add_subcommand("tightba", "Symbolic Buchi automaton for a formula");
  tba->add_option("formula", ta.formula, "Formula")->required();
  tba->add_option("--model", ta.model_path, "Write the product with this model");
  tba->add_option("-o,--out", ta.out, "Output model (default stdout)");
  tba->add_flag("--untight", ta.untight, "Treat all depths as 0");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Brute-force bounded verdict");
  add_common(oracle, oa.c);
  oracle->add_option("--max-k", oa.max_k, "Largest bound")->check(CLI::NonNegativeNumber);
  oracle->add_option("--max-bits", oa.max_bits, "State-bit limit")->check(CLI::PositiveNumber);
  oracle->add_flag("--exact", oa.exact, "Also decide the property via an explicit fair-cycle search");

  RandomArgs ra;
  auto* rnd = app.add_subcommand("random-model", "Seeded random model with a random SPEC");
  rnd->add_option("--seed", ra.seed, "Seed");
  rnd->add_option("--min-bits", ra.min_bits, "Minimum state bits")->check(CLI::PositiveNumber);
  rnd->add_option("--max-bits", ra.max_bits, "Maximum state bits")->check(CLI::PositiveNumber);
  rnd->add_option("--atoms", ra.natoms, "Number of atoms")->check(CLI::PositiveNumber);
  rnd->add_option("--fair-sets", ra.fair_sets, "Maximum fairness sets")->check(CLI::NonNegativeNumber);
  rnd->add_flag("--input", ra.input, "Add a free input variable");
  rnd->add_flag("!--no-spec", ra.spec, "Omit the SPEC line");
  rnd->add_option("-o,--out", ra.out, "Output model (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*check) return cmd_check(ca);
    if (*encode) return cmd_encode(ea);
    if (*l2s) return cmd_l2s(la);
    if (*tba) return cmd_tightba(ta);
    if (*oracle) return cmd_oracle(oa);
    if (*rnd) return cmd_random(ra);
  } catch (const ParseError& e) {
    std::cerr << "error: formula " << e.line << ":" << e.column << ": " << e.what() << "\n";
  } catch (const ModelError& e) {
    std::cerr << "error: model";
    if (e.line > 0) std::cerr << " line " << e.line;
    std::cerr << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
