#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pltlbmc/check.hpp"
#include "pltlbmc/l2s.hpp"
#include "pltlbmc/oracle.hpp"
#include "pltlbmc/tightba.hpp"

namespace py = pybind11;
using namespace pltlbmc;

namespace {

Formula witness_formula(const ParsedModel& pm, const std::optional<std::string>& spec) {
  auto text = spec ? spec : pm.spec;
  if (!text) throw std::invalid_argument("no specification given and the model has no SPEC");
  return to_pnf(negate(parse_formula(*text)));
}

std::optional<int> parse_dmax(const std::optional<std::string>& d) {
  if (!d || *d == "full") return std::nullopt;
  return std::stoi(*d);
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["verdict"] = v.kind == VerdictKind::Witness ? "WITNESS" : v.kind == VerdictKind::Proved ? "PROVED" : "UNKNOWN";
  d["k"] = v.k;
  d["line"] = v.line();
  d["exit_code"] = v.exit_code();
  d["solver_calls"] = v.solver_calls;
  if (v.witness) {
    d["loop"] = v.witness->loop ? py::cast(*v.witness->loop) : py::none();
    d["states"] = v.witness->states;
    d["vars"] = v.witness->var_names;
    d["trace"] = v.witness->to_text();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bounded model checking for PLTL";

  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SchemeError>(m, "SchemeError", PyExc_ValueError);
  py::register_exception<WitnessValidationError>(m, "WitnessValidationError", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("pnf", [](const std::string& f) { return to_string(to_pnf(parse_formula(f))); }, py::arg("formula"),
        "Positive normal form of a formula, printed.");
  m.def("negated_pnf", [](const std::string& f) { return to_string(to_pnf(negate(parse_formula(f)))); },
        py::arg("formula"));
  m.def("past_depth", [](const std::string& f) { return past_depth(to_pnf(parse_formula(f))); }, py::arg("formula"));

  py::class_<ParsedModel>(m, "Model")
      .def_property_readonly("vars", [](const ParsedModel& p) { return p.model.vars; })
      .def_property_readonly("inputs", [](const ParsedModel& p) { return p.model.inputs; })
      .def_property_readonly("spec", [](const ParsedModel& p) { return p.spec; })
      .def_property_readonly("num_fairness", [](const ParsedModel& p) { return p.model.fairness.size(); })
      .def("text", [](const ParsedModel& p) { return write_model(p.model, p.spec); })
      .def("reachable_states", [](const ParsedModel& p, int max_bits) {
        ExpandOptions eo;
        eo.max_bits = max_bits;
        eo.reachable_only = true;
        eo.require_total = false;
        return explicit_expand(p.model, eo).reachable();
      }, py::arg("max_bits") = 16);
  m.def("load_model", &load_model, py::arg("path"));
  m.def("parse_model", &parse_model, py::arg("text"));

  m.def(
      "check",
      [](const ParsedModel& pm, std::optional<std::string> spec, const std::string& scheme, int max_k,
         std::optional<std::string> dmax, bool completeness, bool incremental, int increment, bool tight,
         const std::string& external) {
        CheckOptions o;
        o.scheme = parse_scheme(scheme);
        o.max_k = max_k;
        o.dmax = parse_dmax(dmax);
        o.completeness = completeness;
        o.incremental = incremental;
        o.increment = increment;
        o.tight = tight;
        o.external_solver = external;
        Formula psi = witness_formula(pm, spec);
        py::gil_scoped_release release;
        Verdict v = run_bmc_witness(pm.model, psi, o);
        py::gil_scoped_acquire acquire;
        return verdict_dict(v);
      },
      py::arg("model"), py::arg("spec") = py::none(), py::arg("scheme") = "pltl", py::arg("max_k") = 20,
      py::arg("dmax") = py::none(), py::arg("completeness") = false, py::arg("incremental") = true,
      py::arg("increment") = 1, py::arg("tight") = true, py::arg("external_solver") = "");

  m.def(
      "encode_dimacs",
      [](const ParsedModel& pm, int k, std::optional<std::string> spec, const std::string& scheme,
         std::optional<std::string> dmax) {
        Formula psi = witness_formula(pm, spec);
        Scheme s = parse_scheme(scheme);
        SymbolicModel prod;
        const SymbolicModel* enc = &pm.model;
        if (s == Scheme::GeneralBuchi) {
          prod = product(pm.model, build_tight_ba(psi));
          enc = &prod;
        }
        BmcContext c(*enc);
        encode_scheme(c, s, psi, k, PltlOptions{parse_dmax(dmax), false});
        std::ostringstream out, map;
        export_dimacs(c.solver, out);
        c.map.write_sidecar(map);
        return py::make_tuple(out.str(), map.str());
      },
      py::arg("model"), py::arg("k"), py::arg("spec") = py::none(), py::arg("scheme") = "pltl",
      py::arg("dmax") = py::none(), "DIMACS text and variable map for one bound.");

  m.def(
      "oracle_min_k",
      [](const ParsedModel& pm, std::optional<std::string> spec, int max_k, int max_bits) -> std::optional<int> {
        OracleLimits lim;
        lim.max_k = max_k;
        lim.max_bits = max_bits;
        return exists_witness_bounded(explicit_expand(pm.model, max_bits), witness_formula(pm, spec), max_k, lim)
            .min_k();
      },
      py::arg("model"), py::arg("spec") = py::none(), py::arg("max_k") = 8, py::arg("max_bits") = 6,
      "Smallest witness bound found by explicit enumeration, or None.");

  m.def(
      "l2s",
      [](const ParsedModel& pm, bool optimise) {
        L2SModel l = l2s_transform(pm.model, optimise);
        L2SReach r = check_l2s_reachability(l);
        py::dict d;
        d["model"] = write_model(l.model, std::string("G !") + kLoopClosed);
        d["acceptance_sets"] = l.num_acceptance_sets;
        d["reachable"] = r.reachable;
        d["depth"] = r.reachable ? py::cast(r.depth) : py::none();
        d["excluded"] = l.excluded;
        return d;
      },
      py::arg("model"), py::arg("optimise") = false);

  m.def(
      "tightba",
      [](const std::string& formula, bool tight) {
        Formula psi = to_pnf(parse_formula(formula));
        TightBA b = tight ? build_tight_ba(psi) : build_untight_ba(psi);
        py::dict d;
        d["model"] = write_model(b.automaton, std::string("false"));
        d["atoms"] = b.atoms;
        d["raw_variable_count"] = b.raw_variable_count;
        return d;
      },
      py::arg("formula"), py::arg("tight") = true);
}
