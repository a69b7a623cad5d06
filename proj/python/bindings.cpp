#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvsat/beta.hpp"
#include "mvsat/errors.hpp"
#include "mvsat/harness.hpp"
#include "mvsat/lp.hpp"
#include "mvsat/mvlogic.hpp"
#include "mvsat/oracle.hpp"
#include "mvsat/pipeline.hpp"
#include "mvsat/report.hpp"

namespace py = pybind11;
using namespace mvsat;

namespace {

// Reports cross the boundary as JSON text and come back as plain dicts.
py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

PipelineConfig make_config(const std::string& negation, const std::string& bound,
                           const std::string& round_base, const std::string& objective,
                           const std::string& arithmetic) {
  auto pick = [](const std::string& v, std::initializer_list<const char*> allowed, const char* what) {
    for (const char* a : allowed) {
      if (v == a) return;
    }
    throw py::value_error(std::string("invalid ") + what + ": " + v);
  };
  pick(negation, {"faithful", "affine"}, "negation");
  pick(bound, {"k", "k-1"}, "bound");
  pick(round_base, {"2", "k"}, "round_base");
  pick(objective, {"none", "max-sum"}, "objective");
  pick(arithmetic, {"rational", "float"}, "arithmetic");
  PipelineConfig c;
  c.negation = negation == "affine" ? NegationMode::affine : NegationMode::faithful;
  c.bound = bound == "k-1" ? BoundMode::k_minus_1 : BoundMode::k;
  c.rounding = round_base == "k" ? RoundingBase::width : RoundingBase::two;
  c.objective = objective == "max-sum" ? Objective::maximize_sum : Objective::none;
  c.arithmetic = arithmetic == "float" ? ArithmeticMode::floating : ArithmeticMode::rational;
  return c;
}

#define MVSAT_CONFIG_ARGS                                                              \
  py::arg("negation") = "faithful", py::arg("bound") = "k", py::arg("round_base") = "2", \
      py::arg("objective") = "none", py::arg("arithmetic") = "rational"

std::vector<std::vector<int>> clause_lists(const Formula& f) {
  std::vector<std::vector<int>> out;
  for (const auto& c : f.clauses()) {
    std::vector<int> lits;
    for (const auto& l : c.literals()) lits.push_back(l.to_dimacs());
    out.push_back(std::move(lits));
  }
  return out;
}

Formula from_lists(int num_vars, const std::vector<std::vector<int>>& clauses) {
  std::vector<Clause> cs;
  for (const auto& c : clauses) {
    std::vector<Literal> lits;
    for (int l : c) lits.push_back(Literal::from_dimacs(l));
    cs.emplace_back(std::move(lits));
  }
  return Formula(num_vars, std::move(cs));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Many-valued logic kSAT relaxation: evaluator, LP pipeline, oracle and harness";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedInstance>(m, "UnsupportedInstance", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Formula>(m, "Formula")
      .def(py::init(&from_lists), py::arg("num_vars"), py::arg("clauses"))
      .def_static("from_dimacs", [](const std::string& text) { return parse_dimacs(text); })
      .def("to_dimacs", &write_dimacs)
      .def_property_readonly("num_vars", &Formula::num_vars)
      .def_property_readonly("num_clauses", &Formula::num_clauses)
      .def_property_readonly("k", &Formula::uniform_k)
      .def_property_readonly("clauses", &clause_lists)
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__repr__", [](const Formula& f) {
        return "<Formula vars=" + std::to_string(f.num_vars()) +
               " clauses=" + std::to_string(f.num_clauses()) + ">";
      });

  m.def("gen_g", [](int n, std::int64_t k, double a) { return gen_g(Arity(n), k, a).value(); },
        py::arg("n"), py::arg("k"), py::arg("a"));

  m.def(
      "unary_tables",
      [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& t : enumerate_unary(Arity(n))) out.push_back(t.induced());
        return out;
      },
      py::arg("n"), "Induced unary tables in lexicographic index order.");
  m.def(
      "binary_tables",
      [](int n) {
        py::list out;
        for (const auto& t : enumerate_binary(Arity(n))) {
          py::dict d;
          d["indices"] = t.indices();
          d["induced"] = t.induced();
          d["name"] = n == 2 ? py::cast(std::string(classify_binary2(t))) : py::none();
          out.append(d);
        }
        return out;
      },
      py::arg("n"), "Induced binary tables (row-major) with connective names for n = 2.");

  m.def("random_kcnf", &random_kcnf, py::arg("num_vars"), py::arg("num_clauses"), py::arg("k"),
        py::arg("seed"));
  m.def("eval_reference", &eval_reference, py::arg("formula"), py::arg("assignment"));
  m.def(
      "beta_eval",
      [](const Formula& f, const Assignment& a) {
        const auto r = beta_eval(f, a);
        py::dict d;
        d["value"] = r.value.value();
        d["ops"] = to_python(to_json(r.ops));
        return d;
      },
      py::arg("formula"), py::arg("assignment"));
  m.def("count_model", [](const Formula& f) { return to_python(to_json(count_model(f))); });

  m.def(
      "solve_lp",
      [](const Formula& f, const std::string& negation, const std::string& bound,
         const std::string& arithmetic) {
        const auto cfg = make_config(negation, bound, "2", "none", arithmetic);
        const auto sys = build_relaxation(f, cfg.negation, cfg.bound);
        py::dict d;
        d["system"] = to_python(to_json(sys));
        d["text"] = to_text(sys);
        d["solution"] = to_python(to_json(solve_feasibility(sys, cfg.arithmetic)));
        return d;
      },
      py::arg("formula"), py::arg("negation") = "faithful", py::arg("bound") = "k",
      py::arg("arithmetic") = "rational");

  m.def(
      "solve",
      [](const Formula& f, const std::string& negation, const std::string& bound,
         const std::string& round_base, const std::string& objective, const std::string& arithmetic) {
        auto res = solve_ksat_relaxation(f, make_config(negation, bound, round_base, objective, arithmetic));
        if (res.rounded) res.verified = verify(f, *res.rounded);
        return to_python(to_json(res));
      },
      py::arg("formula"), MVSAT_CONFIG_ARGS);

  m.def(
      "oracle",
      [](const Formula& f, const std::string& method, std::uint64_t budget) {
        if (method != "dpll" && method != "brute-force") throw py::value_error("invalid method: " + method);
        return to_python(to_json(method == "dpll" ? dpll_sat(f, budget) : brute_force_sat(f)));
      },
      py::arg("formula"), py::arg("method") = "dpll", py::arg("budget") = kDefaultNodeBudget);

  m.def(
      "diff",
      [](const std::vector<std::pair<std::string, Formula>>& corpus, const std::string& negation,
         const std::string& bound, const std::string& round_base, const std::string& objective,
         const std::string& arithmetic, std::uint64_t budget, unsigned threads) {
        std::vector<CorpusEntry> entries;
        for (const auto& [id, f] : corpus) entries.push_back({id, f});
        DiffOptions opts;
        opts.pipeline = make_config(negation, bound, round_base, objective, arithmetic);
        opts.node_budget = budget;
        opts.threads = threads;
        DiffReport rep;
        {
          py::gil_scoped_release release;
          rep = diff_run(entries, opts);
        }
        return to_python(to_json(rep, true));
      },
      py::arg("corpus"), MVSAT_CONFIG_ARGS, py::arg("budget") = kDefaultNodeBudget,
      py::arg("threads") = 1u, "Canonical differential report for a list of (id, Formula) pairs.");

  m.def(
      "generate_corpus",
      [](int vars, int k, int count, std::uint64_t seed, std::vector<double> ratios, int clauses) {
        CorpusParams p;
        p.vars = vars;
        p.k = k;
        p.count = count;
        p.seed = seed;
        p.ratios = std::move(ratios);
        p.clauses = clauses;
        std::vector<std::pair<std::string, Formula>> out;
        for (auto& e : generate_corpus(p)) out.emplace_back(std::move(e.id), std::move(e.formula));
        return out;
      },
      py::arg("vars"), py::arg("k"), py::arg("count"), py::arg("seed"),
      py::arg("ratios") = std::vector<double>{}, py::arg("clauses") = 0);
  m.def("phase_transition_sweep", &phase_transition_sweep, py::arg("k"));

  m.def(
      "bench",
      [](int k, const std::vector<std::uint64_t>& sizes, std::uint64_t seed, int repeats) {
        return to_python(to_json(bench_eval(k, sizes, seed, repeats), false));
      },
      py::arg("k"), py::arg("sizes"), py::arg("seed") = 1, py::arg("repeats") = 5);
}
