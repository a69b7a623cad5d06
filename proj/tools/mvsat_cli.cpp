// mvsat: command-line driver for tables, corpora, the relaxation pipeline, the
// exact oracle and the differential harness.
//
// Exit status: 0 when the requested work completed (including batches with
// per-instance failures), 2 on unreadable or invalid input, and the CLI11 parse
// error code on bad flags.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mvsat/beta.hpp"
#include "mvsat/errors.hpp"
#include "mvsat/harness.hpp"
#include "mvsat/lp.hpp"
#include "mvsat/mvlogic.hpp"
#include "mvsat/oracle.hpp"
#include "mvsat/pipeline.hpp"
#include "mvsat/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace mvsat;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  sub->add_option("--out", c.out, "write output into this directory instead of stdout");
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

// Writes to <out>/<name>.<ext>, or stdout when no directory was given.
void emit(const Common& c, const std::string& name, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  fs::create_directories(c.out);
  const auto path = fs::path(c.out) / (name + "." + c.format);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot write " + path.string());
  os << text;
  if (!text.empty() && text.back() != '\n') os << '\n';
  std::cerr << "wrote " << path.string() << '\n';
}

std::string csv_of(const json& flat_rows) {
  // Flattens an array of flat objects; nested values are dumped as JSON.
  std::ostringstream os;
  if (flat_rows.empty()) return "";
  std::vector<std::string> keys;
  for (auto it = flat_rows[0].begin(); it != flat_rows[0].end(); ++it) keys.push_back(it.key());
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << '\n';
  for (const auto& row : flat_rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const auto& v = row.at(keys[i]);
      os << (i ? "," : "");
      if (v.is_string()) {
        os << v.get<std::string>();
      } else if (!v.is_null()) {
        std::string s = v.dump();
        if (s.find(',') != std::string::npos) {
          std::string quoted = "\"";
          for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          s = quoted + '"';
        }
        os << s;
      }
    }
    os << '\n';
  }
  return os.str();
}

Formula read_formula(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return parse_dimacs(in);
  } catch (const ParseError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

struct PipelineFlags {
  std::string negation = "faithful";
  std::string bound = "k";
  std::string round_base = "2";
  std::string objective = "none";
  std::string arithmetic = "rational";

  void add(CLI::App* sub) {
    sub->add_option("--negation", negation)->check(CLI::IsMember({"faithful", "affine"}))->capture_default_str();
    sub->add_option("--bound", bound)->check(CLI::IsMember({"k", "k-1"}))->capture_default_str();
    sub->add_option("--round-base", round_base)->check(CLI::IsMember({"2", "k"}))->capture_default_str();
    sub->add_option("--objective", objective)->check(CLI::IsMember({"none", "max-sum"}))->capture_default_str();
    sub->add_option("--arithmetic", arithmetic)->check(CLI::IsMember({"rational", "float"}))->capture_default_str();
  }

  PipelineConfig config() const {
    PipelineConfig c;
    c.negation = negation == "affine" ? NegationMode::affine : NegationMode::faithful;
    c.bound = bound == "k-1" ? BoundMode::k_minus_1 : BoundMode::k;
    c.rounding = round_base == "k" ? RoundingBase::width : RoundingBase::two;
    c.objective = objective == "max-sum" ? Objective::maximize_sum : Objective::none;
    c.arithmetic = arithmetic == "float" ? ArithmeticMode::floating : ArithmeticMode::rational;
    return c;
  }
};

// --- tables ---------------------------------------------------------------

struct TablesCmd {
  Common common;
  int arity = 2;
  std::string kind = "binary";
  int k = 2;
  std::uint64_t budget = 1'000'000;

  void run() const {
    std::vector<std::string> dumps;
    json rows = json::array();
    auto add_row = [&](std::string_view kind_name, const std::vector<int>& idx,
                       const std::vector<int>& induced, std::string_view name) {
      json r = {{"kind", kind_name}, {"arity", arity}, {"indices", idx}, {"induced", induced}};
      r["name"] = name.empty() ? json(nullptr) : json(std::string(name));
      rows.push_back(std::move(r));
    };
    if (kind == "unary") {
      for (const auto& t : enumerate_unary(Arity(arity), budget)) {
        dumps.push_back(dump_table(t));
        add_row("unary", t.indices(), t.induced(), "");
      }
    } else if (kind == "binary") {
      for (const auto& t : enumerate_binary(Arity(arity), budget)) {
        dumps.push_back(dump_table(t));
        add_row("binary", t.indices(), t.induced(), arity == 2 ? classify_binary2(t) : "");
      }
    } else {
      const auto t = ksat_mu(k);
      dumps.push_back(dump_table(t));
      add_row("mu", t.indices(), t.induced(), "");
    }
    if (common.format == "csv") {
      for (auto& r : rows) {
        r["indices"] = r["indices"].dump();
        r["induced"] = r["induced"].dump();
      }
      emit(common, "tables", csv_of(rows));
    } else if (common.out.empty() && !json_output) {
      std::string text;
      for (const auto& d : dumps) text += d + "\n";
      std::cout << text;
    } else {
      emit(common, "tables", rows.dump(2));
    }
  }
  bool json_output = false;
};

// --- gen ------------------------------------------------------------------

struct GenCmd {
  Common common;
  int vars = 20;
  int clauses = 85;
  int k = 3;
  int count = 10;
  bool sweep = false;
  std::vector<double> ratios;

  void run() {
    CorpusParams p;
    p.vars = vars;
    p.clauses = clauses;
    p.k = k;
    p.count = count;
    p.seed = common.seed;
    p.ratios = sweep ? phase_transition_sweep(k) : ratios;
    const auto corpus = generate_corpus(p);
    const fs::path dir = common.out.empty() ? fs::path("corpus") : fs::path(common.out);
    const auto paths = write_corpus(dir, corpus);
    json listing = json::array();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      listing.push_back({{"id", corpus[i].id},
                         {"path", paths[i].string()},
                         {"num_vars", corpus[i].formula.num_vars()},
                         {"num_clauses", corpus[i].formula.num_clauses()}});
    }
    Common to_stdout = common;
    to_stdout.out.clear();
    emit(to_stdout, "corpus", common.format == "csv" ? csv_of(listing) : listing.dump(2));
  }
};

// --- eval -----------------------------------------------------------------

struct EvalCmd {
  Common common;
  std::string file;
  std::string assignment;

  void run() const {
    const auto f = read_formula(file);
    Assignment a;
    try {
      a = parse_assignment(assignment);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("assignment: ") + e.what());
    }
    if (static_cast<int>(a.size()) != f.num_vars()) {
      throw ConfigError("assignment has " + std::to_string(a.size()) + " values, formula has " +
                        std::to_string(f.num_vars()) + " variables");
    }
    const auto beta = beta_eval(f, a);
    const bool ref = eval_reference(f, a);
    json out = {{"beta", beta.value.value()},
                {"beta_closed_form", beta_closed_form(f, a).value()},
                {"reference", ref},
                {"reference_encoded", ref ? 0 : 1},
                {"agrees", (beta.value.value() == 0) == ref},
                {"ops", to_json(beta.ops)},
                {"predicted_ops", to_json(count_model(f))}};
    if (common.format == "csv") {
      json flat = {{"beta", out["beta"]},
                   {"reference", out["reference"]},
                   {"agrees", out["agrees"]},
                   {"additions", beta.ops.additions},
                   {"mu_calls", beta.ops.mu_calls},
                   {"negations", beta.ops.negations}};
      emit(common, "eval", csv_of(json::array({flat})));
    } else {
      emit(common, "eval", out.dump(2));
    }
  }
};

// --- lp -------------------------------------------------------------------

struct LpCmd {
  Common common;
  PipelineFlags flags;
  std::string file;
  bool text = false;

  void run() const {
    const auto f = read_formula(file);
    const auto cfg = flags.config();
    const auto sys = build_relaxation(f, cfg.negation, cfg.bound);
    const auto sol = solve_feasibility(sys, cfg.arithmetic);
    if (text) {
      std::ostringstream os;
      os << to_text(sys) << "status: " << to_string(sol.status) << "\npivot_steps: " << sol.pivot_steps
         << '\n';
      if (sol.point) {
        os << "point:";
        for (const auto& q : *sol.point) os << ' ' << format_rational(q);
        os << '\n';
      }
      if (sol.infeasibility) os << "infeasibility: " << format_rational(*sol.infeasibility) << '\n';
      Common c = common;
      c.format = "txt";
      emit(c, "lp", os.str());
      return;
    }
    if (common.format == "csv") {
      json rows = json::array();
      if (sol.point) {
        for (std::size_t j = 0; j < sol.point->size(); ++j) {
          rows.push_back({{"var", "X" + std::to_string(j + 1)},
                          {"value", format_rational((*sol.point)[j])},
                          {"status", to_string(sol.status)},
                          {"pivot_steps", sol.pivot_steps}});
        }
      }
      emit(common, "lp", csv_of(rows));
      return;
    }
    json out = {{"config", to_json(cfg)},
                {"system", to_json(sys)},
                {"system_text", to_text(sys)},
                {"solution", to_json(sol)}};
    emit(common, "lp", out.dump(2));
  }
};

// --- solve ----------------------------------------------------------------

struct SolveCmd {
  Common common;
  PipelineFlags flags;
  std::string file;

  void run() const {
    const auto f = read_formula(file);
    const auto cfg = flags.config();
    auto res = solve_ksat_relaxation(f, cfg);
    if (res.rounded) res.verified = verify(f, *res.rounded);
    json out = to_json(res);
    out["config"] = to_json(cfg);
    if (common.format == "csv") {
      json flat = {{"claimed_status", out["claimed_status"]},
                   {"rounded", out["rounded"]},
                   {"verified", out["verified"]},
                   {"lp_status", out["lp"]["status"]},
                   {"pivots", res.steps.pivots},
                   {"steps", res.steps.total()},
                   {"anomalies", res.anomalies.size()}};
      emit(common, "solve", csv_of(json::array({flat})));
    } else {
      emit(common, "solve", out.dump(2));
    }
  }
};

// --- oracle ---------------------------------------------------------------

struct OracleCmd {
  Common common;
  std::string file;
  std::string method = "dpll";
  std::uint64_t budget = kDefaultNodeBudget;

  void run() const {
    const auto f = read_formula(file);
    json out = {{"method", method}};
    try {
      const auto v = method == "brute-force" ? brute_force_sat(f) : dpll_sat(f, budget);
      out.update(to_json(v));
    } catch (const BudgetExceeded& e) {
      out["status"] = "budget_exceeded";
      out["nodes_explored"] = e.nodes();
      out["witness"] = nullptr;
    }
    if (common.format == "csv") {
      emit(common, "oracle", csv_of(json::array({out})));
    } else {
      emit(common, "oracle", out.dump(2));
    }
  }
};

// --- diff -----------------------------------------------------------------

struct DiffCmd {
  Common common;
  PipelineFlags flags;
  std::string corpus_dir;
  std::string oracle = "dpll";
  std::uint64_t budget = kDefaultNodeBudget;
  unsigned threads = 1;
  bool with_timing = false;
  int vars = 20;
  int k = 3;
  int count = 20;

  void run() const {
    std::vector<CorpusEntry> corpus;
    if (!corpus_dir.empty()) {
      if (!fs::is_directory(corpus_dir)) throw ConfigError("no such corpus directory: " + corpus_dir);
      try {
        corpus = load_corpus(corpus_dir);
      } catch (const ParseError& e) {
        throw ConfigError(std::string("corpus: ") + e.what());
      }
    } else {
      CorpusParams p;
      p.vars = vars;
      p.k = k;
      p.count = count;
      p.seed = common.seed;
      p.ratios = phase_transition_sweep(k);
      corpus = generate_corpus(p);
    }
    DiffOptions opts;
    opts.pipeline = flags.config();
    opts.oracle = oracle == "brute-force" ? OracleMethod::brute_force : OracleMethod::dpll;
    opts.node_budget = budget;
    opts.threads = threads;
    const auto rep = diff_run(corpus, opts);
    const bool canonical = !with_timing;
    emit(common, "report", common.format == "csv" ? to_csv(rep, canonical) : to_json(rep, canonical).dump(2));

    const auto& c = rep.aggregates.counts;
    std::cerr << "instances " << rep.aggregates.total;
    for (auto cat : kAllCategories) std::cerr << ", " << to_string(cat) << ' ' << c.at(cat);
    std::cerr << '\n';

    if (!common.out.empty() && rep.beta_divergence) {
      const auto path = fs::path(common.out) / "beta_divergence.txt";
      std::ofstream os(path, std::ios::binary);
      os << "instance " << rep.beta_divergence->instance_id << '\n'
         << "assignment " << format_assignment(rep.beta_divergence->assignment) << '\n';
    }
  }
};

// --- bench ----------------------------------------------------------------

struct BenchCmd {
  Common common;
  int k = 3;
  std::vector<std::uint64_t> sizes{1000, 2000, 4000, 8000, 16000};
  int repeats = 5;
  bool with_timing = false;

  void run() const {
    const auto rep = bench_eval(k, sizes, common.seed, repeats);
    emit(common, "bench", common.format == "csv" ? to_csv(rep) : to_json(rep, !with_timing).dump(2));
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Many-valued logic kSAT relaxation: tables, corpora, pipeline and differential harness"};
  app.require_subcommand(1);

  TablesCmd tables;
  auto* t = app.add_subcommand("tables", "dump enumerated truth tables");
  add_common(t, tables.common);
  t->add_option("--arity,-n", tables.arity, "logic arity n >= 2")->capture_default_str();
  t->add_option("--kind", tables.kind)->check(CLI::IsMember({"unary", "binary", "mu"}))->capture_default_str();
  t->add_option("--k", tables.k, "clause width for --kind mu")->capture_default_str();
  t->add_option("--budget", tables.budget, "maximum number of tables")->capture_default_str();
  t->add_flag("--json", tables.json_output, "JSON instead of the text dump");

  GenCmd gen;
  auto* g = app.add_subcommand("gen", "generate a random uniform k-CNF corpus (default dir: corpus)");
  add_common(g, gen.common);
  g->add_option("--vars", gen.vars)->capture_default_str();
  g->add_option("--clauses", gen.clauses)->capture_default_str();
  g->add_option("--k", gen.k)->capture_default_str();
  g->add_option("--count", gen.count, "instances (per ratio when sweeping)")->capture_default_str();
  g->add_flag("--sweep", gen.sweep, "sweep densities around the satisfiability threshold");
  g->add_option("--ratios", gen.ratios, "explicit clause/variable ratios")->delimiter(',');

  EvalCmd eval;
  auto* e = app.add_subcommand("eval", "evaluate beta and the reference semantics on one assignment");
  add_common(e, eval.common);
  e->add_option("file", eval.file, "DIMACS CNF")->required();
  e->add_option("assignment", eval.assignment, "bit string, character i is x(i+1), 1 = true")->required();

  LpCmd lp;
  auto* l = app.add_subcommand("lp", "build and solve the LP relaxation");
  add_common(l, lp.common);
  lp.flags.add(l);
  l->add_option("file", lp.file, "DIMACS CNF")->required();
  l->add_flag("--text", lp.text, "human-readable system dump");

  SolveCmd solve;
  auto* s = app.add_subcommand("solve", "run the relaxation pipeline");
  add_common(s, solve.common);
  solve.flags.add(s);
  s->add_option("file", solve.file, "DIMACS CNF")->required();

  OracleCmd oracle;
  auto* o = app.add_subcommand("oracle", "exact satisfiability verdict");
  add_common(o, oracle.common);
  o->add_option("file", oracle.file, "DIMACS CNF")->required();
  o->add_option("--method", oracle.method)->check(CLI::IsMember({"dpll", "brute-force"}))->capture_default_str();
  o->add_option("--budget", oracle.budget, "DPLL node budget")->capture_default_str();

  DiffCmd diff;
  auto* d = app.add_subcommand("diff", "differential run: pipeline against the oracle");
  add_common(d, diff.common);
  diff.flags.add(d);
  d->add_option("--corpus", diff.corpus_dir, "directory of .cnf files (default: generate a sweep)");
  d->add_option("--vars", diff.vars, "generated corpus: variables")->capture_default_str();
  d->add_option("--k", diff.k, "generated corpus: clause width")->capture_default_str();
  d->add_option("--count", diff.count, "generated corpus: instances per ratio")->capture_default_str();
  d->add_option("--oracle", diff.oracle)->check(CLI::IsMember({"dpll", "brute-force"}))->capture_default_str();
  d->add_option("--budget", diff.budget, "DPLL node budget")->capture_default_str();
  d->add_option("--threads", diff.threads)->check(CLI::Range(1u, 1024u))->capture_default_str();
  d->add_flag("--timing", diff.with_timing, "include wall-clock fields (not reproducible)");

  BenchCmd bench;
  auto* b = app.add_subcommand("bench", "operation counts and timing of beta evaluation");
  add_common(b, bench.common);
  b->add_option("--k", bench.k)->capture_default_str();
  b->add_option("--sizes", bench.sizes, "ascending clause counts")->delimiter(',');
  b->add_option("--repeats", bench.repeats)->capture_default_str();
  b->add_flag("--timing", bench.with_timing, "include wall-clock fields (not reproducible)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*t) tables.run();
    if (*g) gen.run();
    if (*e) eval.run();
    if (*l) lp.run();
    if (*s) solve.run();
    if (*o) oracle.run();
    if (*d) diff.run();
    if (*b) bench.run();
  } catch (const ConfigError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    // Invalid parameters or an instance the requested operation does not support.
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 0;
}
