// End-to-end acceptance gate: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "mvsat/beta.hpp"
#include "mvsat/harness.hpp"
#include "mvsat/lp.hpp"
#include "mvsat/mvlogic.hpp"
#include "mvsat/oracle.hpp"
#include "mvsat/pipeline.hpp"
#include "mvsat/report.hpp"
#include "reference_tables.hpp"

using namespace mvsat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Formula unsat_2cnf() {
  std::vector<Clause> cs;
  for (int a : {1, -1}) {
    for (int b : {2, -2}) cs.emplace_back(std::vector{Literal::from_dimacs(a), Literal::from_dimacs(b)});
  }
  return Formula(2, std::move(cs));
}

Outcome truth_tables() {
  Outcome out;
  const auto unary = enumerate_unary(Arity(2));
  if (unary.size() != testdata::kUnary2.size()) return {false, "unary count"};
  for (std::size_t i = 0; i < unary.size(); ++i) {
    const auto got = unary[i].induced();
    if (!std::equal(got.begin(), got.end(), testdata::kUnary2[i].begin())) {
      return {false, fmt("unary table %zu differs", i)};
    }
  }
  const auto binary = enumerate_binary(Arity(2));
  if (binary.size() != testdata::kBinary2.size()) return {false, "binary count"};
  int classifier_matches = 0;
  for (std::size_t i = 0; i < binary.size(); ++i) {
    const auto got = binary[i].induced();
    if (!std::equal(got.begin(), got.end(), testdata::kBinary2[i].begin())) {
      return {false, fmt("binary table %zu differs", i)};
    }
    const auto published = testdata::kBinary2PublishedNames[i];
    if (published_connective_name(binary[i]) != published) {
      return {false, fmt("published name %zu differs", i)};
    }
    if (classify_binary2(binary[i]) == published) {
      ++classifier_matches;
      continue;
    }
    // The only allowed mismatch: a published "right projection" whose own table
    // is the complement of the right argument.
    const auto& t = testdata::kBinary2[i];
    const bool complement_of_b = t[0] == 1 && t[1] == 0 && t[2] == 1 && t[3] == 0;
    if (published != "right projection" || !complement_of_b) {
      return {false, fmt("classifier name %zu differs", i)};
    }
  }
  out.detail = fmt("4 unary + 16 binary tables exact; published names 16/16; classifier %d/16 "
                   "(1011 published as right projection but tabulates not-b)",
                   classifier_matches);
  return out;
}

Outcome cardinalities() {
  auto distinct = [](const auto& tables) {
    std::set<std::vector<int>> s;
    for (const auto& t : tables) s.insert(t.induced());
    return s.size();
  };
  const auto u3 = distinct(enumerate_unary(Arity(3)));
  const auto b3 = distinct(enumerate_binary(Arity(3)));
  const auto u4 = distinct(enumerate_unary(Arity(4)));
  return {u3 == 27 && b3 == 19683 && u4 == 256,
          fmt("n=3 unary %zu, n=3 binary %zu, n=4 unary %zu", u3, b3, u4)};
}

Outcome evaluator_equivalence() {
  std::mt19937_64 rng(3);
  std::size_t mismatches = 0, evaluations = 0;
  const int formulas = 1000;
  for (int t = 0; t < formulas; ++t) {
    const int k = 2 + t % 3;
    const int n = k + static_cast<int>(rng() % (13 - k));
    const int m = 1 + static_cast<int>(rng() % (3 * n));
    const auto f = random_kcnf(n, m, k, rng());
    Assignment a(n);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      for (int i = 0; i < n; ++i) a[i] = (bits >> i) & 1u;
      mismatches += beta_eval(f, a).value != beta_closed_form(f, a);
      ++evaluations;
    }
  }
  return {mismatches == 0,
          fmt("%d formulas, %zu assignments, %zu mismatches", formulas, evaluations, mismatches)};
}

Outcome operation_accounting() {
  std::mt19937_64 rng(4);
  std::size_t bad = 0;
  const int instances = 2000;
  for (int t = 0; t < instances; ++t) {
    const int k = 2 + static_cast<int>(rng() % 5);
    const int n = k + static_cast<int>(rng() % 40);
    const std::uint64_t m = 1 + rng() % 200;
    const auto f = random_kcnf(n, static_cast<int>(m), k, rng());
    Assignment a(n);
    for (int i = 0; i < n; ++i) a[i] = rng() & 1u;
    const auto ops = beta_eval(f, a).ops;
    const OpCount expected{(k - 1) * m + 2 * (m - 1), m - 1, f.negated_occurrences()};
    bad += !(ops == expected) || !(count_model(f) == expected);
  }
  const auto rep = bench_eval(3, {1000, 2000, 4000, 8000, 16000}, 4, 1);
  const double e = rep.additions_fit ? rep.additions_fit->exponent : -1;
  const auto pub = published_count_model(3, 16000);
  return {bad == 0 && rep.counts_match_model && std::abs(e - 1.0) <= 0.001,
          fmt("%d instances, %zu count mismatches; additions exponent %.6f; published model "
              "at k=3,m=16000 gives %.0f summations vs measured %llu (documented discrepancy)",
              instances, bad, e, pub.summations,
              static_cast<unsigned long long>(rep.rows.back().measured.additions))};
}

std::vector<CorpusEntry> mixed_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> all;
  for (int k = 2; k <= 4; ++k) {
    CorpusParams p;
    p.vars = k == 4 ? 12 : 20;
    p.k = k;
    p.count = 20;
    p.seed = seed + k;
    p.ratios = phase_transition_sweep(k);
    auto part = generate_corpus(p);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

Outcome lp_faithfulness() {
  const auto corpus = mixed_corpus(50);
  std::size_t shape_ok = 0, feasible = 0, exact = 0;
  for (const auto& e : corpus) {
    const auto& f = e.formula;
    const int k = *f.uniform_k();
    const auto s = build_relaxation(f, NegationMode::faithful, BoundMode::k);
    bool shape = s.constraints.size() == f.num_clauses() && s.clause_rows == f.num_clauses();
    for (std::size_t j = 0; shape && j < f.num_clauses(); ++j) {
      const auto& row = s.constraints[j];
      shape = row.bound == k && row.offset == 0 &&
              row.coefficients.size() == f.clauses()[j].width();
      for (const auto& lit : f.clauses()[j].literals()) {
        shape = shape && row.coefficients.count(lit.var - 1) && row.coefficients.at(lit.var - 1) == 1;
      }
    }
    shape_ok += shape;
    const auto sol = solve_feasibility(s, ArithmeticMode::rational);
    if (sol.status == LpStatus::feasible && sol.point) {
      ++feasible;
      exact += satisfies(s, *sol.point, ArithmeticMode::rational) && sgn(max_violation(s, *sol.point)) <= 0;
    }
  }
  const auto n = corpus.size();
  return {shape_ok == n && feasible == n && exact == n,
          fmt("%zu instances: shape %zu, feasible %zu, exact re-verification %zu", n, shape_ok,
              feasible, exact)};
}

Outcome pipeline_refutation() {
  CorpusParams p;
  p.vars = 20;
  p.k = 3;
  p.count = 500;
  p.seed = 6;
  p.ratios = {4.27};
  const auto corpus = generate_corpus(p);
  DiffOptions opts;
  const auto rep = diff_run(corpus, opts);
  const auto again = diff_run(corpus, opts);
  const auto canonical = to_json(rep, true).dump(2);
  const bool deterministic = canonical == to_json(again, true).dump(2);

  std::size_t classified = 0;
  for (const auto& r : rep.records) classified += r.category != Category::instance_error;
  const auto& c = rep.aggregates.counts;
  const auto unsound = c.at(Category::unsound_sat_claim);

  const auto canon = diff_run({{"unsat_2cnf", unsat_2cnf()}}, opts);
  const bool canon_ok = canon.records[0].category == Category::unsound_sat_claim;

  const double agreement = rep.aggregates.decided
                               ? static_cast<double>(rep.aggregates.status_agreements) /
                                     static_cast<double>(rep.aggregates.decided)
                               : 0.0;
  return {classified == corpus.size() && unsound >= 1 && canon_ok && deterministic &&
              rep.aggregates.decided > 0,
          fmt("%zu/%zu classified; sound_sat %zu, unsound_sat_claim %zu, invalid_sat_witness %zu, "
              "budget %zu; status agreement %.3f over %zu decided; 2-var UNSAT 2CNF %s; "
              "rerun %s",
              classified, corpus.size(), c.at(Category::sound_sat), unsound,
              c.at(Category::invalid_sat_witness), c.at(Category::oracle_budget_exceeded),
              agreement, rep.aggregates.decided, canon_ok ? "unsound_sat_claim" : "MISCLASSIFIED",
              deterministic ? "byte-identical" : "DIFFERS")};
}

// Max step count per n over a small k=3 corpus at density 4.27, with its power fit.
struct StepSeries {
  std::vector<double> xs, ys;
  std::string per_n;
  std::optional<PowerFit> fit;
};

StepSeries step_series(const PipelineConfig& cfg, std::initializer_list<int> sizes, int count) {
  StepSeries out;
  for (int n : sizes) {
    CorpusParams p;
    p.vars = n;
    p.k = 3;
    p.count = count;
    p.seed = 7;
    p.ratios = {4.27};
    std::uint64_t max_steps = 0, max_pivots = 0;
    for (const auto& e : generate_corpus(p)) {
      const auto r = solve_ksat_relaxation(e.formula, cfg);
      out.xs.push_back(n);
      out.ys.push_back(static_cast<double>(r.steps.total()));
      max_steps = std::max(max_steps, r.steps.total());
      max_pivots = std::max(max_pivots, r.steps.pivots);
    }
    out.per_n += fmt(" n=%d:%llu/%llu", n, static_cast<unsigned long long>(max_steps),
                     static_cast<unsigned long long>(max_pivots));
  }
  out.fit = fit_power_law(out.xs, out.ys);
  return out;
}

Outcome polynomial_steps() {
  // Gate: the default pipeline (faithful, bound k, phase-1 point). Every row has
  // a nonnegative bound, so the slack basis is already feasible and no pivots occur.
  const auto gated = step_series(PipelineConfig{}, {20, 40, 80, 160}, 3);
  const double e = gated.fit ? gated.fit->exponent : 99;

  // Reported only: affine bound k-1 runs a real phase 1. Bland's rule in exact
  // arithmetic is too slow past n = 80 for the time budget.
  PipelineConfig affine;
  affine.negation = NegationMode::affine;
  affine.bound = BoundMode::k_minus_1;
  const auto extra = step_series(affine, {20, 40, 80}, 1);
  const double ex = extra.fit ? extra.fit->exponent : 99;

  return {gated.fit && e <= 4.0,
          fmt("default config exponent %.3f (max steps/pivots%s); affine k-1, not gated: "
              "exponent %.3f (%s)",
              e, gated.per_n.c_str(), ex, extra.per_n.c_str() + 1)};
}

Outcome oracle_integrity() {
  std::mt19937_64 rng(8);
  std::size_t disagreements = 0, bad_witness = 0, sat = 0;
  const int instances = 500;
  for (int t = 0; t < instances; ++t) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = k + static_cast<int>(rng() % (21 - k));
    const double ratio = phase_transition_sweep(k)[rng() % 5];
    const int m = std::max(1, static_cast<int>(ratio * n));
    const auto f = random_kcnf(n, m, k, rng());
    const auto b = brute_force_sat(f);
    const auto d = dpll_sat(f);
    disagreements += b.status != d.status;
    for (const auto* v : {&b, &d}) {
      if (v->status == SatStatus::sat) bad_witness += !verify(f, *v->witness);
    }
    sat += d.status == SatStatus::sat;
  }
  return {disagreements == 0 && bad_witness == 0,
          fmt("%d instances (%zu sat): %zu disagreements, %zu invalid witnesses", instances, sat,
              disagreements, bad_witness)};
}

Outcome round_trip() {
  auto corpus = mixed_corpus(90);
  corpus.push_back({"unsat_2cnf", unsat_2cnf()});
  std::size_t identical = 0;
  for (const auto& e : corpus) {
    const auto text = write_dimacs(e.formula);
    const auto back = parse_dimacs(text);
    identical += back == e.formula && write_dimacs(back) == text;
  }
  const auto a = to_json(diff_run(mixed_corpus(90), {}), true).dump(2);
  const auto b = to_json(diff_run(mixed_corpus(90), {}), true).dump(2);
  const auto ba = to_json(bench_eval(3, {64, 128, 256}, 9, 1), true).dump(2);
  const auto bb = to_json(bench_eval(3, {64, 128, 256}, 9, 1), true).dump(2);
  return {identical == corpus.size() && a == b && ba == bb,
          fmt("%zu/%zu DIMACS round trips; diff report %s; bench report %s", identical,
              corpus.size(), a == b ? "byte-identical" : "DIFFERS",
              ba == bb ? "byte-identical" : "DIFFERS")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit_s;  // 0: no runtime bound
  };
  const Criterion criteria[] = {
      {"truth-table fidelity", truth_tables, 1},
      {"cardinality and distinctness", cardinalities, 10},
      {"evaluator equivalence", evaluator_equivalence, 0},
      {"operation accounting", operation_accounting, 0},
      {"LP faithfulness", lp_faithfulness, 0},
      {"pipeline refutation", pipeline_refutation, 0},
      {"polynomial-step evidence", polynomial_steps, 300},
      {"oracle integrity", oracle_integrity, 0},
      {"round trip and determinism", round_trip, 0},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.ok = false;
      o.detail += fmt("; runtime %.2fs exceeds %.0fs", secs, c.limit_s);
    }
    failures += !o.ok;
    std::printf("criterion %d %-30s %s  [%.2fs] %s\n", index, c.name, o.ok ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
