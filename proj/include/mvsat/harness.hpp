#pragma once

// Differential experiments: the relaxation pipeline against an exact oracle,
// operation-count scaling, and deterministic corpus generation.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvsat/beta.hpp"
#include "mvsat/cnf.hpp"
#include "mvsat/oracle.hpp"
#include "mvsat/pipeline.hpp"

namespace mvsat {

enum class Category {
  sound_sat,             // sat claim, candidate verifies
  unsound_sat_claim,     // sat claim, candidate fails, oracle unsat
  invalid_sat_witness,   // sat claim, candidate fails, oracle sat
  sound_unsat,           // unsat claim, oracle unsat
  missed_sat,            // unsat claim, oracle sat
  oracle_budget_exceeded,
  instance_error,        // pipeline rejected the instance
};
inline constexpr Category kAllCategories[] = {
    Category::sound_sat,   Category::unsound_sat_claim,      Category::invalid_sat_witness,
    Category::sound_unsat, Category::missed_sat,             Category::oracle_budget_exceeded,
    Category::instance_error,
};
std::string_view to_string(Category c);

enum class OracleOutcome { sat, unsat, budget_exceeded };

/// Pure classification. `claim` is unset when the pipeline errored.
Category classify(std::optional<Claim> claim, std::optional<bool> candidate_verified,
                  std::optional<OracleOutcome> oracle);

struct CorpusEntry {
  std::string id;
  Formula formula;
};

enum class OracleMethod { dpll, brute_force };

struct DiffOptions {
  PipelineConfig pipeline;
  OracleMethod oracle = OracleMethod::dpll;
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned threads = 1;
};

struct DiffRecord {
  std::string id;
  int num_vars = 0;
  std::size_t num_clauses = 0;
  std::optional<Claim> claim;
  std::optional<bool> candidate_verified;
  std::optional<OracleOutcome> oracle;
  Category category = Category::instance_error;
  std::string error;
  std::size_t anomalies = 0;
  std::uint64_t pipeline_steps = 0;
  std::uint64_t pipeline_pivots = 0;
  std::uint64_t oracle_nodes = 0;
  std::optional<std::uint64_t> beta_additions;
  double pipeline_ms = 0;  // excluded from canonical output
  double oracle_ms = 0;
};

/// y ~ coefficient * x^exponent by least squares on logs.
struct PowerFit {
  double exponent = 0;
  double coefficient = 0;
  std::size_t points = 0;
};
/// Needs at least two distinct positive x values; nonpositive pairs are skipped.
std::optional<PowerFit> fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

struct Aggregates {
  std::size_t total = 0;
  std::map<Category, std::size_t> counts;  // every category present, possibly 0
  std::size_t decided = 0;                 // claim and oracle verdict both available
  std::size_t status_agreements = 0;       // claim status equals oracle status
  friend bool operator==(const Aggregates&, const Aggregates&) = default;
};
Aggregates aggregate(const std::vector<DiffRecord>& records);

/// A satisfiable instance and satisfying assignment on which beta evaluates to 1.
struct BetaDivergence {
  std::string instance_id;
  Assignment assignment;
};

/// Satisfying assignment of `f` with beta = 1, searched exhaustively up to
/// `max_vars` variables; `hint` is tried first.
std::optional<Assignment> find_beta_divergence(const Formula& f,
                                               const std::optional<Assignment>& hint = {},
                                               int max_vars = 16);

struct DiffReport {
  DiffOptions config;
  std::vector<DiffRecord> records;
  Aggregates aggregates;
  std::optional<PowerFit> additions_vs_m;
  std::optional<PowerFit> steps_vs_n;
  std::optional<BetaDivergence> beta_divergence;
};

/// Per-instance errors are captured in the record; the batch always completes.
/// Records keep corpus order regardless of `threads`.
DiffReport diff_run(const std::vector<CorpusEntry>& corpus, const DiffOptions& opts);

struct BenchRow {
  std::uint64_t m = 0;
  OpCount measured;
  OpCount predicted;
  double wall_ns = 0;
};

struct BenchReport {
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> sizes;
  std::vector<BenchRow> rows;
  std::optional<PowerFit> additions_fit;
  std::optional<PowerFit> time_fit;
  bool counts_match_model = false;
};

/// beta_eval on one random instance per size (num_vars = max(k, m)).
BenchReport bench_eval(int k, const std::vector<std::uint64_t>& sizes, std::uint64_t seed,
                       int repeats = 5);

struct CorpusParams {
  int vars = 20;
  int clauses = 0;  // used when `ratios` is empty
  int k = 3;
  int count = 10;   // per ratio bucket when sweeping
  std::uint64_t seed = 1;
  std::vector<double> ratios;
};

/// Densities bracketing the satisfiability threshold (about 1 for k=2, 4.27 for k=3).
std::vector<double> phase_transition_sweep(int k);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

std::vector<CorpusEntry> generate_corpus(const CorpusParams& p);
std::vector<std::filesystem::path> write_corpus(const std::filesystem::path& dir,
                                                const std::vector<CorpusEntry>& corpus);
/// All *.cnf files in `dir`, sorted by file name; id is the file stem.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

}  // namespace mvsat
