#include "mvsat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "mvsat/errors.hpp"

namespace mvsat {

namespace fs = std::filesystem;

std::string_view to_string(Category c) {
  switch (c) {
    case Category::sound_sat: return "sound_sat";
    case Category::unsound_sat_claim: return "unsound_sat_claim";
    case Category::invalid_sat_witness: return "invalid_sat_witness";
    case Category::sound_unsat: return "sound_unsat";
    case Category::missed_sat: return "missed_sat";
    case Category::oracle_budget_exceeded: return "oracle_budget_exceeded";
    case Category::instance_error: return "instance_error";
  }
  return "unknown";
}

Category classify(std::optional<Claim> claim, std::optional<bool> candidate_verified,
                  std::optional<OracleOutcome> oracle) {
  if (!claim) return Category::instance_error;
  if (*claim == Claim::sat_claim && candidate_verified.value_or(false)) {
    // A verified candidate is its own proof; no oracle needed.
    return Category::sound_sat;
  }
  if (!oracle || *oracle == OracleOutcome::budget_exceeded) return Category::oracle_budget_exceeded;
  const bool oracle_sat = *oracle == OracleOutcome::sat;
  if (*claim == Claim::sat_claim) {
    return oracle_sat ? Category::invalid_sat_witness : Category::unsound_sat_claim;
  }
  return oracle_sat ? Category::missed_sat : Category::sound_unsat;
}

std::optional<PowerFit> fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DomainError("fit_power_law: size mismatch");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0 && y[i] > 0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  if (lx.size() < 2) return std::nullopt;
  const double n = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx <= 0) return std::nullopt;
  const double slope = sxy / sxx;
  return PowerFit{slope, std::exp(my - slope * mx), lx.size()};
}

Aggregates aggregate(const std::vector<DiffRecord>& records) {
  Aggregates a;
  for (auto c : kAllCategories) a.counts[c] = 0;
  a.total = records.size();
  for (const auto& r : records) {
    ++a.counts[r.category];
    if (r.claim && r.oracle && *r.oracle != OracleOutcome::budget_exceeded) {
      ++a.decided;
      const bool claim_sat = *r.claim == Claim::sat_claim;
      const bool oracle_sat = *r.oracle == OracleOutcome::sat;
      a.status_agreements += claim_sat == oracle_sat;
    }
  }
  return a;
}

std::optional<Assignment> find_beta_divergence(const Formula& f,
                                               const std::optional<Assignment>& hint,
                                               int max_vars) {
  if (f.clauses().empty() || !f.uniform_k() || *f.uniform_k() < 2) return std::nullopt;
  auto diverges = [&](const Assignment& a) {
    return eval_reference(f, a) && beta_eval(f, a).value.value() == 1;
  };
  if (hint && diverges(*hint)) return hint;
  if (f.num_vars() > max_vars) return std::nullopt;
  const std::uint64_t total = std::uint64_t{1} << f.num_vars();
  Assignment a(f.num_vars());
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int i = 0; i < f.num_vars(); ++i) a[i] = (bits >> i) & 1u;
    if (diverges(a)) return a;
  }
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Evaluated {
  DiffRecord record;
  std::optional<Assignment> oracle_witness;
};

Evaluated evaluate(const CorpusEntry& entry, const DiffOptions& opts) {
  Evaluated out;
  DiffRecord& r = out.record;
  r.id = entry.id;
  r.num_vars = entry.formula.num_vars();
  r.num_clauses = entry.formula.num_clauses();

  auto t0 = Clock::now();
  try {
    const auto res = solve_ksat_relaxation(entry.formula, opts.pipeline);
    r.claim = res.claimed_status;
    r.anomalies = res.anomalies.size();
    r.pipeline_steps = res.steps.total();
    r.pipeline_pivots = res.steps.pivots;
    if (res.rounded) r.candidate_verified = verify(entry.formula, *res.rounded);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.pipeline_ms = ms_since(t0);

  if (r.claim) {
    t0 = Clock::now();
    try {
      const auto verdict = opts.oracle == OracleMethod::brute_force
                               ? brute_force_sat(entry.formula)
                               : dpll_sat(entry.formula, opts.node_budget);
      r.oracle = verdict.status == SatStatus::sat ? OracleOutcome::sat : OracleOutcome::unsat;
      r.oracle_nodes = verdict.nodes_explored;
      out.oracle_witness = verdict.witness;
    } catch (const BudgetExceeded& e) {
      r.oracle = OracleOutcome::budget_exceeded;
      r.oracle_nodes = e.nodes();
    } catch (const ResourceError&) {
      r.oracle = OracleOutcome::budget_exceeded;
    }
    r.oracle_ms = ms_since(t0);

    const auto& f = entry.formula;
    if (f.uniform_k() && *f.uniform_k() >= 2 && !f.clauses().empty()) {
      r.beta_additions = beta_eval(f, Assignment(f.num_vars(), false)).ops.additions;
    }
  }
  r.category = classify(r.claim, r.candidate_verified, r.oracle);
  return out;
}

}  // namespace

DiffReport diff_run(const std::vector<CorpusEntry>& corpus, const DiffOptions& opts) {
  DiffReport report;
  report.config = opts;
  std::vector<Evaluated> results(corpus.size());

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, corpus.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) results[i] = evaluate(corpus[i], opts);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
          results[i] = evaluate(corpus[i], opts);
        }
      });
    }
  }

  std::vector<double> m_x, add_y, n_x, steps_y;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& rec = results[i].record;
    if (rec.beta_additions) {
      m_x.push_back(static_cast<double>(rec.num_clauses));
      add_y.push_back(static_cast<double>(*rec.beta_additions));
    }
    if (rec.claim) {
      n_x.push_back(rec.num_vars);
      steps_y.push_back(static_cast<double>(rec.pipeline_steps));
    }
    if (!report.beta_divergence && rec.oracle == OracleOutcome::sat) {
      if (auto w = find_beta_divergence(corpus[i].formula, results[i].oracle_witness)) {
        report.beta_divergence = BetaDivergence{rec.id, std::move(*w)};
      }
    }
    report.records.push_back(std::move(rec));
  }
  report.aggregates = aggregate(report.records);
  report.additions_vs_m = fit_power_law(m_x, add_y);
  report.steps_vs_n = fit_power_law(n_x, steps_y);
  return report;
}

BenchReport bench_eval(int k, const std::vector<std::uint64_t>& sizes, std::uint64_t seed,
                       int repeats) {
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    throw DomainError("bench_eval: sizes must be ascending");
  }
  BenchReport rep;
  rep.k = k;
  rep.seed = seed;
  rep.sizes = sizes;
  rep.counts_match_model = true;
  std::vector<double> xs, adds, times;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const auto m = sizes[i];
    const int vars = std::max<int>(k, static_cast<int>(m));
    const Formula f = random_kcnf(vars, static_cast<int>(m), k, derive_seed(seed, i));
    std::mt19937_64 rng(derive_seed(seed ^ 0xa5a5a5a5ULL, i));
    Assignment a(vars);
    for (int v = 0; v < vars; ++v) a[v] = (rng() >> 63) != 0;

    BenchRow row;
    row.m = m;
    row.predicted = count_model(f);
    double best = INFINITY;
    for (int r = 0; r < std::max(1, repeats); ++r) {
      const auto t0 = Clock::now();
      const auto res = beta_eval(f, a);
      const double ns = std::chrono::duration<double, std::nano>(Clock::now() - t0).count();
      best = std::min(best, ns);
      row.measured = res.ops;
    }
    row.wall_ns = best;
    rep.counts_match_model = rep.counts_match_model && row.measured == row.predicted;
    xs.push_back(static_cast<double>(m));
    adds.push_back(static_cast<double>(row.measured.additions));
    times.push_back(best);
    rep.rows.push_back(row);
  }
  rep.additions_fit = fit_power_law(xs, adds);
  rep.time_fit = fit_power_law(xs, times);
  return rep;
}

std::vector<double> phase_transition_sweep(int k) {
  if (k == 2) return {0.5, 0.75, 1.0, 1.25, 1.5};
  if (k == 3) return {3.5, 4.0, 4.27, 4.5, 5.0};
  // Leading-order threshold 2^k ln 2 for larger k.
  const double center = std::ldexp(std::log(2.0), k);
  return {0.8 * center, 0.9 * center, center, 1.1 * center, 1.2 * center};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<CorpusEntry> generate_corpus(const CorpusParams& p) {
  if (p.count < 0) throw DomainError("corpus count must be >= 0");
  std::vector<CorpusEntry> out;
  std::uint64_t index = 0;
  auto emit = [&](int clauses, const std::string& tag) {
    for (int i = 0; i < p.count; ++i) {
      char id[96];
      std::snprintf(id, sizeof id, "k%d_n%d_m%d%s_%05d", p.k, p.vars, clauses, tag.c_str(), i);
      out.push_back({id, random_kcnf(p.vars, clauses, p.k, derive_seed(p.seed, index++))});
    }
  };
  if (p.ratios.empty()) {
    emit(p.clauses, "");
  } else {
    for (double r : p.ratios) {
      char tag[32];
      std::snprintf(tag, sizeof tag, "_r%.2f", r);
      emit(static_cast<int>(std::lround(r * p.vars)), tag);
    }
  }
  return out;
}

std::vector<fs::path> write_corpus(const fs::path& dir, const std::vector<CorpusEntry>& corpus) {
  fs::create_directories(dir);
  std::vector<fs::path> paths;
  for (const auto& e : corpus) {
    auto path = dir / (e.id + ".cnf");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << write_dimacs(e.formula);
    paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<CorpusEntry> load_corpus(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& ent : fs::directory_iterator(dir)) {
    if (ent.is_regular_file() && ent.path().extension() == ".cnf") files.push_back(ent.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    out.push_back({path.stem().string(), parse_dimacs(in)});
  }
  return out;
}

}  // namespace mvsat
