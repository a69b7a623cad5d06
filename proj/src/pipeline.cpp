#include "mvsat/pipeline.hpp"

#include "mvsat/errors.hpp"
#include "mvsat/mvlogic.hpp"

namespace mvsat {

std::pair<Assignment, std::vector<Anomaly>> round_assignment(const LpSolution& sol, int base) {
  if (sol.status != LpStatus::feasible || !sol.point) {
    throw DomainError("round_assignment: solution is not feasible");
  }
  const Arity arity(base);
  Assignment out;
  std::vector<Anomaly> anomalies;
  out.reserve(sol.point->size());
  mpz_class fl;
  for (std::size_t i = 0; i < sol.point->size(); ++i) {
    const Rational& x = (*sol.point)[i];
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    // Reduce before narrowing; gen_g only depends on floor(x) mod base.
    mpz_class residue;
    mpz_fdiv_r_ui(residue.get_mpz_t(), fl.get_mpz_t(), static_cast<unsigned long>(base));
    const int v = gen_g_floor(arity, 0, residue.get_si()).value();
    if (v > 1) {
      anomalies.push_back(Anomaly{static_cast<int>(i) + 1, x, v});
      out.push_back(false);
    } else {
      out.push_back(v == 0);
    }
  }
  return {std::move(out), std::move(anomalies)};
}

PipelineResult solve_ksat_relaxation(const Formula& f, const PipelineConfig& cfg) {
  PipelineResult res;
  LpSystem sys = build_relaxation(f, cfg.negation, cfg.bound);
  if (!f.clauses().empty() && *f.uniform_k() < 2) {
    throw UnsupportedInstance("pipeline needs clause width >= 2");
  }
  res.rounding_base = cfg.rounding == RoundingBase::two || f.clauses().empty()
                          ? 2
                          : *f.uniform_k();

  if (cfg.objective == Objective::maximize_sum) {
    // Variables absent from every clause stay at 0 so the program remains bounded.
    std::vector<Rational> c(sys.num_vars, Rational(0));
    for (const auto& clause : f.clauses()) {
      for (const auto& lit : clause.literals()) c[lit.var - 1] = 1;
    }
    sys.objective = std::move(c);
  }

  res.steps.construction = construction_steps(sys);
  res.lp = solve_feasibility(sys, cfg.arithmetic);
  res.steps.pivots = res.lp.pivot_steps;

  switch (res.lp.status) {
    case LpStatus::infeasible:
      res.claimed_status = Claim::unsat_claim;
      return res;
    case LpStatus::unbounded:
      throw DomainError("relaxation objective is unbounded");
    case LpStatus::feasible:
      break;
  }
  auto [assignment, anomalies] = round_assignment(res.lp, res.rounding_base);
  res.steps.rounding = assignment.size();
  res.claimed_status = Claim::sat_claim;
  res.rounded = std::move(assignment);
  res.anomalies = std::move(anomalies);
  return res;
}

}  // namespace mvsat
