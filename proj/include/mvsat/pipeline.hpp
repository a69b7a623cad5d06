#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mvsat/cnf.hpp"
#include "mvsat/lp.hpp"

namespace mvsat {

enum class RoundingBase { two, width };  // g^2_0 or g^k_0
enum class Objective { none, maximize_sum };

struct PipelineConfig {
  NegationMode negation = NegationMode::faithful;
  BoundMode bound = BoundMode::k;
  RoundingBase rounding = RoundingBase::two;
  Objective objective = Objective::none;
  ArithmeticMode arithmetic = ArithmeticMode::rational;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

enum class Claim { sat_claim, unsat_claim };

/// A coordinate whose rounded value fell outside {0, 1}.
struct Anomaly {
  int var;  // 1-based
  Rational raw;
  int rounded;
};

struct PipelineSteps {
  std::uint64_t construction = 0;
  std::uint64_t pivots = 0;
  std::uint64_t rounding = 0;
  std::uint64_t total() const noexcept { return construction + pivots + rounding; }
};

struct PipelineResult {
  Claim claimed_status = Claim::unsat_claim;
  std::optional<Assignment> rounded;  // present iff sat_claim
  LpSolution lp;
  std::vector<Anomaly> anomalies;
  std::optional<bool> verified;  // filled by an oracle cross-check, never by the pipeline
  int rounding_base = 2;
  PipelineSteps steps;
};

/// X~_i = floor(X_i) mod base, decoded with 0 as true. Values outside {0,1}
/// become anomalies and decode as false. Throws DomainError unless feasible.
std::pair<Assignment, std::vector<Anomaly>> round_assignment(const LpSolution& sol, int base);

/// Relax, solve, round. Never consults an oracle.
PipelineResult solve_ksat_relaxation(const Formula& f, const PipelineConfig& cfg = {});

}  // namespace mvsat
