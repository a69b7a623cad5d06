#pragma once

// Ground-truth satisfiability: exhaustive enumeration and a plain DPLL.

#include <cstdint>
#include <optional>

#include "mvsat/cnf.hpp"
#include "mvsat/errors.hpp"

namespace mvsat {

enum class SatStatus { sat, unsat };

struct OracleVerdict {
  SatStatus status = SatStatus::unsat;
  std::optional<Assignment> witness;  // present iff sat
  std::uint64_t nodes_explored = 0;
};

/// Thrown when DPLL exhausts its node budget. Never reported as a verdict.
class BudgetExceeded : public ResourceError {
 public:
  explicit BudgetExceeded(std::uint64_t nodes)
      : ResourceError("node budget exceeded after " + std::to_string(nodes) + " nodes"),
        nodes_(nodes) {}
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

inline constexpr int kBruteForceMaxVars = 26;
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Assignments enumerated as binary counters, bit i being variable i+1
/// (0 = false). Returns the first satisfying one.
OracleVerdict brute_force_sat(const Formula& f);

/// Unit propagation, pure-literal elimination, then branching on the lowest
/// unassigned variable, false first.
OracleVerdict dpll_sat(const Formula& f, std::uint64_t node_budget = kDefaultNodeBudget);

bool verify(const Formula& f, const Assignment& a);

}  // namespace mvsat
