#pragma once

// Clause-sum evaluation of a uniform k-CNF through right-nested applications
// of ksat_mu, with exact counts of the primitive operations performed.

#include <cstdint>
#include <vector>

#include "mvsat/cnf.hpp"
#include "mvsat/mvlogic.hpp"

namespace mvsat {

struct OpCount {
  std::uint64_t additions = 0;  // clause-sum additions plus 2 per table lookup
  std::uint64_t mu_calls = 0;
  std::uint64_t negations = 0;

  friend bool operator==(const OpCount&, const OpCount&) = default;
};

struct BetaResult {
  LogicValue value;  // arity 2, 0 is true
  OpCount ops;
};

/// Sum of zero-true encoded literal values; a negated literal is complemented with g(2, 1, .).
/// Result lies in [0, width]. `ops` may be null.
int clause_sum(const Clause& c, const Assignment& a, OpCount* ops = nullptr);

/// beta = mu(s_1, mu(s_2, ..., mu(s_{m-1}, s_m))). Requires a uniform width k >= 2
/// and at least one clause, otherwise throws UnsupportedInstance.
BetaResult beta_eval(const Formula& f, const Assignment& a);

/// Independent characterization of beta_eval: 0 iff some clause has every
/// literal satisfied.
LogicValue beta_closed_form(const Formula& f, const Assignment& a);

/// Predicted counts: (k-1)m + 2(m-1) additions, m-1 mu calls, one negation per
/// negated literal occurrence.
OpCount count_model(const Formula& f);

/// The published operation-count coefficients (summations (k-1)m/k, mu calls m/k - 1),
/// kept for reporting against the measured counts.
struct PublishedCount {
  double summations;
  double mu_calls;
  double table_additions;  // 2 per mu call
};
PublishedCount published_count_model(int k, std::uint64_t m);

}  // namespace mvsat
