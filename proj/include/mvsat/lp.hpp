#pragma once

// Linear relaxation of a uniform k-CNF and a dense two-phase simplex solver.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvsat/cnf.hpp"

namespace mvsat {

using Rational = mpq_class;

/// sum_j coefficients[j] * X_j <= bound, with X_j >= 0 implied.
/// `offset` is the constant moved to the right-hand side when the row was built,
/// so the clause expression itself is offset + sum_j coefficients[j] * X_j.
struct LinearConstraint {
  std::map<int, Rational> coefficients;  // 0-based variable index
  Rational bound;
  Rational offset;
};

enum class NegationMode { faithful, affine };
enum class BoundMode { k, k_minus_1 };
enum class ArithmeticMode { rational, floating };

struct LpSystem {
  int num_vars = 0;
  std::vector<LinearConstraint> constraints;
  std::size_t clause_rows = 0;  // constraints [0, clause_rows) are one per clause
  std::optional<std::vector<Rational>> objective;  // maximize when present
};

enum class LpStatus { feasible, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::optional<std::vector<Rational>> point;  // present iff feasible
  std::optional<Rational> objective_value;
  std::optional<Rational> infeasibility;  // phase-1 optimum: sum of artificials, > 0
  std::uint64_t pivot_steps = 0;
};

/// One row per clause. Faithful mode sums the clause's variables and ignores
/// polarity; affine mode uses 1 - X for negated literals and adds X <= 1 boxes.
/// The right-hand side is k or k-1. Throws UnsupportedInstance on mixed widths.
LpSystem build_relaxation(const Formula& f, NegationMode negation, BoundMode bound);

/// Two-phase simplex with Bland's rule. Without an objective the phase-1 basic
/// feasible solution is returned; with one, an optimal vertex or unbounded.
LpSolution solve_feasibility(const LpSystem& s, ArithmeticMode mode = ArithmeticMode::rational);

/// Largest violation of any row or sign constraint; zero when the point is feasible.
Rational max_violation(const LpSystem& s, const std::vector<Rational>& point);

/// Exact check in rational mode, |violation| <= 1e-9 in floating mode.
bool satisfies(const LpSystem& s, const std::vector<Rational>& point,
               ArithmeticMode mode = ArithmeticMode::rational);

/// For each clause row, the maximum of its clause expression subject to the whole system.
std::vector<Rational> max_clause_decomposition(const Formula& f, const LpSystem& s,
                                               ArithmeticMode mode = ArithmeticMode::rational);

/// Number of coefficient entries written while building the system.
std::uint64_t construction_steps(const LpSystem& s);

std::string format_rational(const Rational& q);
std::string to_text(const LpSystem& s);

}  // namespace mvsat
