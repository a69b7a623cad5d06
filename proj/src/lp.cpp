#include "mvsat/lp.hpp"

#include <cmath>
#include <sstream>

#include "mvsat/errors.hpp"

namespace mvsat {

namespace {

template <class S>
struct Arith;

template <>
struct Arith<Rational> {
  static bool pos(const Rational& x) { return sgn(x) > 0; }
  static bool neg(const Rational& x) { return sgn(x) < 0; }
  static bool zero(const Rational& x) { return sgn(x) == 0; }
  static Rational from(const Rational& q) { return q; }
  static Rational to_rational(const Rational& x) { return x; }
  static void clean(Rational&) {}
};

template <>
struct Arith<double> {
  static constexpr double kEps = 1e-9;
  static bool pos(double x) { return x > kEps; }
  static bool neg(double x) { return x < -kEps; }
  static bool zero(double x) { return std::abs(x) <= kEps; }
  static double from(const Rational& q) { return q.get_d(); }
  static Rational to_rational(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-12) x = r;
    return Rational(x);
  }
  static void clean(double& x) {
    if (std::abs(x) < 1e-13) x = 0.0;
  }
};

// Dense tableau for max c.x s.t. A x + s = b, x, s >= 0. Rows with b < 0 are
// negated and receive an artificial variable.
template <class S>
class Simplex {
  using N = Arith<S>;

 public:
  explicit Simplex(const LpSystem& sys) : n_(sys.num_vars), rows_(sys.constraints.size()) {
    std::size_t artificials = 0;
    for (const auto& c : sys.constraints) artificials += sgn(c.bound) < 0;
    first_art_ = n_ + rows_;
    cols_ = first_art_ + artificials;

    tab_.assign(rows_, std::vector<S>(cols_, S(0)));
    rhs_.assign(rows_, S(0));
    basis_.assign(rows_, 0);

    std::size_t next_art = first_art_;
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& c = sys.constraints[i];
      for (const auto& [var, coef] : c.coefficients) {
        if (var < 0 || var >= n_) throw DomainError("constraint references unknown variable");
        tab_[i][var] = N::from(coef);
      }
      tab_[i][n_ + i] = S(1);
      rhs_[i] = N::from(c.bound);
      if (sgn(c.bound) < 0) {
        for (auto& v : tab_[i]) v = -v;
        rhs_[i] = -rhs_[i];
        tab_[i][next_art] = S(1);
        basis_[i] = next_art++;
      } else {
        basis_[i] = n_ + i;
      }
    }
  }

  LpSolution run(const std::optional<std::vector<Rational>>& objective) {
    LpSolution sol;
    if (cols_ > first_art_) {
      std::vector<S> cost(cols_, S(0));
      for (std::size_t j = first_art_; j < cols_; ++j) cost[j] = S(-1);
      load_objective(cost);
      iterate(cols_);
      if (N::neg(obj_value_)) {
        sol.status = LpStatus::infeasible;
        sol.infeasibility = N::to_rational(-obj_value_);
        sol.pivot_steps = pivots_;
        return sol;
      }
      drive_out_artificials();
    }

    if (objective) {
      std::vector<S> cost(cols_, S(0));
      for (int j = 0; j < n_; ++j) cost[j] = N::from((*objective)[j]);
      load_objective(cost);
      if (!iterate(first_art_)) {
        sol.status = LpStatus::unbounded;
        sol.pivot_steps = pivots_;
        return sol;
      }
    }

    std::vector<Rational> point(n_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < static_cast<std::size_t>(n_)) point[basis_[i]] = N::to_rational(rhs_[i]);
    }
    sol.status = LpStatus::feasible;
    if (objective) {
      Rational z = 0;
      for (int j = 0; j < n_; ++j) z += (*objective)[j] * point[j];
      sol.objective_value = z;
    }
    sol.point = std::move(point);
    sol.pivot_steps = pivots_;
    return sol;
  }

 private:
  void load_objective(const std::vector<S>& cost) {
    obj_.assign(cols_, S(0));
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = -cost[j];
    obj_value_ = S(0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const S f = obj_[basis_[i]];
      if (N::zero(f)) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!N::zero(tab_[i][j])) obj_[j] -= f * tab_[i][j];
      }
      obj_value_ -= f * rhs_[i];
    }
  }

  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool iterate(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (N::neg(obj_[j])) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;

      std::size_t leave = rows_;
      S best{};
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!N::pos(tab_[i][enter])) continue;
        S ratio = rhs_[i] / tab_[i][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < first_art_) continue;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (!N::zero(tab_[i][j])) {
          pivot(i, j);
          break;
        }
      }
      // Otherwise the row is redundant; its artificial stays basic at zero and
      // artificial columns never re-enter.
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    auto& prow = tab_[r];
    const S p = prow[c];
    nz_.clear();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (N::zero(prow[j])) {
        prow[j] = S(0);
        continue;
      }
      prow[j] /= p;
      nz_.push_back(j);
    }
    rhs_[r] /= p;

    auto eliminate = [&](std::vector<S>& row, S& rhs) {
      const S f = row[c];
      if (N::zero(f)) return;
      for (std::size_t j : nz_) {
        row[j] -= f * prow[j];
        N::clean(row[j]);
      }
      row[c] = S(0);
      rhs -= f * rhs_[r];
      N::clean(rhs);
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) eliminate(tab_[i], rhs_[i]);
    }
    eliminate(obj_, obj_value_);
    basis_[r] = c;
  }

  int n_;
  std::size_t rows_;
  std::size_t cols_ = 0;
  std::size_t first_art_ = 0;
  std::vector<std::vector<S>> tab_;
  std::vector<S> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<S> obj_;
  S obj_value_{};
  std::vector<std::size_t> nz_;
  std::uint64_t pivots_ = 0;
};

int require_uniform_width(const Formula& f) {
  const auto k = f.uniform_k();
  if (!k) throw UnsupportedInstance("relaxation needs a uniform clause width");
  return *k;
}

}  // namespace

LpSystem build_relaxation(const Formula& f, NegationMode negation, BoundMode bound) {
  LpSystem sys;
  sys.num_vars = f.num_vars();
  if (f.clauses().empty()) return sys;
  const int k = require_uniform_width(f);
  const Rational rhs = bound == BoundMode::k ? k : k - 1;

  for (const auto& clause : f.clauses()) {
    LinearConstraint row;
    for (const auto& lit : clause.literals()) {
      const int j = lit.var - 1;
      if (negation == NegationMode::affine && lit.negated) {
        row.coefficients[j] -= 1;
        row.offset += 1;
      } else {
        row.coefficients[j] += 1;
      }
    }
    // x or not-x in one clause cancels under the affine substitution.
    std::erase_if(row.coefficients, [](const auto& kv) { return sgn(kv.second) == 0; });
    row.bound = rhs - row.offset;
    sys.constraints.push_back(std::move(row));
  }
  sys.clause_rows = sys.constraints.size();

  if (negation == NegationMode::affine) {
    for (int j = 0; j < sys.num_vars; ++j) {
      LinearConstraint box;
      box.coefficients[j] = 1;
      box.bound = 1;
      sys.constraints.push_back(std::move(box));
    }
  }
  return sys;
}

LpSolution solve_feasibility(const LpSystem& s, ArithmeticMode mode) {
  if (s.num_vars < 0) throw DomainError("negative variable count");
  if (s.objective && s.objective->size() != static_cast<std::size_t>(s.num_vars)) {
    throw DomainError("objective length does not match num_vars");
  }
  if (mode == ArithmeticMode::rational) return Simplex<Rational>(s).run(s.objective);
  return Simplex<double>(s).run(s.objective);
}

Rational max_violation(const LpSystem& s, const std::vector<Rational>& point) {
  if (point.size() != static_cast<std::size_t>(s.num_vars)) {
    throw DomainError("point length does not match num_vars");
  }
  Rational worst = 0;
  for (const auto& x : point) {
    if (-x > worst) worst = -x;
  }
  for (const auto& c : s.constraints) {
    Rational lhs = 0;
    for (const auto& [j, coef] : c.coefficients) lhs += coef * point[j];
    Rational excess = lhs - c.bound;
    if (excess > worst) worst = excess;
  }
  return worst;
}

bool satisfies(const LpSystem& s, const std::vector<Rational>& point, ArithmeticMode mode) {
  const Rational v = max_violation(s, point);
  if (mode == ArithmeticMode::rational) return sgn(v) <= 0;
  return v.get_d() <= 1e-9;
}

std::vector<Rational> max_clause_decomposition(const Formula& f, const LpSystem& s,
                                               ArithmeticMode mode) {
  if (s.clause_rows != f.num_clauses()) {
    throw DomainError("system was not built from this formula");
  }
  std::vector<Rational> maxima;
  maxima.reserve(s.clause_rows);
  for (std::size_t i = 0; i < s.clause_rows; ++i) {
    LpSystem probe = s;
    std::vector<Rational> c(s.num_vars, Rational(0));
    for (const auto& [j, coef] : s.constraints[i].coefficients) c[j] = coef;
    probe.objective = std::move(c);
    const auto sol = solve_feasibility(probe, mode);
    if (sol.status == LpStatus::infeasible) throw DomainError("relaxation is infeasible");
    if (sol.status == LpStatus::unbounded) throw DomainError("clause expression is unbounded");
    maxima.push_back(*sol.objective_value + s.constraints[i].offset);
  }
  return maxima;
}

std::uint64_t construction_steps(const LpSystem& s) {
  std::uint64_t steps = 0;
  for (const auto& c : s.constraints) steps += c.coefficients.empty() ? 1 : c.coefficients.size();
  return steps;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string to_text(const LpSystem& s) {
  std::ostringstream os;
  os << "vars " << s.num_vars << ", rows " << s.constraints.size() << " (" << s.clause_rows
     << " clause)\n";
  if (s.objective) {
    os << "maximize";
    bool any = false;
    for (int j = 0; j < s.num_vars; ++j) {
      const auto& c = (*s.objective)[j];
      if (sgn(c) == 0) continue;
      os << (any ? " + " : " ") << format_rational(c) << "*X" << j + 1;
      any = true;
    }
    os << (any ? "\n" : " 0\n");
  }
  for (std::size_t i = 0; i < s.constraints.size(); ++i) {
    const auto& c = s.constraints[i];
    os << (i < s.clause_rows ? "c" : "b") << i + 1 << ":";
    if (c.coefficients.empty()) os << " 0";
    bool first = true;
    for (const auto& [j, coef] : c.coefficients) {
      const bool neg = sgn(coef) < 0;
      Rational mag = neg ? Rational(-coef) : coef;
      os << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
      if (mag != 1) os << format_rational(mag) << "*";
      os << "X" << j + 1;
      first = false;
    }
    os << " <= " << format_rational(c.bound) << '\n';
  }
  os << "X >= 0\n";
  return os.str();
}

}  // namespace mvsat
