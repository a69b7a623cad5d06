#include "mvsat/beta.hpp"

#include <algorithm>

#include "mvsat/errors.hpp"

namespace mvsat {

namespace {

int require_uniform_width(const Formula& f) {
  if (f.clauses().empty()) throw UnsupportedInstance("beta evaluation needs at least one clause");
  const auto k = f.uniform_k();
  if (!k) throw UnsupportedInstance("beta evaluation needs a uniform clause width");
  if (*k < 2) throw UnsupportedInstance("beta evaluation needs clause width >= 2");
  return *k;
}

void require_covering(const Formula& f, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(f.num_vars())) {
    throw DomainError("assignment length does not match num_vars");
  }
}

}  // namespace

int clause_sum(const Clause& c, const Assignment& a, OpCount* ops) {
  const Arity binary(2);
  int sum = 0;
  bool first = true;
  for (const auto& lit : c.literals()) {
    if (lit.var < 1 || static_cast<std::size_t>(lit.var) > a.size()) {
      throw DomainError("clause_sum: variable " + std::to_string(lit.var) + " not covered");
    }
    int value = a[lit.var - 1] ? 0 : 1;
    if (lit.negated) {
      value = gen_g_floor(binary, 1, value).value();
      if (ops) ++ops->negations;
    }
    if (first) {
      sum = value;
      first = false;
    } else {
      sum += value;
      if (ops) ++ops->additions;
    }
  }
  return sum;
}

BetaResult beta_eval(const Formula& f, const Assignment& a) {
  const int k = require_uniform_width(f);
  require_covering(f, a);

  OpCount ops;
  std::vector<int> sums;
  sums.reserve(f.num_clauses());
  for (const auto& c : f.clauses()) sums.push_back(clause_sum(c, a, &ops));

  if (sums.size() == 1) return {LogicValue(sums[0] == 0 ? 0 : 1, Arity(2)), ops};

  const BinaryTable mu = ksat_mu(k);
  int acc = sums.back();
  for (std::size_t j = sums.size() - 1; j-- > 0;) {
    acc = apply_binary(mu, sums[j], acc).value();
    ++ops.mu_calls;
    ops.additions += 2;  // row and column offset of the lookup
  }
  return {LogicValue(acc, Arity(2)), ops};
}

LogicValue beta_closed_form(const Formula& f, const Assignment& a) {
  require_uniform_width(f);
  require_covering(f, a);
  const bool some_clause_all_true =
      std::any_of(f.clauses().begin(), f.clauses().end(), [&](const Clause& c) {
        return std::all_of(c.literals().begin(), c.literals().end(),
                           [&](const Literal& l) { return a[l.var - 1] != l.negated; });
      });
  return LogicValue(some_clause_all_true ? 0 : 1, Arity(2));
}

OpCount count_model(const Formula& f) {
  const int k = require_uniform_width(f);
  const std::uint64_t m = f.num_clauses();
  return OpCount{static_cast<std::uint64_t>(k - 1) * m + 2 * (m - 1), m - 1,
                 f.negated_occurrences()};
}

PublishedCount published_count_model(int k, std::uint64_t m) {
  const double md = static_cast<double>(m);
  const double mu = md / k - 1.0;
  return PublishedCount{(k - 1) * md / k, mu, 2.0 * mu};
}

}  // namespace mvsat
