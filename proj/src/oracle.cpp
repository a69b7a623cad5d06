#include "mvsat/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace mvsat {

namespace {

constexpr std::int8_t kUnset = -1;

class Dpll {
 public:
  Dpll(const Formula& f, std::uint64_t budget) : num_vars_(f.num_vars()), budget_(budget) {
    for (const auto& c : f.clauses()) {
      auto& lits = clauses_.emplace_back();
      for (const auto& l : c.literals()) lits.push_back(l.to_dimacs());
    }
  }

  OracleVerdict run() {
    std::vector<std::int8_t> values(num_vars_ + 1, kUnset);
    OracleVerdict v;
    if (search(values)) {
      v.status = SatStatus::sat;
      Assignment a(num_vars_);
      for (int i = 1; i <= num_vars_; ++i) a[i - 1] = values[i] == 1;
      v.witness = std::move(a);
    }
    v.nodes_explored = nodes_;
    return v;
  }

 private:
  static int lit_value(const std::vector<std::int8_t>& values, int lit) {
    const auto x = values[std::abs(lit)];
    if (x == kUnset) return kUnset;
    return lit > 0 ? x : 1 - x;
  }

  // Propagates units and pure literals to a fixpoint. False on conflict.
  bool simplify(std::vector<std::int8_t>& values) const {
    std::vector<std::int8_t> polarity(num_vars_ + 1);
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& c : clauses_) {
        int unassigned = 0;
        int last = 0;
        bool satisfied = false;
        for (int lit : c) {
          const int lv = lit_value(values, lit);
          if (lv == 1) {
            satisfied = true;
            break;
          }
          if (lv == kUnset) {
            ++unassigned;
            last = lit;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          values[std::abs(last)] = last > 0 ? 1 : 0;
          changed = true;
        }
      }
      if (changed) continue;

      // bit 0: occurs positively, bit 1: occurs negatively, in an open clause
      std::fill(polarity.begin(), polarity.end(), 0);
      for (const auto& c : clauses_) {
        bool satisfied = false;
        for (int lit : c) satisfied = satisfied || lit_value(values, lit) == 1;
        if (satisfied) continue;
        for (int lit : c) {
          if (values[std::abs(lit)] == kUnset) polarity[std::abs(lit)] |= lit > 0 ? 1 : 2;
        }
      }
      for (int v = 1; v <= num_vars_; ++v) {
        if (polarity[v] == 1 || polarity[v] == 2) {
          values[v] = polarity[v] == 1 ? 1 : 0;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search(std::vector<std::int8_t>& values) {
    if (++nodes_ > budget_) throw BudgetExceeded(nodes_);
    if (!simplify(values)) return false;

    int branch = 0;
    for (const auto& c : clauses_) {
      bool satisfied = false;
      for (int lit : c) satisfied = satisfied || lit_value(values, lit) == 1;
      if (satisfied) continue;
      for (int lit : c) {
        const int v = std::abs(lit);
        if (values[v] == kUnset && (branch == 0 || v < branch)) branch = v;
      }
    }
    if (branch == 0) {
      for (int v = 1; v <= num_vars_; ++v) {
        if (values[v] == kUnset) values[v] = 0;
      }
      return true;
    }
    for (std::int8_t choice : {std::int8_t{0}, std::int8_t{1}}) {
      auto trial = values;
      trial[branch] = choice;
      if (search(trial)) {
        values = std::move(trial);
        return true;
      }
    }
    return false;
  }

  int num_vars_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<int>> clauses_;
};

}  // namespace

OracleVerdict brute_force_sat(const Formula& f) {
  if (f.num_vars() > kBruteForceMaxVars) {
    throw ResourceError("brute_force_sat: " + std::to_string(f.num_vars()) +
                        " variables exceeds limit of " + std::to_string(kBruteForceMaxVars));
  }
  struct Masks {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
  };
  std::vector<Masks> clauses;
  clauses.reserve(f.num_clauses());
  for (const auto& c : f.clauses()) {
    Masks m;
    for (const auto& l : c.literals()) (l.negated ? m.neg : m.pos) |= 1u << (l.var - 1);
    clauses.push_back(m);
  }

  OracleVerdict v;
  const std::uint64_t total = std::uint64_t{1} << f.num_vars();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    ++v.nodes_explored;
    const auto x = static_cast<std::uint32_t>(bits);
    bool ok = true;
    for (const auto& m : clauses) {
      if (((x & m.pos) | (~x & m.neg)) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment a(f.num_vars());
      for (int i = 0; i < f.num_vars(); ++i) a[i] = (x >> i) & 1u;
      v.status = SatStatus::sat;
      v.witness = std::move(a);
      return v;
    }
  }
  return v;
}

OracleVerdict dpll_sat(const Formula& f, std::uint64_t node_budget) {
  return Dpll(f, node_budget).run();
}

bool verify(const Formula& f, const Assignment& a) { return eval_reference(f, a); }

}  // namespace mvsat
