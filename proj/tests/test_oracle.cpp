#include <doctest.h>

#include <random>

#include "mvsat/oracle.hpp"

using namespace mvsat;

namespace {

Formula make(int vars, std::initializer_list<std::initializer_list<int>> clauses) {
  std::vector<Clause> cs;
  for (auto c : clauses) {
    std::vector<Literal> lits;
    for (int l : c) lits.push_back(Literal::from_dimacs(l));
    cs.emplace_back(std::move(lits));
  }
  return Formula(vars, std::move(cs));
}

bool exhaustively_unsat(const Formula& f) {
  Assignment a(f.num_vars());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.num_vars()); ++bits) {
    for (int i = 0; i < f.num_vars(); ++i) a[i] = (bits >> i) & 1u;
    if (eval_reference(f, a)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("brute_force_sat examples") {
  const auto v = brute_force_sat(make(2, {{1, 2}}));
  REQUIRE(v.status == SatStatus::sat);
  CHECK(verify(make(2, {{1, 2}}), *v.witness));
  CHECK(*v.witness == Assignment{true, false});  // first in counting order

  const auto u = brute_force_sat(make(2, {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}}));
  CHECK(u.status == SatStatus::unsat);
  CHECK_FALSE(u.witness.has_value());
  CHECK(u.nodes_explored == 4);

  const auto e = brute_force_sat(Formula());
  CHECK(e.status == SatStatus::sat);
  CHECK(e.witness == Assignment{});

  CHECK_THROWS_AS(brute_force_sat(Formula(27, {})), ResourceError);
}

TEST_CASE("dpll unit propagation and pure literals") {
  // (x1) ^ (-x1 v x2) ^ (-x2 v -x3) ^ (x3 v -x1 v x2): forced entirely by propagation.
  const auto f = make(3, {{1}, {-1, 2}, {-2, -3}, {3, -1, 2}});
  const auto v = dpll_sat(f);
  REQUIRE(v.status == SatStatus::sat);
  CHECK((*v.witness)[0]);
  CHECK(v.nodes_explored == 1);

  const auto g = make(4, {{1, 2}, {2, 3, 4}, {1, 4}});
  const auto w = dpll_sat(g);
  CHECK(w.status == SatStatus::sat);
  CHECK(w.nodes_explored == 1);
  CHECK(*w.witness == Assignment(4, true));

  const auto u = dpll_sat(make(1, {{1}, {-1}}));
  CHECK(u.status == SatStatus::unsat);
  CHECK(dpll_sat(Formula()).status == SatStatus::sat);
}

TEST_CASE("dpll branches false first on the lowest variable") {
  // Both polarities of every variable occur, so no propagation applies at the root.
  const auto f = make(2, {{1, 2}, {-1, -2}});
  const auto v = dpll_sat(f);
  REQUIRE(v.status == SatStatus::sat);
  CHECK(*v.witness == Assignment{false, true});
  CHECK(v.nodes_explored == 2);
}

TEST_CASE("dpll reports budget exhaustion rather than a verdict") {
  const auto f = make(2, {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}});
  CHECK_THROWS_AS(dpll_sat(f, 1), BudgetExceeded);
  CHECK(dpll_sat(f, 100).status == SatStatus::unsat);
}

TEST_CASE("dpll agrees with brute force on 500 seeded instances") {
  std::mt19937_64 rng(8);
  int sat = 0, unsat = 0;
  for (int t = 0; t < 500; ++t) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = k + static_cast<int>(rng() % (17 - k));
    const double ratio = k == 2 ? 1.0 : (k == 3 ? 4.27 : 9.9);
    const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(2 * ratio * n));
    const auto f = random_kcnf(n, m, k, rng());
    const auto b = brute_force_sat(f);
    const auto d = dpll_sat(f);
    REQUIRE(b.status == d.status);
    if (d.status == SatStatus::sat) {
      REQUIRE(verify(f, *d.witness));
      REQUIRE(verify(f, *b.witness));
      ++sat;
    } else {
      REQUIRE(exhaustively_unsat(f));
      ++unsat;
    }
  }
  CHECK(sat > 50);
  CHECK(unsat > 50);
}
