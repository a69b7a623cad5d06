#include <doctest.h>

#include <random>

#include "mvsat/beta.hpp"
#include "mvsat/errors.hpp"
#include "reference_tables.hpp"

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

// Right fold over the literal combiner table: mu(a, b) = 0 iff a = 0 or b = 0.
int fold_sums(const std::vector<int>& sums) {
  if (sums.size() == 1) return sums[0] == 0 ? 0 : 1;
  int acc = sums.back();
  for (std::size_t j = sums.size() - 1; j-- > 0;) acc = (sums[j] == 0 || acc == 0) ? 0 : 1;
  return acc;
}

// Variable-disjoint all-positive k-CNF plus an assignment realizing the given
// clause sums: clause j has its first sums[j] literals false.
std::pair<Formula, Assignment> realize(const std::vector<int>& sums, int k) {
  const int m = static_cast<int>(sums.size());
  std::vector<Clause> cs;
  Assignment a(m * k);
  for (int j = 0; j < m; ++j) {
    std::vector<Literal> lits;
    for (int i = 0; i < k; ++i) {
      lits.push_back(Literal{j * k + i + 1, false});
      a[j * k + i] = i >= sums[j];
    }
    cs.emplace_back(std::move(lits));
  }
  return {Formula(m * k, std::move(cs)), a};
}

}  // namespace

TEST_CASE("clause_sum examples") {
  const auto f = make(2, {{1, 2}, {-1, 2}, {-1, -2}});
  CHECK(clause_sum(f.clauses()[0], {true, false}) == 1);
  CHECK(clause_sum(f.clauses()[1], {true, true}) == 1);
  CHECK(clause_sum(f.clauses()[2], {false, false}) == 0);

  OpCount ops;
  clause_sum(f.clauses()[2], {false, false}, &ops);
  CHECK(ops == OpCount{1, 0, 2});
  CHECK_THROWS_AS(clause_sum(f.clauses()[0], {true}), DomainError);
}

TEST_CASE("beta_eval examples") {
  {
    auto [f, a] = realize({0, 2}, 2);
    CHECK(beta_eval(f, a).value.value() == 0);
  }
  {
    auto [f, a] = realize({0}, 2);
    CHECK(beta_eval(f, a).value.value() == 0);
  }
}

TEST_CASE("beta_eval diverges from CNF semantics on a 4-variable instance") {
  // (x1 v x2) ^ (x3 v x4). Nested evaluation against the transcribed 3x3 table,
  // independent of ksat_mu, over all 16 assignments.
  const auto f = make(4, {{1, 2}, {3, 4}});
  int witnesses = 0;
  for (int bits = 0; bits < 16; ++bits) {
    Assignment a(4);
    for (int i = 0; i < 4; ++i) a[i] = (bits >> i) & 1;
    const int s1 = (a[0] ? 0 : 1) + (a[1] ? 0 : 1);
    const int s2 = (a[2] ? 0 : 1) + (a[3] ? 0 : 1);
    const int expected = testdata::kMu2[s1][s2];
    REQUIRE(beta_eval(f, a).value.value() == expected);
    if (expected == 1 && eval_reference(f, a)) ++witnesses;
  }
  // Sums (1,1): one true literal per clause, formula true, beta false. Four such assignments.
  CHECK(witnesses == 4);
  const Assignment w{true, false, true, false};
  CHECK(eval_reference(f, w));
  CHECK(beta_eval(f, w).value.value() == 1);
}

TEST_CASE("closed form equals nested evaluation on every sum tuple, m <= 4, k <= 4") {
  std::size_t tuples = 0;
  for (int k = 2; k <= 4; ++k) {
    for (int m = 1; m <= 4; ++m) {
      std::vector<int> sums(m, 0);
      for (;;) {
        auto [f, a] = realize(sums, k);
        const int nested = beta_eval(f, a).value.value();
        REQUIRE(nested == fold_sums(sums));
        REQUIRE(beta_closed_form(f, a).value() == nested);
        ++tuples;
        int i = 0;
        while (i < m && ++sums[i] > k) sums[i++] = 0;
        if (i == m) break;
      }
    }
  }
  CHECK(tuples == 3 + 9 + 27 + 81 + 4 + 16 + 64 + 256 + 5 + 25 + 125 + 625);

  auto value_for = [](std::vector<int> sums, int k) {
    auto [f, a] = realize(sums, k);
    return beta_closed_form(f, a).value();
  };
  CHECK(value_for({0, 2}, 2) == 0);
  CHECK(value_for({1, 1}, 2) == 1);
  CHECK(value_for({2, 2, 2}, 2) == 1);
}

TEST_CASE("count_model examples") {
  const auto f = make(4, {{1, 2}, {3, 4}});
  CHECK(count_model(f) == OpCount{4, 1, 0});
  CHECK(beta_eval(f, Assignment(4, true)).ops == count_model(f));

  const auto g = make(3, {{1, 2, 3}});
  CHECK(count_model(g).additions == 2);
  CHECK(count_model(g).mu_calls == 0);

  const auto h = make(4, {{-1, 2}, {-3, -4}, {1, -2}});
  CHECK(count_model(h).negations == 4);
  CHECK(beta_eval(h, Assignment(4, false)).ops == count_model(h));
}

TEST_CASE("measured operations equal the count model and values stay binary") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 500; ++t) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const int n = k + static_cast<int>(rng() % 10);
    const int m = 1 + static_cast<int>(rng() % 30);
    const auto f = random_kcnf(n, m, k, rng());
    Assignment a(n);
    for (int i = 0; i < n; ++i) a[i] = rng() & 1u;
    const auto r = beta_eval(f, a);
    REQUIRE(r.ops == count_model(f));
    REQUIRE((r.value.value() == 0 || r.value.value() == 1));
    REQUIRE(r.value == beta_closed_form(f, a));
  }
}

TEST_CASE("additions grow exactly linearly in the clause count") {
  for (int k = 2; k <= 5; ++k) {
    for (std::uint64_t m = 1; m <= 64; m *= 2) {
      const auto f = random_kcnf(k + 5, static_cast<int>(m), k, m);
      const auto add_m = count_model(f).additions;
      const auto f2 = random_kcnf(k + 5, static_cast<int>(2 * m), k, m + 1);
      REQUIRE(count_model(f2).additions == 2 * add_m + 2);
    }
  }
}

TEST_CASE("unsupported instances") {
  CHECK_THROWS_AS(beta_eval(make(3, {{1, 2}, {1, 2, 3}}), Assignment(3)), UnsupportedInstance);
  CHECK_THROWS_AS(beta_eval(make(1, {{1}}), Assignment(1)), UnsupportedInstance);
  CHECK_THROWS_AS(beta_eval(Formula(), {}), UnsupportedInstance);
  CHECK_THROWS_AS(count_model(Formula()), UnsupportedInstance);
}

TEST_CASE("published count coefficients") {
  const auto p = published_count_model(2, 4);
  CHECK(p.summations == doctest::Approx(2.0));
  CHECK(p.mu_calls == doctest::Approx(1.0));
  CHECK(p.table_additions == doctest::Approx(2.0));
}
