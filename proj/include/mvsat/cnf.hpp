#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mvsat {

struct Literal {
  int var;  // 1-based
  bool negated;

  /// From a signed DIMACS literal; 0 is rejected.
  static Literal from_dimacs(int lit);
  int to_dimacs() const noexcept { return negated ? -var : var; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

class Clause {
 public:
  /// Nonempty, no repeated (var, negated) pair.
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const noexcept { return literals_; }
  std::size_t width() const noexcept { return literals_.size(); }

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
};

class Formula {
 public:
  Formula() = default;
  Formula(int num_vars, std::vector<Clause> clauses);

  int num_vars() const noexcept { return num_vars_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  std::size_t num_clauses() const noexcept { return clauses_.size(); }

  /// Shared clause width; unset for mixed widths or an empty clause list.
  std::optional<int> uniform_k() const noexcept { return uniform_k_; }

  std::size_t negated_occurrences() const noexcept;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
  std::optional<int> uniform_k_;
};

/// Conventional truth values; index i is variable i+1.
using Assignment = std::vector<bool>;

enum class TruthConvention { zero_true, conventional };

Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(std::string_view text);
std::string write_dimacs(const Formula& f);

bool eval_reference(const Formula& f, const Assignment& a);

/// zero_true maps true to 0 and false to 1; conventional maps true to 1.
std::vector<int> encode(const Assignment& a, TruthConvention c);
Assignment decode(const std::vector<int>& values, TruthConvention c);

/// "1011": character i is variable i+1, '1' is true.
Assignment parse_assignment(std::string_view bits);
std::string format_assignment(const Assignment& a);

/// Uniform random k-CNF: k distinct variables per clause, fair polarity coin.
/// Output depends only on the arguments (mt19937_64 with portable sampling).
Formula random_kcnf(int num_vars, int num_clauses, int k, std::uint64_t seed);

/// Unbiased draw from [0, bound) on a 64-bit engine. Portable across standard libraries.
template <class Engine>
std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace mvsat
