#pragma once

// Modular generation function g and the unary / binary n-valued logic
// function families tabulated from it. Value 0 denotes true.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mvsat {

/// Modulo base of an n-valued logic system, n >= 2.
class Arity {
 public:
  explicit Arity(int n);
  int n() const noexcept { return n_; }
  friend bool operator==(const Arity&, const Arity&) = default;

 private:
  int n_;
};

/// An element of {0, ..., n-1}.
class LogicValue {
 public:
  LogicValue(int v, Arity arity);
  int value() const noexcept { return v_; }
  Arity arity() const noexcept { return arity_; }
  friend bool operator==(const LogicValue&, const LogicValue&) = default;

 private:
  int v_;
  Arity arity_;
};

/// (floor(a) + k) mod n, reduced into [0, n). Throws DomainError on non-finite a.
LogicValue gen_g(Arity n, std::int64_t k, double a);

/// Same as gen_g for an argument whose floor is already known.
LogicValue gen_g_floor(Arity n, std::int64_t k, std::int64_t floor_a);

/// One-variable function: row floor(a) uses shift indices[floor(a)].
class UnaryTable {
 public:
  UnaryTable(Arity arity, std::vector<int> indices);

  Arity arity() const noexcept { return arity_; }
  const std::vector<int>& indices() const noexcept { return indices_; }

  /// Result for each floor value 0..n-1.
  std::vector<int> induced() const;

  friend bool operator==(const UnaryTable&, const UnaryTable&) = default;

 private:
  Arity arity_;
  std::vector<int> indices_;
};

/// Two-variable function: cell (floor(a), floor(b)) applies shift i_{a,b} to a*b.
class BinaryTable {
 public:
  /// `indices` is the n x n shift matrix in row-major order.
  BinaryTable(Arity arity, std::vector<int> indices);

  Arity arity() const noexcept { return arity_; }
  int index(int row, int col) const;
  const std::vector<int>& indices() const noexcept { return indices_; }

  /// Row-major n x n table of results at integer arguments.
  std::vector<int> induced() const;

  friend bool operator==(const BinaryTable&, const BinaryTable&) = default;

 private:
  Arity arity_;
  std::vector<int> indices_;
};

LogicValue apply_unary(const UnaryTable& t, double a);
LogicValue apply_binary(const BinaryTable& t, double a, double b);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// All n^n unary tables, index sets in lexicographic order (i_0 most significant).
std::vector<UnaryTable> enumerate_unary(Arity n,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

/// All n^(n^2) binary tables, row-major index matrices in lexicographic order.
std::vector<BinaryTable> enumerate_binary(Arity n,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

/// Connective name for a two-valued binary table. Bijective over the 16 tables;
/// see published_connective_name for the names exactly as originally published.
std::string_view classify_binary2(const BinaryTable& t);

/// Published name for a two-valued binary table. Two tables share the name
/// "right projection" in the published list, so this is not injective.
std::string_view published_connective_name(const BinaryTable& t);

/// Clause-sum combiner over arity k+1: 0 when either argument is 0, else 1.
BinaryTable ksat_mu(int k);

/// Plain-text dump: header line then the induced grid, one block per table.
std::string dump_table(const UnaryTable& t);
std::string dump_table(const BinaryTable& t);

}  // namespace mvsat
