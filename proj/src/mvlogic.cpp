#include "mvsat/mvlogic.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "mvsat/errors.hpp"

namespace mvsat {

namespace {

int floor_in_range(double a, int n, const char* what) {
  if (!std::isfinite(a)) throw DomainError(std::string(what) + ": argument is not finite");
  const double f = std::floor(a);
  if (f < 0 || f >= n) {
    throw DomainError(std::string(what) + ": floor of argument " + std::to_string(a) +
                      " outside [0, " + std::to_string(n) + ")");
  }
  return static_cast<int>(f);
}

// n^e, or budget+1 once the budget is exceeded.
std::uint64_t capped_power(std::uint64_t n, std::uint64_t e, std::uint64_t budget) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > budget / n) return budget + 1;
    r *= n;
  }
  return r;
}

// Advance a base-n odometer, last digit fastest. Returns false after wrap-around.
bool next_index_set(std::vector<int>& digits, int n) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < n) return true;
    digits[i] = 0;
  }
  return false;
}

// Published names, indexed by the 4-bit index set (i00 i01 i10 i11).
constexpr std::array<std::string_view, 16> kPublishedNames = {
    "nand",          "antilogy",         "left complementation", "if ... then",
    "right projection", "if",            "neither ... nor",      "if and only if",
    "xor",           "or",               "not ... but",          "right projection",
    "but not",       "left projection",  "tautology",            "and",
};

int binary2_code(const BinaryTable& t) {
  if (t.arity().n() != 2) throw DomainError("classify_binary2: table arity must be 2");
  const auto& ix = t.indices();
  return ix[0] << 3 | ix[1] << 2 | ix[2] << 1 | ix[3];
}

}  // namespace

Arity::Arity(int n) : n_(n) {
  if (n < 2) throw DomainError("arity must be >= 2, got " + std::to_string(n));
}

LogicValue::LogicValue(int v, Arity arity) : v_(v), arity_(arity) {
  if (v < 0 || v >= arity.n()) {
    throw DomainError("logic value " + std::to_string(v) + " outside [0, " +
                      std::to_string(arity.n()) + ")");
  }
}

LogicValue gen_g(Arity n, std::int64_t k, double a) {
  if (!std::isfinite(a)) throw DomainError("gen_g: argument is not finite");
  if (k < 0) throw DomainError("gen_g: shift must be >= 0");
  // fmod is exact, so this stays correct for floors beyond int64 range.
  double r = std::fmod(std::floor(a), static_cast<double>(n.n()));
  if (r < 0) r += n.n();
  const auto shifted = (static_cast<std::int64_t>(r) + k % n.n()) % n.n();
  return LogicValue(static_cast<int>(shifted), n);
}

LogicValue gen_g_floor(Arity n, std::int64_t k, std::int64_t floor_a) {
  if (k < 0) throw DomainError("gen_g: shift must be >= 0");
  std::int64_t r = floor_a % n.n();
  if (r < 0) r += n.n();
  return LogicValue(static_cast<int>((r + k % n.n()) % n.n()), n);
}

UnaryTable::UnaryTable(Arity arity, std::vector<int> indices)
    : arity_(arity), indices_(std::move(indices)) {
  if (indices_.size() != static_cast<std::size_t>(arity_.n())) {
    throw DomainError("unary table needs exactly n indices");
  }
  for (int i : indices_) {
    if (i < 0 || i >= arity_.n()) throw DomainError("unary table index outside [0, n)");
  }
}

std::vector<int> UnaryTable::induced() const {
  std::vector<int> out(indices_.size());
  for (int x = 0; x < arity_.n(); ++x) out[x] = apply_unary(*this, x).value();
  return out;
}

BinaryTable::BinaryTable(Arity arity, std::vector<int> indices)
    : arity_(arity), indices_(std::move(indices)) {
  const auto n = static_cast<std::size_t>(arity_.n());
  if (indices_.size() != n * n) throw DomainError("binary table needs an n x n index matrix");
  for (int i : indices_) {
    if (i < 0 || i >= arity_.n()) throw DomainError("binary table index outside [0, n)");
  }
}

int BinaryTable::index(int row, int col) const {
  if (row < 0 || row >= arity_.n() || col < 0 || col >= arity_.n()) {
    throw DomainError("binary table cell out of range");
  }
  return indices_[static_cast<std::size_t>(row) * arity_.n() + col];
}

std::vector<int> BinaryTable::induced() const {
  const int n = arity_.n();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out[a * n + b] = apply_binary(*this, a, b).value();
  }
  return out;
}

LogicValue apply_unary(const UnaryTable& t, double a) {
  const int row = floor_in_range(a, t.arity().n(), "apply_unary");
  return gen_g(t.arity(), t.indices()[row], a);
}

LogicValue apply_binary(const BinaryTable& t, double a, double b) {
  const int row = floor_in_range(a, t.arity().n(), "apply_binary");
  const int col = floor_in_range(b, t.arity().n(), "apply_binary");
  return gen_g(t.arity(), t.index(row, col), a * b);
}

std::vector<UnaryTable> enumerate_unary(Arity n, std::uint64_t budget) {
  const auto count = capped_power(n.n(), n.n(), budget);
  if (count > budget) {
    throw ResourceError("enumerate_unary: n^n exceeds budget of " + std::to_string(budget));
  }
  std::vector<UnaryTable> out;
  out.reserve(count);
  std::vector<int> digits(n.n(), 0);
  do {
    out.emplace_back(n, digits);
  } while (next_index_set(digits, n.n()));
  return out;
}

std::vector<BinaryTable> enumerate_binary(Arity n, std::uint64_t budget) {
  const auto cells = static_cast<std::uint64_t>(n.n()) * n.n();
  const auto count = capped_power(n.n(), cells, budget);
  if (count > budget) {
    throw ResourceError("enumerate_binary: n^(n^2) exceeds budget of " + std::to_string(budget));
  }
  std::vector<BinaryTable> out;
  out.reserve(count);
  std::vector<int> digits(cells, 0);
  do {
    out.emplace_back(n, digits);
  } while (next_index_set(digits, n.n()));
  return out;
}

std::string_view classify_binary2(const BinaryTable& t) {
  const int code = binary2_code(t);
  // The published list names 1011 "right projection" a second time; its table is b -> not b.
  if (code == 0b1011) return "right complementation";
  return kPublishedNames[code];
}

std::string_view published_connective_name(const BinaryTable& t) {
  return kPublishedNames[binary2_code(t)];
}

BinaryTable ksat_mu(int k) {
  if (k < 2) throw DomainError("ksat_mu: clause width must be >= 2");
  const int n = k + 1;
  std::vector<int> idx(static_cast<std::size_t>(n) * n, 0);
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b) {
      // Shift that moves a*b mod n onto the target value 1.
      idx[a * n + b] = ((1 - a * b) % n + n) % n;
    }
  }
  return BinaryTable(Arity(n), std::move(idx));
}

std::string dump_table(const UnaryTable& t) {
  std::ostringstream os;
  os << "unary n=" << t.arity().n() << " idx=";
  for (std::size_t i = 0; i < t.indices().size(); ++i) os << (i ? "," : "") << t.indices()[i];
  os << '\n';
  for (int v : t.induced()) os << v << '\n';
  return os.str();
}

std::string dump_table(const BinaryTable& t) {
  const int n = t.arity().n();
  const auto cells = t.induced();
  std::ostringstream os;
  os << "binary n=" << n << '\n';
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) os << (b ? " " : "") << cells[a * n + b];
    os << '\n';
  }
  return os.str();
}

}  // namespace mvsat
