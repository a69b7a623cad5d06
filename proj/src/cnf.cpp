#include "mvsat/cnf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <random>
#include <sstream>

#include "mvsat/errors.hpp"

namespace mvsat {

Literal Literal::from_dimacs(int lit) {
  if (lit == 0) throw DomainError("literal 0 is the clause terminator");
  return Literal{lit < 0 ? -lit : lit, lit < 0};
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.empty()) throw DomainError("clause must contain at least one literal");
  for (std::size_t i = 0; i < literals_.size(); ++i) {
    if (literals_[i].var < 1) throw DomainError("variable ids are 1-based");
    for (std::size_t j = 0; j < i; ++j) {
      if (literals_[i] == literals_[j]) {
        throw DomainError("duplicate literal " + std::to_string(literals_[i].to_dimacs()));
      }
    }
  }
}

Formula::Formula(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 0) throw DomainError("num_vars must be >= 0");
  for (const auto& c : clauses_) {
    for (const auto& l : c.literals()) {
      if (l.var > num_vars_) {
        throw DomainError("variable " + std::to_string(l.var) + " exceeds num_vars " +
                          std::to_string(num_vars_));
      }
    }
  }
  if (!clauses_.empty()) {
    const auto w = clauses_.front().width();
    const bool uniform = std::all_of(clauses_.begin(), clauses_.end(),
                                     [w](const Clause& c) { return c.width() == w; });
    if (uniform) uniform_k_ = static_cast<int>(w);
  }
}

std::size_t Formula::negated_occurrences() const noexcept {
  std::size_t p = 0;
  for (const auto& c : clauses_) {
    for (const auto& l : c.literals()) p += l.negated;
  }
  return p;
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const auto start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) toks.push_back(line.substr(start, i - start));
  }
  return toks;
}

}  // namespace

Formula parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long declared_vars = 0;
  long long declared_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;

  auto close_clause = [&](std::size_t at) {
    if (pending.empty()) throw ParseError(at, "empty clause");
    try {
      clauses.emplace_back(std::move(pending));
    } catch (const DomainError& e) {
      throw ParseError(at, e.what());
    }
    pending.clear();
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0][0] == 'c') continue;
    if (toks[0] == "%") break;  // SATLIB trailer
    if (toks[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate problem line");
      if (toks.size() != 4 || toks[1] != "cnf" || !parse_int(toks[2], declared_vars) ||
          !parse_int(toks[3], declared_clauses) || declared_vars < 0 || declared_clauses < 0) {
        throw ParseError(lineno, "malformed problem line, expected 'p cnf <vars> <clauses>'");
      }
      if (declared_vars > INT32_MAX) throw ParseError(lineno, "too many variables");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause data before 'p cnf' header");
    for (auto tok : toks) {
      long long v = 0;
      if (!parse_int(tok, v)) throw ParseError(lineno, "bad literal '" + std::string(tok) + "'");
      if (v == 0) {
        close_clause(lineno);
        continue;
      }
      const long long var = v < 0 ? -v : v;
      if (var > declared_vars) {
        throw ParseError(lineno, "variable " + std::to_string(var) + " exceeds declared count " +
                                     std::to_string(declared_vars));
      }
      if (pending.empty()) pending_line = lineno;
      pending.push_back(Literal::from_dimacs(static_cast<int>(v)));
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'p cnf' header");
  // Tolerate a final clause without its terminating 0.
  if (!pending.empty()) close_clause(pending_line);
  if (static_cast<long long>(clauses.size()) != declared_clauses) {
    throw ParseError(lineno, "header declares " + std::to_string(declared_clauses) +
                                 " clauses, found " + std::to_string(clauses.size()));
  }
  return Formula(static_cast<int>(declared_vars), std::move(clauses));
}

Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string write_dimacs(const Formula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars()) + " " +
                    std::to_string(f.num_clauses()) + "\n";
  for (const auto& c : f.clauses()) {
    for (const auto& l : c.literals()) {
      out += std::to_string(l.to_dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

bool eval_reference(const Formula& f, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(f.num_vars())) {
    throw DomainError("assignment length " + std::to_string(a.size()) + " != num_vars " +
                      std::to_string(f.num_vars()));
  }
  return std::all_of(f.clauses().begin(), f.clauses().end(), [&](const Clause& c) {
    return std::any_of(c.literals().begin(), c.literals().end(),
                       [&](const Literal& l) { return a[l.var - 1] != l.negated; });
  });
}

std::vector<int> encode(const Assignment& a, TruthConvention c) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = c == TruthConvention::zero_true ? (a[i] ? 0 : 1) : (a[i] ? 1 : 0);
  }
  return out;
}

Assignment decode(const std::vector<int>& values, TruthConvention c) {
  Assignment out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0 && values[i] != 1) {
      throw DomainError("decode: value " + std::to_string(values[i]) + " is not in {0,1}");
    }
    out[i] = c == TruthConvention::zero_true ? values[i] == 0 : values[i] == 1;
  }
  return out;
}

Assignment parse_assignment(std::string_view bits) {
  Assignment a;
  a.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw DomainError("assignment string must contain only 0/1");
    a.push_back(ch == '1');
  }
  return a;
}

std::string format_assignment(const Assignment& a) {
  std::string s;
  s.reserve(a.size());
  for (bool b : a) s.push_back(b ? '1' : '0');
  return s;
}

Formula random_kcnf(int num_vars, int num_clauses, int k, std::uint64_t seed) {
  if (k < 1) throw DomainError("random_kcnf: k must be >= 1");
  if (k > num_vars) throw DomainError("random_kcnf: k exceeds num_vars");
  if (num_clauses < 0) throw DomainError("random_kcnf: negative clause count");
  std::mt19937_64 rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(num_clauses);
  std::vector<int> vars;
  for (int j = 0; j < num_clauses; ++j) {
    vars.clear();
    while (static_cast<int>(vars.size()) < k) {
      const int v = 1 + static_cast<int>(uniform_below(rng, num_vars));
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    std::vector<Literal> lits;
    lits.reserve(k);
    for (int v : vars) lits.push_back(Literal{v, (rng() >> 63) != 0});
    clauses.emplace_back(std::move(lits));
  }
  return Formula(num_vars, std::move(clauses));
}

}  // namespace mvsat
