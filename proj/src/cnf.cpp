#include "simred/cnf.hpp"

#include <algorithm>
#include <sstream>

#include "simred/errors.hpp"

namespace simred {

CnfFormula make_formula(std::uint32_t num_vars, std::vector<Clause> clauses) {
  CnfFormula f;
  f.num_vars = num_vars;
  for (Clause& c : clauses) {
    for (const Literal& lit : c)
      if (lit.var < 1 || lit.var > num_vars)
        throw InputError("literal " + std::string(lit.positive ? "" : "-") + std::to_string(lit.var) +
                         " outside variables 1.." + std::to_string(num_vars));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  f.clauses = std::move(clauses);
  if (f.num_vars % 2 != 0) {
    ++f.num_vars;
    f.padded = true;
  }
  return f;
}

CnfFormula parse_dimacs(std::string_view text) {
  auto fail = [](std::size_t line, const std::string& what) -> void {
    throw InputError("dimacs line " + std::to_string(line) + ": " + what);
  };
  bool have_header = false;
  long long declared_vars = 0, declared_clauses = 0;
  std::vector<Clause> clauses;
  Clause current;
  std::size_t last_literal_line = 0;
  std::size_t number = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string line(text.substr(pos, end - pos));
    ++number;
    pos = end + 1;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos) {
      const char lead = line[first];
      if (lead == 'c') {
        // comment
      } else if (lead == '%') {
        break;
      } else if (lead == 'p') {
        std::istringstream in(line);
        std::string p, fmt, extra;
        if (have_header) fail(number, "duplicate header");
        if (!(in >> p >> fmt >> declared_vars >> declared_clauses) || p != "p" || fmt != "cnf" ||
            (in >> extra) || declared_vars < 0 || declared_clauses < 0)
          fail(number, "malformed header, expected 'p cnf <vars> <clauses>'");
        have_header = true;
      } else {
        if (!have_header) fail(number, "clause before 'p cnf' header");
        std::istringstream in(line);
        for (std::string tok; in >> tok;) {
          long long value = 0;
          std::size_t used = 0;
          try {
            value = std::stoll(tok, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used != tok.size()) fail(number, "expected an integer literal, got '" + tok + "'");
          if (value == 0) {
            clauses.push_back(std::move(current));
            current.clear();
            continue;
          }
          const long long var = value < 0 ? -value : value;
          if (var > declared_vars)
            fail(number, "literal " + tok + " outside variables 1.." + std::to_string(declared_vars));
          current.push_back({static_cast<std::uint32_t>(var), value > 0});
          last_literal_line = number;
        }
      }
    }
    if (end == text.size()) break;
  }
  if (!have_header) fail(number, "missing 'p cnf' header");
  if (!current.empty()) fail(last_literal_line, "clause not terminated by 0");
  if (static_cast<long long>(clauses.size()) != declared_clauses)
    fail(number, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(clauses.size()));
  if (declared_vars > 1'000'000) fail(number, "variable count too large");
  return make_formula(static_cast<std::uint32_t>(declared_vars), std::move(clauses));
}

std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& lit : c) out << (lit.positive ? "" : "-") << lit.var << ' ';
    out << "0\n";
  }
  return out.str();
}

bool clause_satisfied(const Clause& c, const Assignment& rho) {
  return std::any_of(c.begin(), c.end(), [&](const Literal& lit) { return rho[lit.var - 1] == lit.positive; });
}

bool satisfies(const CnfFormula& f, const Assignment& rho) {
  if (rho.size() != f.num_vars) return false;
  return std::all_of(f.clauses.begin(), f.clauses.end(),
                     [&](const Clause& c) { return clause_satisfied(c, rho); });
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f, const ScaleLimits& limits) {
  const std::uint32_t n = f.num_vars;
  if (n > limits.sat_vars || n >= 64)
    throw ScaleError("brute_force_sat: " + std::to_string(n) + " variables exceed the cap of " +
                     std::to_string(limits.sat_vars));
  Assignment rho(n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    for (std::uint32_t i = 0; i < n; ++i) rho[i] = (code >> (n - 1 - i)) & 1u;
    if (satisfies(f, rho)) return rho;
  }
  return std::nullopt;
}

std::string assignment_bits(const Assignment& rho) {
  std::string out;
  for (bool b : rho) out += b ? '1' : '0';
  return out;
}

std::string assignment_literals(const Assignment& rho) {
  std::string out;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (i) out += ' ';
    out += (rho[i] ? "" : "-") + std::to_string(i + 1);
  }
  return out;
}

}  // namespace simred
