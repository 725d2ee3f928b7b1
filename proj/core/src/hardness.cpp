#include "kuniv/hardness.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <random>
#include <sstream>

#include "kuniv/errors.hpp"

namespace kuniv {

namespace {

std::vector<Letter> block(const CnfInstance& c, std::size_t var, bool value) {
  const int lit = value ? static_cast<int>(var) : -static_cast<int>(var);
  std::vector<Letter> out;
  for (std::size_t j = 0; j < c.clauses.size(); ++j) {
    const auto& cl = c.clauses[j];
    if (std::find(cl.begin(), cl.end(), lit) != cl.end()) out.push_back(static_cast<Letter>(j + 1));
  }
  return out;
}

RegexPtr block_regex(const std::vector<Letter>& letters) {
  if (letters.empty()) return re::epsilon();
  RegexPtr r = re::letter(letters.back());
  for (std::size_t i = letters.size() - 1; i-- > 0;) r = re::concat(re::letter(letters[i]), r);
  return r;
}

}  // namespace

void validate(const CnfInstance& c) {
  for (const auto& cl : c.clauses) {
    if (cl.empty()) throw InputError("empty clause");
    for (int lit : cl) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > c.num_vars) {
        throw InputError("literal out of range: " + std::to_string(lit));
      }
      if (std::find(cl.begin(), cl.end(), -lit) != cl.end()) {
        throw InputError("clause contains a literal and its negation");
      }
    }
  }
}

CnfInstance parse_dimacs(std::istream& in) {
  CnfInstance c;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> current;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c" || first[0] == 'c' || first == "%") continue;
    if (first == "p") {
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (header || !(ls >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0) {
        throw ParseError("malformed problem line", line_no);
      }
      std::string extra;
      if (ls >> extra) throw ParseError("malformed problem line", line_no);
      header = true;
      c.num_vars = static_cast<std::size_t>(vars);
      declared = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!header) throw ParseError("clause before problem line", line_no);
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      char* end = nullptr;
      const long value = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') throw ParseError("malformed literal: " + tok, line_no);
      if (value == 0) {
        if (current.empty()) throw ParseError("empty clause", line_no);
        c.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::labs(value)) > c.num_vars) {
        throw ParseError("literal out of range: " + tok, line_no);
      }
      current.push_back(static_cast<int>(value));
    }
  }
  if (!header) throw ParseError("missing problem line", line_no);
  if (!current.empty()) c.clauses.push_back(std::move(current));
  if (c.clauses.size() != declared) {
    throw ParseError("expected " + std::to_string(declared) + " clauses, found " +
                         std::to_string(c.clauses.size()),
                     line_no);
  }
  for (auto& cl : c.clauses) {
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
  }
  validate(c);
  return c;
}

CnfInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string format_dimacs(const CnfInstance& c) {
  std::ostringstream out;
  out << "p cnf " << c.num_vars << ' ' << c.clauses.size() << '\n';
  for (const auto& cl : c.clauses) {
    for (int lit : cl) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

RegexAst reduce_to_regex(const CnfInstance& c) {
  validate(c);
  if (c.clauses.empty()) throw InputError("reduction needs at least one clause");
  if (c.num_vars == 0) throw InputError("reduction needs at least one variable");
  RegexPtr w;
  for (std::size_t i = c.num_vars; i >= 1; --i) {
    RegexPtr v = re::alt(block_regex(block(c, i, true)), block_regex(block(c, i, false)));
    w = w ? re::concat(std::move(v), std::move(w)) : std::move(v);
  }
  return RegexAst(Alphabet(c.clauses.size()), std::move(w));
}

Word assignment_to_word(const CnfInstance& c, const std::vector<bool>& assignment) {
  if (assignment.size() != c.num_vars) throw InputError("assignment length differs from num_vars");
  if (c.clauses.empty()) throw InputError("instance has no clauses");
  Word w{Alphabet(c.clauses.size())};
  for (std::size_t i = 1; i <= c.num_vars; ++i) {
    for (Letter a : block(c, i, assignment[i - 1])) w.push_back(a);
  }
  return w;
}

CnfInstance random_3sat(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 3) throw InputError("random 3-SAT needs at least 3 variables");
  if (m < 1) throw InputError("random 3-SAT needs at least 1 clause");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> var(1, n);
  std::bernoulli_distribution negate(0.5);
  CnfInstance c;
  c.num_vars = n;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<int> cl;
    while (cl.size() < 3) {
      const int v = static_cast<int>(var(rng));
      if (std::none_of(cl.begin(), cl.end(), [&](int lit) { return std::abs(lit) == v; })) {
        cl.push_back(v);
      }
    }
    for (int& lit : cl) {
      if (negate(rng)) lit = -lit;
    }
    std::sort(cl.begin(), cl.end());
    c.clauses.push_back(std::move(cl));
  }
  return c;
}

}  // namespace kuniv
