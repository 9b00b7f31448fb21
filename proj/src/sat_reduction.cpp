#include <algorithm>
#include <sstream>

#include "tgp/burning.hpp"

namespace tgp {

void validate_formula(const Formula32B& f) {
  if (f.n < 1) throw InputError("formula needs at least one variable");
  std::vector<int> pos(f.n + 1, 0), neg(f.n + 1, 0);
  for (size_t j = 0; j < f.clauses.size(); ++j) {
    if (f.clauses[j].size() != 3) throw InputError("clause " + std::to_string(j + 1) + " does not have 3 literals");
    for (const auto& l : f.clauses[j]) {
      if (l.var < 1 || l.var > f.n) throw InputError("literal references unknown variable " + std::to_string(l.var));
      ++(l.positive ? pos : neg)[l.var];
    }
  }
  for (int i = 1; i <= f.n; ++i)
    if (pos[i] != 2 || neg[i] != 2)
      throw InputError("variable " + std::to_string(i) + " must occur exactly twice positively and twice negatively");
}

Formula32B parse_dimacs(std::string_view text) {
  Formula32B f;
  std::istringstream in{std::string(text)};
  std::string line;
  int declared_m = -1;
  std::vector<Literal> cur;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == '%') continue;
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> f.n >> declared_m) || fmt != "cnf") throw ParseError("bad problem line", lineno);
      continue;
    }
    if (declared_m < 0) throw ParseError("clause before problem line", lineno);
    do {
      int x = 0;
      try {
        size_t used = 0;
        x = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad literal '" + tok + "'", lineno);
      }
      if (x == 0) {
        f.clauses.push_back(cur);
        cur.clear();
      } else {
        if (std::abs(x) > f.n) throw ParseError("literal out of range", lineno);
        cur.push_back({std::abs(x), x > 0});
      }
    } while (ls >> tok);
  }
  if (!cur.empty()) throw ParseError("last clause not terminated by 0", lineno);
  if (declared_m < 0) throw ParseError("missing problem line", lineno);
  if (static_cast<int>(f.clauses.size()) != declared_m)
    throw ParseError("clause count does not match problem line", lineno);
  return f;
}

std::string format_dimacs(const Formula32B& f) {
  std::ostringstream out;
  out << "p cnf " << f.n << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (const auto& l : c) out << (l.positive ? l.var : -l.var) << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

bool satisfies(const Formula32B& f, const std::vector<bool>& a) {
  for (const auto& c : f.clauses) {
    bool ok = false;
    for (const auto& l : c)
      if (a[l.var - 1] == l.positive) ok = true;
    if (!ok) return false;
  }
  return true;
}

std::string lit_name(const Literal& l) { return (l.positive ? "x" : "nx") + std::to_string(l.var); }
std::string occ(const char* p, size_t j, size_t l) {
  return p + std::to_string(j + 1) + "_" + std::to_string(l + 1);
}

}  // namespace

bool brute_force_satisfiable(const Formula32B& f) {
  if (f.n > 24) throw SizeBoundError("brute-force satisfiability bound is 24 variables");
  std::vector<bool> a(f.n);
  for (uint64_t mask = 0; mask < (uint64_t{1} << f.n); ++mask) {
    for (int i = 0; i < f.n; ++i) a[i] = (mask >> i) & 1;
    if (satisfies(f, a)) return true;
  }
  return false;
}

BurningInstance sat_to_burning(const Formula32B& f, int leaf_multiplicity) {
  validate_formula(f);
  const int n = f.n;
  const int m = static_cast<int>(f.clauses.size());
  const int h = 2 * n + 3 * m + 1;
  const int mult = leaf_multiplicity > 0 ? leaf_multiplicity : h + 1;

  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (bool pos : {true, false}) {
      names.push_back(lit_name({i, pos}));
      for (int d = 1; d <= mult; ++d) names.push_back((pos ? "y" : "ny") + std::to_string(i) + "_" + std::to_string(d));
    }
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < 3; ++l) {
      names.push_back(occ("c", j, l));
      names.push_back(occ("u", j, l));
      names.push_back(occ("w", j, l));
      for (int d = 1; d <= mult; ++d) names.push_back(occ("z", j, l) + "_" + std::to_string(d));
    }
  TemporalGraph g(names);
  for (int i = 1; i <= n; ++i)
    for (bool pos : {true, false})
      for (int d = 1; d <= mult; ++d)
        g.add_times(lit_name({i, pos}), (pos ? "y" : "ny") + std::to_string(i) + "_" + std::to_string(d),
                    {2 * i + 1});
  for (int j = 0; j < m; ++j) {
    const int jj = j + 1;
    for (int l = 0; l < 3; ++l) {
      const Literal& lit = f.clauses[j][l];
      const std::string c = occ("c", j, l), u = occ("u", j, l), w = occ("w", j, l);
      for (int d = 1; d <= mult; ++d) g.add_times(c, occ("z", j, l) + "_" + std::to_string(d), {2 * n + 3 * jj + 1});
      g.add_times(lit_name(lit), u, {2 * lit.var});
      g.add_times(u, w, {h});
      g.add_times(w, c, {2 * n + 3 * jj});
    }
  }
  return {std::move(g), h};
}

BurningStrategy strategy_from_assignment(const Formula32B& f, const BurningInstance& inst,
                                         const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != f.n) throw InputError("assignment length does not match formula");
  if (!satisfies(f, assignment)) throw InputError("assignment does not satisfy the formula");
  const auto& g = inst.graph;
  BurningStrategy s;
  for (int i = 1; i <= f.n; ++i) {
    bool v = assignment[i - 1];
    s.push_back(g.index(lit_name({i, v})));
    s.push_back(g.index(lit_name({i, !v})));
  }
  for (size_t j = 0; j < f.clauses.size(); ++j) {
    size_t star = 0;
    while (assignment[f.clauses[j][star].var - 1] != f.clauses[j][star].positive) ++star;
    for (size_t l = 0; l < 3; ++l)
      if (l != star) s.push_back(g.index(occ("c", j, l)));
    s.push_back(g.index(occ("c", j, star)));
  }
  s.push_back(s.front());
  return s;
}

}  // namespace tgp
