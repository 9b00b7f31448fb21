#include "tgp/generators.hpp"

#include <algorithm>
#include <cstdio>

namespace tgp::gen {

std::vector<std::string> vertex_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "v%02d", i);
    out.emplace_back(buf);
  }
  return out;
}

TimeSet random_times(Rng& rng, int lifetime, int max_times) {
  int cnt = std::uniform_int_distribution<int>(1, std::max(1, std::min(max_times, lifetime)))(rng);
  std::vector<Time> all(lifetime);
  for (int i = 0; i < lifetime; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(cnt);
  std::sort(all.begin(), all.end());
  return all;
}

TemporalGraph random_graph(Rng& rng, int n, int lifetime, double edge_prob, int max_times) {
  TemporalGraph g(vertex_names(n));
  std::bernoulli_distribution coin(edge_prob);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_times(u, v, random_times(rng, lifetime, max_times));
  return g;
}

TemporalGraph random_blowup(Rng& rng, int n, int k, int lifetime, double edge_prob, int max_times) {
  k = std::clamp(k, 1, std::max(1, n));
  std::vector<int> cls(n);
  for (int v = 0; v < n; ++v) cls[v] = v < k ? v : std::uniform_int_distribution<int>(0, k - 1)(rng);
  std::shuffle(cls.begin(), cls.end(), rng);
  std::bernoulli_distribution coin(edge_prob);
  std::vector<TimeSet> internal(k);
  for (int a = 0; a < k; ++a)
    if (coin(rng)) internal[a] = random_times(rng, lifetime, max_times);
  std::vector<std::vector<TimeSet>> cross(k, std::vector<TimeSet>(k));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (coin(rng)) cross[a][b] = cross[b][a] = random_times(rng, lifetime, max_times);
  TemporalGraph g(vertex_names(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const TimeSet& ts = cls[u] == cls[v] ? internal[cls[u]] : cross[cls[u]][cls[v]];
      if (!ts.empty()) g.add_times(u, v, ts);
    }
  return g;
}

TemporalStar random_star(Rng& rng, int leaves, int lifetime, int max_times) {
  TemporalStar s;
  s.centre = "c";
  for (int i = 0; i < leaves; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "l%02d", i);
    s.leaves.emplace_back(buf);
    s.times.push_back(random_times(rng, lifetime, max_times));
  }
  return s;
}

Formula32B random_formula(Rng& rng, int n) {
  if (n < 3 || n % 3 != 0) throw InputError("(3,2B) formulas need a positive multiple of 3 variables");
  std::vector<Literal> lits;
  for (int i = 1; i <= n; ++i)
    for (int c = 0; c < 2; ++c) {
      lits.push_back({i, true});
      lits.push_back({i, false});
    }
  std::shuffle(lits.begin(), lits.end(), rng);
  Formula32B f;
  f.n = n;
  for (size_t i = 0; i < lits.size(); i += 3) f.clauses.push_back({lits[i], lits[i + 1], lits[i + 2]});
  return f;
}

namespace {

int build(Rng& rng, CWExpression& e, const std::vector<std::string>& names, size_t lo, size_t hi, int width,
          double join_prob, int lifetime) {
  std::uniform_int_distribution<int> label(1, width);
  if (hi - lo == 1) return e.intro(names[lo], label(rng));
  size_t mid = std::uniform_int_distribution<size_t>(lo + 1, hi - 1)(rng);
  int x = build(rng, e, names, lo, mid, width, join_prob, lifetime);
  int y = build(rng, e, names, mid, hi, width, join_prob, lifetime);
  int acc = e.unite(x, y);
  if (width < 2) return acc;
  std::bernoulli_distribution coin(join_prob);
  int ops = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int k = 0; k < ops; ++k) {
    int i = label(rng), j = label(rng);
    while (j == i) j = label(rng);
    if (coin(rng))
      acc = lifetime > 0 ? e.join_t(i, j, random_times(rng, lifetime, 2), acc) : e.join(i, j, acc);
    else if (coin(rng))
      acc = e.relabel(i, j, acc);
  }
  return acc;
}

}  // namespace

CWExpression random_static_expression(Rng& rng, int vertices, int width, double join_prob) {
  CWExpression e(false);
  e.set_root(build(rng, e, vertex_names(vertices), 0, vertices, width, join_prob, 0));
  return e;
}

CWExpression random_temporal_expression(Rng& rng, int vertices, int width, int lifetime, double join_prob) {
  CWExpression e(true);
  e.set_root(build(rng, e, vertex_names(vertices), 0, vertices, width, join_prob, lifetime));
  return e;
}

}  // namespace tgp::gen
