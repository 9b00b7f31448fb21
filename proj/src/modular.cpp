#include "tgp/modular.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace tgp {

const char* to_string(TMDKind k) {
  switch (k) {
    case TMDKind::Leaf: return "leaf";
    case TMDKind::Parallel: return "parallel";
    case TMDKind::Series: return "series";
    case TMDKind::Prime: return "prime";
  }
  return "?";
}

namespace {

// True iff x sees every member of c at identical times.
bool uniform_towards(const TemporalGraph& g, int x, const std::vector<int>& c) {
  const TimeSet& ref = g.times(x, c.front());
  for (size_t i = 1; i < c.size(); ++i)
    if (g.times(x, c[i]) != ref) return false;
  return true;
}

std::vector<std::vector<int>> components_within(const TemporalGraph& g, const std::vector<int>& within) {
  std::vector<int> comp(g.n(), -2);
  for (int v : within) comp[v] = -1;
  std::vector<std::vector<int>> out;
  for (int s : within) {
    if (comp[s] != -1) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (size_t i = 0; i < members.size(); ++i)
      for (int w : g.neighbours(members[i]))
        if (comp[w] == -1) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> merge_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

std::vector<int> flatten(const std::vector<std::vector<int>>& parts, size_t from) {
  std::vector<int> r;
  for (size_t i = from; i < parts.size(); ++i) r.insert(r.end(), parts[i].begin(), parts[i].end());
  std::sort(r.begin(), r.end());
  return r;
}

TemporalGraph make_quotient(const TemporalGraph& g, const std::vector<std::vector<int>>& children) {
  std::vector<std::string> names;
  for (const auto& c : children) names.push_back(g.name(c.front()));
  TemporalGraph q(names);
  for (size_t i = 0; i < children.size(); ++i)
    for (size_t j = i + 1; j < children.size(); ++j) {
      const TimeSet& ts = g.times(children[i].front(), children[j].front());
      if (!ts.empty()) q.add_times(g.name(children[i].front()), g.name(children[j].front()), ts);
    }
  return q;
}

}  // namespace

bool is_temporal_module(const TemporalGraph& g, const std::vector<int>& m) {
  if (m.empty()) throw InputError("module candidate is empty");
  std::vector<char> in(g.n(), 0);
  for (int v : m) {
    if (v < 0 || v >= g.n()) throw InputError("module candidate is not a subset of V");
    in[v] = 1;
  }
  for (int x = 0; x < g.n(); ++x)
    if (!in[x] && !uniform_towards(g, x, m)) return false;
  return true;
}

std::vector<int> grow_candidate(const TemporalGraph& g, const std::vector<int>& within,
                                const std::vector<std::vector<int>>& modules, std::vector<int> seed) {
  std::vector<int> owner(g.n(), -1);
  for (size_t i = 0; i < modules.size(); ++i)
    for (int v : modules[i]) owner[v] = static_cast<int>(i);
  std::vector<char> in(g.n(), 0);
  for (int v : seed) in[v] = 1;
  std::sort(seed.begin(), seed.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x : within) {
      if (in[x] || uniform_towards(g, x, seed)) continue;
      const auto& add = modules.at(owner[x]);
      for (int v : add) in[v] = 1;
      seed = merge_sorted(seed, add);
      grew = true;
      break;
    }
  }
  return seed;
}

std::vector<std::vector<int>> grow_maximal_modules(const TemporalGraph& g, const std::vector<int>& within,
                                                   std::optional<std::uint64_t> shuffle_seed) {
  std::vector<std::vector<int>> modules;
  for (int v : within) modules.push_back({v});
  std::set<std::pair<std::vector<int>, std::vector<int>>> failed;
  std::mt19937_64 rng(shuffle_seed.value_or(0));

  bool changed = true;
  while (changed && modules.size() > 1) {
    changed = false;
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < modules.size(); ++i)
      for (size_t j = i + 1; j < modules.size(); ++j) pairs.emplace_back(i, j);
    if (shuffle_seed) std::shuffle(pairs.begin(), pairs.end(), rng);
    for (auto [i, j] : pairs) {
      auto key = std::make_pair(modules[i], modules[j]);
      if (failed.count(key)) continue;
      auto cand = grow_candidate(g, within, modules, merge_sorted(modules[i], modules[j]));
      if (cand.size() == within.size()) {
        failed.insert(key);
        continue;
      }
      std::vector<std::vector<int>> next;
      std::vector<char> in(g.n(), 0);
      for (int v : cand) in[v] = 1;
      for (auto& m : modules)
        if (!in[m.front()]) next.push_back(std::move(m));
      next.push_back(std::move(cand));
      std::sort(next.begin(), next.end());
      modules = std::move(next);
      changed = true;
      break;
    }
  }
  std::sort(modules.begin(), modules.end());
  return modules;
}

std::optional<SeriesSplit> find_series_split(const TemporalGraph& g, const std::vector<int>& within) {
  std::set<TimeSet> candidates;
  for (size_t i = 0; i < within.size(); ++i)
    for (size_t j = i + 1; j < within.size(); ++j) {
      const TimeSet& ts = g.times(within[i], within[j]);
      if (!ts.empty()) candidates.insert(ts);
    }
  for (const TimeSet& T : candidates) {
    // Classes are the components of "pair is not joined at exactly T".
    std::vector<int> comp(within.size(), -1);
    std::vector<std::vector<int>> classes;
    for (size_t s = 0; s < within.size(); ++s) {
      if (comp[s] != -1) continue;
      std::vector<size_t> stack{s};
      comp[s] = static_cast<int>(classes.size());
      std::vector<int> members;
      while (!stack.empty()) {
        size_t a = stack.back();
        stack.pop_back();
        members.push_back(within[a]);
        for (size_t b = 0; b < within.size(); ++b)
          if (comp[b] == -1 && g.times(within[a], within[b]) != T) {
            comp[b] = comp[s];
            stack.push_back(b);
          }
      }
      std::sort(members.begin(), members.end());
      classes.push_back(std::move(members));
    }
    if (classes.size() >= 2) {
      std::sort(classes.begin(), classes.end());
      return SeriesSplit{T, std::move(classes)};
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> maximal_temporal_modules(const TemporalGraph& g) {
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  if (g.n() <= 1) return g.n() ? std::vector<std::vector<int>>{all} : std::vector<std::vector<int>>{};
  auto comps = components_within(g, all);
  if (comps.size() >= 2) return comps;
  if (auto s = find_series_split(g, all)) return s->classes;
  return grow_maximal_modules(g, all);
}

namespace {

TMDNode build_node(const TemporalGraph& g, const std::vector<int>& within) {
  TMDNode node;
  node.vertices = within;
  if (within.size() == 1) {
    node.kind = TMDKind::Leaf;
    node.quotient = TemporalGraph({g.name(within[0])});
    return node;
  }
  std::vector<std::vector<int>> parts;
  auto comps = components_within(g, within);
  if (comps.size() >= 2) {
    node.kind = TMDKind::Parallel;
    parts = {comps[0], flatten(comps, 1)};
  } else if (auto s = find_series_split(g, within)) {
    node.kind = TMDKind::Series;
    node.series_times = s->times;
    parts = {s->classes[0], flatten(s->classes, 1)};
  } else {
    node.kind = TMDKind::Prime;
    parts = grow_maximal_modules(g, within);
  }
  node.quotient = make_quotient(g, parts);
  for (const auto& p : parts) node.children.push_back(build_node(g, p));
  return node;
}

int width_of(const TMDNode& n) {
  int w = n.children.empty() ? 1 : static_cast<int>(n.children.size());
  for (const auto& c : n.children) w = std::max(w, width_of(c));
  return w;
}

void evaluate_into(const TMDTree& t, const TMDNode& n, TemporalGraph& out) {
  for (const auto& c : n.children) evaluate_into(t, c, out);
  for (const auto& [p, ts] : n.quotient.edges()) {
    const auto& A = n.children.at(p.first).vertices;
    const auto& B = n.children.at(p.second).vertices;
    for (int a : A)
      for (int b : B) out.add_times(a, b, ts);
  }
}

int compile_node(const TMDTree& t, const TMDNode& n, Label target, CWExpression& e) {
  if (n.children.empty()) return e.intro(t.names.at(n.vertices.front()), target);
  const int m = static_cast<int>(n.children.size());
  int acc = -1;
  for (int i = 0; i < m; ++i) {
    int sub = compile_node(t, n.children[i], i + 1, e);
    acc = acc < 0 ? sub : e.unite(acc, sub);
  }
  for (const auto& [p, ts] : n.quotient.edges()) acc = e.join_t(p.first + 1, p.second + 1, ts, acc);
  for (Label l = 1; l <= m; ++l)
    if (l != target) acc = e.relabel(l, target, acc);
  return acc;
}

}  // namespace

TMDTree decomposition_tree(const TemporalGraph& g) {
  TMDTree t;
  t.names = g.names();
  if (g.n() == 0) throw InputError("decomposition of an empty graph");
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  t.root = build_node(g, all);
  return t;
}

int temporal_modular_width(const TMDTree& t) { return width_of(t.root); }

TemporalGraph evaluate_tree(const TMDTree& t) {
  TemporalGraph out(t.names);
  evaluate_into(t, t.root, out);
  return out;
}

CWExpression tmw_to_tcw_expression(const TMDTree& t) {
  CWExpression e(true);
  e.set_root(compile_node(t, t.root, 1, e));
  return e;
}

}  // namespace tgp
