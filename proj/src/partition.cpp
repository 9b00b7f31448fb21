#include "tgp/partition.hpp"

#include <algorithm>

namespace tgp {

namespace {
const TimeSet kNone;

void check_is_partition(const TemporalGraph& g, const std::vector<std::vector<int>>& classes) {
  std::vector<int> seen(g.n(), 0);
  for (const auto& c : classes) {
    if (c.empty()) throw InputError("partition has an empty class");
    for (int v : c) {
      if (v < 0 || v >= g.n()) throw InputError("partition names a vertex outside the graph");
      if (seen[v]++) throw InputError("partition classes overlap");
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (!seen[v]) throw InputError("partition does not cover vertex '" + g.name(v) + "'");
}
}  // namespace

const TimeSet& NeighbourhoodPartition::cross(int a, int b) const {
  auto it = cross_times.find(make_pair_sorted(a, b));
  return it == cross_times.end() ? kNone : it->second;
}

bool same_temporal_type(const TemporalGraph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw InputError("unknown vertex");
  for (int w = 0; w < g.n(); ++w) {
    if (w == u || w == v) continue;
    if (g.times(u, w) != g.times(v, w)) return false;
  }
  return true;
}

NeighbourhoodPartition temporal_neighbourhood_partition(const TemporalGraph& g) {
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < g.n(); ++v) {
    bool placed = false;
    for (auto& c : classes) {
      if (same_temporal_type(g, c.front(), v)) {
        c.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({v});
  }
  return make_partition(g, std::move(classes));
}

bool verify_partition(const TemporalGraph& g, const std::vector<std::vector<int>>& classes) {
  check_is_partition(g, classes);
  for (size_t a = 0; a < classes.size(); ++a) {
    const auto& A = classes[a];
    if (A.size() >= 2) {
      const TimeSet& ref = g.times(A[0], A[1]);
      for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j)
          if (g.times(A[i], A[j]) != ref) return false;
    }
    for (size_t b = a + 1; b < classes.size(); ++b) {
      const auto& B = classes[b];
      const TimeSet& ref = g.times(A[0], B[0]);
      for (int x : A)
        for (int y : B)
          if (g.times(x, y) != ref) return false;
    }
  }
  return true;
}

NeighbourhoodPartition make_partition(const TemporalGraph& g, std::vector<std::vector<int>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  if (!verify_partition(g, classes)) throw InputError("not a valid neighbourhood partition");
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  NeighbourhoodPartition p;
  p.classes = std::move(classes);
  p.class_of.assign(g.n(), -1);
  for (int a = 0; a < p.k(); ++a) {
    const auto& A = p.classes[a];
    for (int v : A) p.class_of[v] = a;
    p.internal_times.push_back(A.size() >= 2 ? g.times(A[0], A[1]) : TimeSet{});
    for (int b = a + 1; b < p.k(); ++b) {
      const TimeSet& ts = g.times(A[0], p.classes[b][0]);
      if (!ts.empty()) p.cross_times.emplace(std::make_pair(a, b), ts);
    }
  }
  return p;
}

TemporalGraph quotient_graph(const TemporalGraph& g, const NeighbourhoodPartition& p) {
  if (!verify_partition(g, p.classes)) throw InputError("not a valid neighbourhood partition");
  std::vector<std::string> names;
  for (const auto& c : p.classes) names.push_back(g.name(c.front()));
  TemporalGraph q(names);
  for (const auto& [ab, ts] : p.cross_times)
    q.add_times(g.name(p.classes[ab.first].front()), g.name(p.classes[ab.second].front()), ts);
  return q;
}

}  // namespace tgp
