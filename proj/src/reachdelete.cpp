#include "tgp/reachdelete.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "iqp_internal.hpp"

namespace tgp {

namespace {

const TimeSet kNoTimes;

void check_source(const TemporalGraph& g, int source) {
  if (source < 0 || source >= g.n()) throw InputError("source is not a vertex");
}

// Earliest arrival over an explicit time-edge list sorted by time, skipping
// entries flagged in `skip`.
std::vector<Time> arrivals(int n, int source, const std::vector<TimeEdge>& by_time, const std::vector<char>* skip) {
  std::vector<Time> a(n, kInf);
  a[source] = 0;
  for (size_t i = 0; i < by_time.size(); ++i) {
    if (skip && (*skip)[i]) continue;
    const auto& e = by_time[i];
    if (a[e.u] < e.t && a[e.v] > e.t) a[e.v] = e.t;
    if (a[e.v] < e.t && a[e.u] > e.t) a[e.u] = e.t;
  }
  return a;
}

std::vector<TimeEdge> sorted_by_time(const TemporalGraph& g) {
  auto es = g.time_edges();
  std::stable_sort(es.begin(), es.end(), [](const TimeEdge& x, const TimeEdge& y) { return x.t < y.t; });
  return es;
}

}  // namespace

const TimeSet& SubclassGraph::times(int i, int j) const {
  auto it = adj.find({std::min(i, j), std::max(i, j)});
  return it == adj.end() ? kNoTimes : it->second;
}

size_t DeletionPlan::size() const {
  size_t s = 0;
  for (const auto& [k, ts] : times) s += ts.size();
  return s;
}

std::vector<TimeSet> subclass_candidates(const TemporalGraph& g, const NeighbourhoodPartition& p, int source) {
  check_source(g, source);
  std::vector<TimeSet> out(p.k());
  for (int a = 0; a < p.k(); ++a) {
    std::set<Time> ts(p.internal_times[a].begin(), p.internal_times[a].end());
    for (int b = 0; b < p.k(); ++b)
      if (b != a) ts.insert(p.cross(a, b).begin(), p.cross(a, b).end());
    out[a].assign(ts.begin(), ts.end());
  }
  return out;
}

SubclassGraph subclass_graph(const NeighbourhoodPartition& p, int source, const Assignment& phi) {
  if (static_cast<int>(phi.size()) != p.k()) throw InputError("assignment does not cover every class");
  const int sc = p.class_of.at(source);
  SubclassGraph h;
  h.nodes.push_back({-1, 0});
  for (int c = 0; c < p.k(); ++c)
    for (Time t : phi[c]) h.nodes.push_back({c, t});
  const int n = static_cast<int>(h.nodes.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int a = h.nodes[i].cls < 0 ? sc : h.nodes[i].cls;
      int b = h.nodes[j].cls;
      const TimeSet& ts = p.adjacency(a, b);
      if (!ts.empty()) h.adj.emplace(std::make_pair(i, j), ts);
    }
  return h;
}

std::vector<Time> subclass_arrivals(const SubclassGraph& h, const DeletionPlan& plan) {
  std::vector<TimeEdge> es;
  for (const auto& [ij, ts] : h.adj) {
    auto del = plan.times.find(ij);
    for (Time t : ts)
      if (del == plan.times.end() || !std::binary_search(del->second.begin(), del->second.end(), t))
        es.push_back({ij.first, ij.second, t});
  }
  std::stable_sort(es.begin(), es.end(), [](const TimeEdge& x, const TimeEdge& y) { return x.t < y.t; });
  return arrivals(static_cast<int>(h.nodes.size()), 0, es, nullptr);
}

std::optional<DeletionPlan> feasibility_bfs(const SubclassGraph& h) {
  const int n = static_cast<int>(h.nodes.size());
  std::vector<std::vector<int>> nb(n);
  for (const auto& [ij, ts] : h.adj) {
    nb[ij.first].push_back(ij.second);
    nb[ij.second].push_back(ij.first);
  }
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : nb[a])
        if (!seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
    }
    for (int i = 0; i < n; ++i)
      if (!seen[i] && h.nodes[i].target != kInf) return std::nullopt;
  }

  std::vector<Time> first(n, kInf);
  first[0] = 0;
  std::map<std::pair<int, int>, std::set<Time>> del;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int b : nb[a]) {
      auto key = std::make_pair(std::min(a, b), std::max(a, b));
      const TimeSet& ts = h.adj.at(key);
      auto& e = del[key];
      const Time tb = h.nodes[b].target;
      for (Time t : ts)
        if (first[a] < t && t < tb) e.insert(t);
      for (Time t : ts)
        if (t > first[a] && !e.count(t)) {
          if (t < first[b]) {
            first[b] = t;
            queue.push_back(b);
          }
          break;
        }
    }
  }
  for (int i = 0; i < n; ++i)
    if (first[i] != h.nodes[i].target) return std::nullopt;
  DeletionPlan plan;
  for (auto& [k, ts] : del)
    if (!ts.empty()) plan.times.emplace(k, TimeSet(ts.begin(), ts.end()));
  return plan;
}

namespace {

struct ClassOptions {
  std::vector<std::vector<Time>> choices;  // each sorted, kInf last
};

// Nonempty subsets of the allowed targets of size <= cap, ordered by their
// flag vector over `allowed` (lexicographic, absent before present).
ClassOptions class_options(const std::vector<Time>& allowed, int cap) {
  ClassOptions o;
  const int m = static_cast<int>(allowed.size());
  std::vector<std::vector<char>> flags;
  for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) > cap) continue;
    std::vector<char> f(m);
    for (int i = 0; i < m; ++i) f[i] = (mask >> i) & 1;
    flags.push_back(std::move(f));
  }
  std::sort(flags.begin(), flags.end());
  for (const auto& f : flags) {
    std::vector<Time> c;
    for (int i = 0; i < m; ++i)
      if (f[i]) c.push_back(allowed[i]);
    o.choices.push_back(std::move(c));
  }
  return o;
}

struct Outcome {
  long long cost = -1;
  long long index = -1;
  Assignment phi;
  SubclassGraph h;
  DeletionPlan plan;
  IQPSolution sol;
  long long checked = 0;
  long long feasible = 0;

  bool better_than(const Outcome& o) const {
    if (cost < 0) return false;
    if (o.cost < 0) return true;
    return std::tie(cost, index) < std::tie(o.cost, o.index);
  }
};

}  // namespace

ReachDeleteResult solve_reachdelete(const TemporalGraph& g, int source, int r, const ReachDeleteOptions& opt) {
  check_source(g, source);
  if (r < (opt.exclude_source ? 0 : 1))
    throw InputError(opt.exclude_source ? "r must be >= 0" : "r must be >= 1 (the source always counts)");

  auto p = temporal_neighbourhood_partition(g);
  auto cands = subclass_candidates(g, p, source);
  auto ea = earliest_arrival(g, source);

  std::vector<ClassOptions> opts(p.k());
  std::vector<long long> radix(p.k(), 1);
  long long total = 1;
  for (int c = 0; c < p.k(); ++c) {
    std::vector<int> members;
    for (int v : p.classes[c])
      if (v != source) members.push_back(v);
    if (members.empty()) {
      opts[c].choices.push_back({});
      continue;
    }
    // Deletions only delay arrivals, so targets below the current earliest
    // arrival of the class are impossible.
    Time lb = kInf;
    for (int v : members) lb = std::min(lb, ea[v]);
    std::vector<Time> allowed;
    for (Time t : cands[c])
      if (t >= lb) allowed.push_back(t);
    allowed.push_back(kInf);
    if (allowed.size() > 20) throw SizeBoundError("too many candidate arrival times in one class");
    opts[c] = class_options(allowed, static_cast<int>(members.size()));
  }
  for (int c = p.k() - 1; c >= 0; --c) {
    radix[c] = total;
    long long m = static_cast<long long>(opts[c].choices.size());
    if (total > (1LL << 40) / m) throw SizeBoundError("assignment space too large");
    total *= m;
  }
  const int reach_budget = opt.exclude_source ? r : r - 1;

  auto evaluate = [&](long long idx, Outcome& best) {
    Assignment phi(p.k());
    int finite = 0;
    long long rem = idx;
    for (int c = 0; c < p.k(); ++c) {
      phi[c] = opts[c].choices[rem / radix[c]];
      rem %= radix[c];
      for (Time t : phi[c])
        if (t != kInf) ++finite;
    }
    ++best.checked;
    if (finite > reach_budget) return;
    auto h = subclass_graph(p, source, phi);
    auto plan = feasibility_bfs(h);
    if (!plan) return;
    ++best.feasible;
    auto inst = build_iqp(h, *plan, p, source, r, opt.exclude_source);
    std::optional<long long> cap;
    if (best.cost >= 0) cap = best.cost;
    auto sol = detail::solve_iqp_capped(inst, opt.max_vars, cap);
    if (!sol) return;
    Outcome o;
    o.cost = sol->objective;
    o.index = idx;
    if (o.better_than(best)) {
      best.cost = o.cost;
      best.index = idx;
      best.phi = std::move(phi);
      best.h = std::move(h);
      best.plan = std::move(*plan);
      best.sol = std::move(*sol);
    }
  };

  const int threads = std::max(1, opt.threads);
  std::vector<Outcome> local(threads);
#pragma omp parallel num_threads(threads) if (threads > 1)
  {
#ifdef _OPENMP
    int tid = omp_get_thread_num();
#else
    int tid = 0;
#endif
#pragma omp for schedule(dynamic, 64)
    for (long long idx = 0; idx < total; ++idx) evaluate(idx, local[tid]);
  }
  Outcome best;
  long long checked = 0, feasible = 0;
  for (auto& o : local) {
    checked += o.checked;
    feasible += o.feasible;
    if (o.better_than(best)) best = std::move(o);
  }
  if (best.cost < 0) throw InputError("no feasible deletion found");  // unreachable: deleting everything works

  ReachDeleteResult res;
  res.min_deletions = best.cost;
  res.phi = best.phi;
  res.assignments_checked = checked;
  res.assignments_feasible = feasible;

  // Fill subclasses in vertex-name order.
  std::vector<std::vector<int>> verts(best.h.nodes.size());
  verts[0] = {source};
  for (int c = 0; c < p.k(); ++c) {
    std::vector<int> members;
    for (int v : p.classes[c])
      if (v != source) members.push_back(v);
    size_t pos = 0;
    for (size_t i = 1; i < best.h.nodes.size(); ++i) {
      if (best.h.nodes[i].cls != c) continue;
      for (int k = 0; k < best.sol.x[i]; ++k) verts[i].push_back(members.at(pos++));
      res.sizes.emplace_back(best.h.nodes[i], best.sol.x[i]);
    }
  }
  for (const auto& [ij, ts] : best.plan.times)
    for (Time t : ts)
      for (int u : verts[ij.first])
        for (int v : verts[ij.second]) {
          auto pr = make_pair_sorted(u, v);
          res.witness.push_back({pr.first, pr.second, t});
        }
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

std::vector<long long> brute_force_reachdelete_all(const TemporalGraph& g, int source, bool exclude_source,
                                                   int max_time_edges) {
  check_source(g, source);
  auto es = sorted_by_time(g);
  const int m = static_cast<int>(es.size());
  if (m > max_time_edges)
    throw SizeBoundError("graph has " + std::to_string(m) + " time-edges; brute-force bound is " +
                         std::to_string(max_time_edges));
  const int n = g.n();
  std::vector<long long> best(n + 1, -1);
  std::vector<char> skip(m);
  for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
    for (int i = 0; i < m; ++i) skip[i] = (mask >> i) & 1;
    auto a = arrivals(n, source, es, &skip);
    int reached = static_cast<int>(std::count_if(a.begin(), a.end(), [](Time t) { return t != kInf; }));
    if (exclude_source) --reached;
    long long cost = std::popcount(mask);
    for (int r = reached; r <= n; ++r)
      if (best[r] < 0 || cost < best[r]) best[r] = cost;
  }
  return best;
}

long long brute_force_reachdelete(const TemporalGraph& g, int source, int r, bool exclude_source,
                                  int max_time_edges) {
  if (r < (exclude_source ? 0 : 1)) throw InputError("r out of range");
  auto all = brute_force_reachdelete_all(g, source, exclude_source, max_time_edges);
  return all[std::min(r, g.n())];
}

TemporalGraph without_time_edges(const TemporalGraph& g, const std::vector<TimeEdge>& deleted) {
  TemporalGraph out = g;
  for (const auto& e : deleted) out.remove_time(e.u, e.v, e.t);
  return out;
}

bool has_useless_deletion(const TemporalGraph& g, int source, const std::vector<TimeEdge>& deleted) {
  auto a = earliest_arrival(without_time_edges(g, deleted), source);
  for (const auto& e : deleted) {
    if (a[e.u] < e.t && a[e.v] < e.t) return true;
    if (e.t <= std::min(a[e.u], a[e.v])) return true;
  }
  return false;
}

bool is_subclass_uniform(const TemporalGraph& g, const NeighbourhoodPartition& p, int source,
                         const std::vector<TimeEdge>& deleted) {
  auto a = earliest_arrival(without_time_edges(g, deleted), source);
  auto group = [&](int v) { return v == source ? std::make_pair(-1, 0) : std::make_pair(p.class_of[v], a[v]); };
  using Key = std::tuple<std::pair<int, Time>, std::pair<int, Time>, Time>;
  auto key = [&](int u, int v, Time t) {
    auto gu = group(u), gv = group(v);
    if (gv < gu) std::swap(gu, gv);
    return Key{gu, gv, t};
  };
  std::map<Key, std::pair<int, int>> count;  // (existing, deleted)
  for (const auto& e : g.time_edges()) ++count[key(e.u, e.v, e.t)].first;
  for (const auto& e : deleted) ++count[key(e.u, e.v, e.t)].second;
  for (const auto& [k, c] : count) {
    if (c.second == 0) continue;
    if (std::get<0>(k) == std::get<1>(k)) return false;
    if (c.second != c.first) return false;
  }
  return true;
}

}  // namespace tgp
