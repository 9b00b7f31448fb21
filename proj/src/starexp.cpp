#include "tgp/starexp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tgp/cliquewidth.hpp"

namespace tgp {

TemporalStar star_from_graph(const TemporalGraph& g) {
  auto c = find_star_centre(g);
  if (!c) throw InputError("input is not a star");
  TemporalStar s;
  s.centre = g.name(*c);
  for (int v = 0; v < g.n(); ++v) {
    if (v == *c) continue;
    s.leaves.push_back(g.name(v));
    s.times.push_back(g.times(*c, v));
  }
  return s;
}

TemporalGraph star_to_graph(const TemporalStar& s) {
  std::vector<std::string> names = s.leaves;
  names.push_back(s.centre);
  TemporalGraph g(names);
  for (size_t i = 0; i < s.leaves.size(); ++i) g.add_times(s.centre, s.leaves[i], s.times[i]);
  return g;
}

std::vector<std::vector<int>> leaf_time_classes(const TemporalStar& s) {
  std::map<TimeSet, std::vector<int>> by;
  for (size_t i = 0; i < s.leaves.size(); ++i) by[s.times[i]].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& [ts, c] : by) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::pair<Time, Time>>> greedy_visit(const TemporalStar& s,
                                                                 const std::vector<int>& order) {
  std::vector<std::pair<Time, Time>> out;
  Time now = 0;
  for (int l : order) {
    const auto& ts = s.times.at(l);
    auto in = std::upper_bound(ts.begin(), ts.end(), now);
    if (in == ts.end()) return std::nullopt;
    auto back = std::next(in);
    if (back == ts.end()) return std::nullopt;
    out.emplace_back(*in, *back);
    now = *back;
  }
  return out;
}

namespace {

std::optional<StarExpResult> precheck(const TemporalStar& s, int tau, int max_leaves) {
  if (tau < 1) throw InputError("tau must be >= 1");
  for (size_t i = 0; i < s.leaves.size(); ++i) {
    if (s.times[i].empty()) throw InputError("leaf '" + s.leaves[i] + "' has no appearances");
    if (static_cast<int>(s.times[i].size()) > tau)
      throw InputError("leaf '" + s.leaves[i] + "' has more than tau appearances");
  }
  for (const auto& c : leaf_time_classes(s))
    if (static_cast<int>(c.size()) > tau / 2) return StarExpResult{false, "pigeonhole", {}, {}};
  if (s.leaves.empty()) return StarExpResult{true, "", {}, {}};
  if (static_cast<int>(s.leaves.size()) > max_leaves)
    throw SizeBoundError("star has " + std::to_string(s.leaves.size()) + " leaves; ordering search bound is " +
                         std::to_string(max_leaves));
  return std::nullopt;
}

StarExpResult make_witness(const TemporalStar& s, const std::vector<int>& order,
                           const std::vector<std::pair<Time, Time>>& visits) {
  StarExpResult r;
  r.yes = true;
  r.order = order;
  TemporalGraph g = star_to_graph(s);
  int c = g.index(s.centre);
  for (size_t i = 0; i < order.size(); ++i) {
    int l = g.index(s.leaves[order[i]]);
    r.walk.push_back({c, l, visits[i].first});
    r.walk.push_back({l, c, visits[i].second});
  }
  return r;
}

// First successful ordering (lexicographic) among those starting with `first`.
std::optional<std::vector<int>> first_success_from(const TemporalStar& s, int first) {
  const int L = static_cast<int>(s.leaves.size());
  std::vector<int> rest;
  for (int i = 0; i < L; ++i)
    if (i != first) rest.push_back(i);
  std::vector<int> order(L);
  do {
    order[0] = first;
    std::copy(rest.begin(), rest.end(), order.begin() + 1);
    if (greedy_visit(s, order)) return order;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

}  // namespace

StarExpResult solve_starexp_serial(const TemporalStar& s, int tau) {
  if (auto early = precheck(s, tau, 10)) return *early;
  std::vector<int> order(s.leaves.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (auto v = greedy_visit(s, order)) return make_witness(s, order, *v);
  } while (std::next_permutation(order.begin(), order.end()));
  return {false, "no-ordering", {}, {}};
}

StarExpResult solve_starexp(const TemporalStar& s, int tau, const StarExpOptions& opt) {
  if (auto early = precheck(s, tau, opt.max_leaves)) return *early;
  const int L = static_cast<int>(s.leaves.size());
  std::vector<std::optional<std::vector<int>>> found(L);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opt.threads)) if (opt.threads > 1)
  for (int f = 0; f < L; ++f) found[f] = first_success_from(s, f);
  for (int f = 0; f < L; ++f)
    if (found[f]) return make_witness(s, *found[f], *greedy_visit(s, *found[f]));
  return {false, "no-ordering", {}, {}};
}

}  // namespace tgp
