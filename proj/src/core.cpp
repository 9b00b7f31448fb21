#include "tgp/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tgp {

namespace {

const TimeSet kEmptyTimes;

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool valid_name(std::string_view s) {
  return !s.empty() && s != ":" && s.front() != '#';
}

}  // namespace

TemporalGraph::TemporalGraph(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
  adj_.assign(names_.size(), {});
}

bool TemporalGraph::has_vertex(std::string_view name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

int TemporalGraph::index(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) throw InputError("unknown vertex '" + std::string(name) + "'");
  return static_cast<int>(it - names_.begin());
}

void TemporalGraph::add_times(int u, int v, const TimeSet& times) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) throw InputError("vertex index out of range");
  if (u == v) throw InputError("self-loop on '" + names_[u] + "'");
  if (times.empty()) return;
  for (Time t : times)
    if (t < 1) throw InputError("time < 1");
  auto key = make_pair_sorted(u, v);
  auto it = edges_.find(key);
  if (it == edges_.end()) {
    TimeSet ts = times;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    edges_.emplace(key, std::move(ts));
    auto ins = [&](int a, int b) {
      auto& lst = adj_[a];
      lst.insert(std::lower_bound(lst.begin(), lst.end(), b), b);
    };
    ins(u, v);
    ins(v, u);
  } else {
    TimeSet sorted = times;
    std::sort(sorted.begin(), sorted.end());
    it->second = union_times(it->second, sorted);
  }
}

void TemporalGraph::add_times(std::string_view u, std::string_view v, const TimeSet& times) {
  add_times(index(u), index(v), times);
}

void TemporalGraph::remove_time(int u, int v, Time t) {
  auto it = edges_.find(make_pair_sorted(u, v));
  if (it == edges_.end()) return;
  auto& ts = it->second;
  ts.erase(std::remove(ts.begin(), ts.end(), t), ts.end());
  if (ts.empty()) {
    edges_.erase(it);
    auto del = [&](int a, int b) {
      auto& lst = adj_[a];
      lst.erase(std::remove(lst.begin(), lst.end(), b), lst.end());
    };
    del(u, v);
    del(v, u);
  }
}

const TimeSet& TemporalGraph::times(int u, int v) const {
  if (u == v) return kEmptyTimes;
  auto it = edges_.find(make_pair_sorted(u, v));
  return it == edges_.end() ? kEmptyTimes : it->second;
}

bool TemporalGraph::active(int u, int v, Time t) const {
  const auto& ts = times(u, v);
  return std::binary_search(ts.begin(), ts.end(), t);
}

Time TemporalGraph::lifetime() const {
  Time m = 0;
  for (const auto& [p, ts] : edges_) m = std::max(m, ts.back());
  return m;
}

int TemporalGraph::num_time_edges() const {
  int c = 0;
  for (const auto& [p, ts] : edges_) c += static_cast<int>(ts.size());
  return c;
}

std::vector<TimeEdge> TemporalGraph::time_edges() const {
  std::vector<TimeEdge> out;
  for (const auto& [p, ts] : edges_)
    for (Time t : ts) out.push_back({p.first, p.second, t});
  return out;
}

TemporalGraph TemporalGraph::induced(const std::vector<int>& vertices) const {
  std::vector<std::string> nm;
  for (int v : vertices) nm.push_back(names_.at(v));
  TemporalGraph h(nm);
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      const auto& ts = times(vertices[i], vertices[j]);
      if (!ts.empty()) h.add_times(h.index(names_[vertices[i]]), h.index(names_[vertices[j]]), ts);
    }
  return h;
}

bool is_valid_walk(const TemporalGraph& g, const TemporalWalk& w) {
  int at = w.start;
  Time last = 0;
  for (const auto& s : w.steps) {
    if (s.from != at || s.t <= last || !g.active(s.from, s.to, s.t)) return false;
    at = s.to;
    last = s.t;
  }
  return true;
}

TemporalGraph parse_temporal_graph(std::string_view text) {
  struct EdgeLine {
    std::string u, v;
    TimeSet times;
    int line;
  };
  std::vector<std::string> declared;
  std::set<std::string> declared_set;
  std::vector<EdgeLine> edge_lines;
  std::set<std::pair<std::string, std::string>> seen_pairs;
  bool strict = false;
  bool body_started = false;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;

    if (tok[0] == "strict") {
      if (tok.size() != 1 || body_started) throw ParseError("malformed line", line_no);
      strict = true;
      continue;
    }
    body_started = true;
    if (tok[0] == "v") {
      if (tok.size() < 2) throw ParseError("malformed line", line_no);
      for (size_t i = 1; i < tok.size(); ++i) {
        if (!valid_name(tok[i])) throw ParseError("malformed line", line_no);
        std::string nm(tok[i]);
        if (declared_set.insert(nm).second) declared.push_back(nm);
      }
    } else if (tok[0] == "e") {
      if (tok.size() < 5 || tok[3] != ":") throw ParseError("malformed line", line_no);
      EdgeLine el{std::string(tok[1]), std::string(tok[2]), {}, line_no};
      if (!valid_name(tok[1]) || !valid_name(tok[2])) throw ParseError("malformed line", line_no);
      if (el.u == el.v) throw ParseError("self-loop", line_no);
      for (size_t i = 4; i < tok.size(); ++i) {
        long long t = 0;
        auto [p, ec] = std::from_chars(tok[i].data(), tok[i].data() + tok[i].size(), t);
        if (ec != std::errc() || p != tok[i].data() + tok[i].size()) throw ParseError("malformed line", line_no);
        if (t < 1) throw ParseError("time < 1", line_no);
        if (t > std::numeric_limits<Time>::max() / 2) throw ParseError("time too large", line_no);
        el.times.push_back(static_cast<Time>(t));
      }
      std::sort(el.times.begin(), el.times.end());
      if (std::adjacent_find(el.times.begin(), el.times.end()) != el.times.end())
        throw ParseError("duplicate time", line_no);
      auto key = el.u < el.v ? std::make_pair(el.u, el.v) : std::make_pair(el.v, el.u);
      if (!seen_pairs.insert(key).second) throw ParseError("duplicate edge", line_no);
      for (const auto* nm : {&el.u, &el.v}) {
        if (!declared_set.count(*nm)) {
          if (strict) throw ParseError("unknown vertex '" + *nm + "'", line_no);
          declared_set.insert(*nm);
          declared.push_back(*nm);
        }
      }
      edge_lines.push_back(std::move(el));
    } else {
      throw ParseError("malformed line", line_no);
    }
  }

  TemporalGraph g(declared);
  for (const auto& el : edge_lines) g.add_times(el.u, el.v, el.times);
  return g;
}

std::string serialize_temporal_graph(const TemporalGraph& g) {
  std::ostringstream os;
  if (g.n() > 0) {
    os << 'v';
    for (const auto& nm : g.names()) os << ' ' << nm;
    os << '\n';
  }
  for (const auto& [p, ts] : g.edges()) {
    os << "e " << g.name(p.first) << ' ' << g.name(p.second) << " :";
    for (Time t : ts) os << ' ' << t;
    os << '\n';
  }
  return os.str();
}

StaticGraph snapshot(const TemporalGraph& g, Time t) {
  StaticGraph s{g.names(), {}};
  for (const auto& [p, ts] : g.edges())
    if (std::binary_search(ts.begin(), ts.end(), t)) s.edges.insert(p);
  return s;
}

StaticGraph underlying_graph(const TemporalGraph& g) {
  StaticGraph s{g.names(), {}};
  for (const auto& [p, ts] : g.edges()) s.edges.insert(p);
  return s;
}

std::vector<Time> earliest_arrival(const TemporalGraph& g, int source) {
  if (source < 0 || source >= g.n()) throw InputError("unknown source vertex");
  std::vector<Time> arr(g.n(), kInf);
  arr[source] = 0;
  auto tes = g.time_edges();
  std::stable_sort(tes.begin(), tes.end(), [](const TimeEdge& a, const TimeEdge& b) { return a.t < b.t; });
  // Within one time step a vertex first reached at t cannot relay at t, so an
  // in-place sweep is exact: fresh arrivals equal t and fail the `< t` test.
  for (const auto& e : tes) {
    if (arr[e.u] < e.t && arr[e.v] > e.t) arr[e.v] = e.t;
    if (arr[e.v] < e.t && arr[e.u] > e.t) arr[e.u] = e.t;
  }
  return arr;
}

std::set<int> reach_set(const TemporalGraph& g, int source) {
  auto arr = earliest_arrival(g, source);
  std::set<int> out;
  for (int v = 0; v < g.n(); ++v)
    if (arr[v] != kInf) out.insert(v);
  return out;
}

int temporality(const TemporalGraph& g) {
  size_t m = 0;
  for (const auto& [p, ts] : g.edges()) m = std::max(m, ts.size());
  return static_cast<int>(m);
}

std::vector<std::vector<int>> connected_components(const TemporalGraph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
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
  return out;
}

TimeSet intersect_times(const TimeSet& a, const TimeSet& b) {
  TimeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

TimeSet union_times(const TimeSet& a, const TimeSet& b) {
  TimeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace fixtures {

TemporalGraph path() {
  TemporalGraph g({"a", "b", "c"});
  g.add_times("a", "b", {1});
  g.add_times("b", "c", {2});
  return g;
}

TemporalGraph star3() {
  TemporalGraph g({"c", "l1", "l2", "l3"});
  g.add_times("c", "l1", {1, 2});
  g.add_times("c", "l2", {3, 4});
  g.add_times("c", "l3", {5, 6});
  return g;
}

TemporalGraph twin() {
  TemporalGraph g({"u", "v", "w"});
  g.add_times("u", "w", {1, 3});
  g.add_times("v", "w", {1, 3});
  return g;
}

}  // namespace fixtures

}  // namespace tgp
