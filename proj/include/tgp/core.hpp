#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tgp {

using Time = int;
using TimeSet = std::vector<Time>;  // strictly increasing, every entry >= 1

inline constexpr Time kInf = std::numeric_limits<Time>::max();

// Unordered vertex pair stored with the smaller index first.
using VertexPair = std::pair<int, int>;

inline VertexPair make_pair_sorted(int a, int b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Raised by operations whose inputs violate a precondition (unknown vertex,
// parameter out of range, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive routine is asked to run past its configured size.
class SizeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TimeEdge {
  int u = 0;  // u < v
  int v = 0;
  Time t = 0;
  auto operator<=>(const TimeEdge&) const = default;
};

class TemporalGraph {
 public:
  TemporalGraph() = default;
  // Vertex names are sorted and deduplicated; indices follow that order.
  explicit TemporalGraph(std::vector<std::string> names);

  int n() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  bool has_vertex(std::string_view name) const;
  int index(std::string_view name) const;  // throws InputError

  // Adds times to the pair (merging with existing times).
  void add_times(int u, int v, const TimeSet& times);
  void add_times(std::string_view u, std::string_view v, const TimeSet& times);
  void remove_time(int u, int v, Time t);

  const std::map<VertexPair, TimeSet>& edges() const { return edges_; }
  const TimeSet& times(int u, int v) const;
  bool adjacent(int u, int v) const { return !times(u, v).empty(); }
  bool active(int u, int v, Time t) const;
  const std::vector<int>& neighbours(int v) const { return adj_.at(v); }

  Time lifetime() const;
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_time_edges() const;
  std::vector<TimeEdge> time_edges() const;  // sorted by (u, v, t)

  TemporalGraph induced(const std::vector<int>& vertices) const;

  bool operator==(const TemporalGraph& o) const {
    return names_ == o.names_ && edges_ == o.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::map<VertexPair, TimeSet> edges_;
  std::vector<std::vector<int>> adj_;
};

struct StaticGraph {
  std::vector<std::string> names;
  std::set<VertexPair> edges;

  int n() const { return static_cast<int>(names.size()); }
  bool adjacent(int u, int v) const { return edges.count(make_pair_sorted(u, v)) > 0; }
  bool operator==(const StaticGraph&) const = default;
};

struct WalkStep {
  int from = 0;
  int to = 0;
  Time t = 0;
  bool operator==(const WalkStep&) const = default;
};

struct TemporalWalk {
  int start = 0;
  std::vector<WalkStep> steps;
};

// True iff consecutive steps chain, each step's time is active on its pair
// and times strictly increase.
bool is_valid_walk(const TemporalGraph& g, const TemporalWalk& w);

TemporalGraph parse_temporal_graph(std::string_view text);
std::string serialize_temporal_graph(const TemporalGraph& g);

StaticGraph snapshot(const TemporalGraph& g, Time t);
StaticGraph underlying_graph(const TemporalGraph& g);

std::vector<Time> earliest_arrival(const TemporalGraph& g, int source);
std::set<int> reach_set(const TemporalGraph& g, int source);
int temporality(const TemporalGraph& g);

// Connected components of the underlying graph, each sorted, ordered by
// smallest member.
std::vector<std::vector<int>> connected_components(const TemporalGraph& g);

TimeSet intersect_times(const TimeSet& a, const TimeSet& b);
TimeSet union_times(const TimeSet& a, const TimeSet& b);

namespace fixtures {
TemporalGraph path();   // a-b-c, ab@{1}, bc@{2}
TemporalGraph star3();  // centre c, leaves l1 l2 l3 at {1,2} {3,4} {5,6}
TemporalGraph twin();   // uw, vw at {1,3}
}  // namespace fixtures

}  // namespace tgp
