#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tgp/core.hpp"
#include "tgp/partition.hpp"

namespace tgp {

// Per class, the finite times at which some incident edge (cross or internal)
// is active. Indexed like p.classes.
std::vector<TimeSet> subclass_candidates(const TemporalGraph& g, const NeighbourhoodPartition& p, int source);

// Per class, the chosen nonempty subclass targets in ascending order (kInf
// last). The source's class lists targets for its members other than the
// source, and is empty if the source is alone in its class.
using Assignment = std::vector<std::vector<Time>>;

struct SubclassNode {
  int cls = -1;  // -1 for the source node
  Time target = 0;
  auto operator<=>(const SubclassNode&) const = default;
};

struct SubclassGraph {
  std::vector<SubclassNode> nodes;  // nodes[0] is the source
  std::map<std::pair<int, int>, TimeSet> adj;  // node pairs i < j with nonempty adjacency
  const TimeSet& times(int i, int j) const;
};

SubclassGraph subclass_graph(const NeighbourhoodPartition& p, int source, const Assignment& phi);

// Unordered node pair (i < j) -> deleted times.
struct DeletionPlan {
  std::map<std::pair<int, int>, TimeSet> times;
  size_t size() const;
};

// Earliest arrival per node of h after removing the plan's times.
std::vector<Time> subclass_arrivals(const SubclassGraph& h, const DeletionPlan& plan);

// Breadth-first relaxation that deletes every adjacency time strictly
// between a node's first arrival and a neighbour's target. Returns the plan
// when every node is first reached exactly at its target.
std::optional<DeletionPlan> feasibility_bfs(const SubclassGraph& h);

struct IQPInstance {
  // Variable i counts the vertices in node i of the subclass graph; x[0] is
  // the source and fixed to 1.
  std::vector<std::vector<long long>> q;  // upper triangular
  std::vector<std::vector<int>> groups;   // per class, its variables
  std::vector<int> group_size;            // required sum per group
  std::vector<int> reached;               // variables with finite target
  int r = 0;                              // bound on the sum over `reached`
  size_t num_vars() const { return q.size(); }
};

IQPInstance build_iqp(const SubclassGraph& h, const DeletionPlan& plan, const NeighbourhoodPartition& p, int source,
                      int r, bool exclude_source);

struct IQPSolution {
  long long objective = 0;
  std::vector<int> x;
};

// Exhaustive lattice search with partial-objective pruning. Every variable
// is at least 1. Throws SizeBoundError beyond max_vars variables.
std::optional<IQPSolution> solve_iqp_exact(const IQPInstance& inst, int max_vars = 24);

struct ReachDeleteOptions {
  bool exclude_source = false;  // r then bounds the reached vertices other than the source
  int threads = 1;
  int max_vars = 24;
};

struct ReachDeleteResult {
  long long min_deletions = 0;
  std::vector<TimeEdge> witness;  // sorted
  Assignment phi;
  std::vector<std::pair<SubclassNode, int>> sizes;  // per nonempty subclass (source excluded)
  long long assignments_checked = 0;
  long long assignments_feasible = 0;
};

ReachDeleteResult solve_reachdelete(const TemporalGraph& g, int source, int r, const ReachDeleteOptions& opt = {});

// Minimum over all subsets of time-edges. Throws SizeBoundError when the
// graph has more than max_time_edges time-edges.
long long brute_force_reachdelete(const TemporalGraph& g, int source, int r, bool exclude_source = false,
                                  int max_time_edges = 14);

// Every r at once: out[r] for r in [0, n].
std::vector<long long> brute_force_reachdelete_all(const TemporalGraph& g, int source, bool exclude_source = false,
                                                   int max_time_edges = 14);

// Property checks on a deletion set.
bool has_useless_deletion(const TemporalGraph& g, int source, const std::vector<TimeEdge>& deleted);
bool is_subclass_uniform(const TemporalGraph& g, const NeighbourhoodPartition& p, int source,
                         const std::vector<TimeEdge>& deleted);

TemporalGraph without_time_edges(const TemporalGraph& g, const std::vector<TimeEdge>& deleted);

}  // namespace tgp
