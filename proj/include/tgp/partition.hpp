#pragma once

#include <map>
#include <vector>

#include "tgp/core.hpp"

namespace tgp {

struct NeighbourhoodPartition {
  std::vector<std::vector<int>> classes;  // sorted members, ordered by smallest member
  std::vector<TimeSet> internal_times;    // times at which the class is a clique
  std::map<std::pair<int, int>, TimeSet> cross_times;  // class pair (a < b) -> times; absent = never
  std::vector<int> class_of;              // vertex -> class index

  int k() const { return static_cast<int>(classes.size()); }
  const TimeSet& cross(int a, int b) const;
  // Times at which vertices of classes a and b (a may equal b) are adjacent.
  const TimeSet& adjacency(int a, int b) const { return a == b ? internal_times.at(a) : cross(a, b); }
};

bool same_temporal_type(const TemporalGraph& g, int u, int v);

NeighbourhoodPartition temporal_neighbourhood_partition(const TemporalGraph& g);

// Throws InputError when `classes` is not a partition of V.
bool verify_partition(const TemporalGraph& g, const std::vector<std::vector<int>>& classes);

// Builds the tables for a candidate partition; throws InputError if it fails
// verify_partition.
NeighbourhoodPartition make_partition(const TemporalGraph& g, std::vector<std::vector<int>> classes);

// One node per class, named after the class's smallest member. Internal clique
// times are not representable as loops; read them from p.internal_times.
TemporalGraph quotient_graph(const TemporalGraph& g, const NeighbourhoodPartition& p);

}  // namespace tgp
