#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgp/core.hpp"

namespace tgp {

struct TemporalStar {
  std::string centre;
  std::vector<std::string> leaves;  // sorted by name
  std::vector<TimeSet> times;       // times[i] belongs to leaves[i]
};

// Throws InputError if g is not a star.
TemporalStar star_from_graph(const TemporalGraph& g);
TemporalGraph star_to_graph(const TemporalStar& s);

// Leaf indices grouped by identical time set, ordered by smallest member.
std::vector<std::vector<int>> leaf_time_classes(const TemporalStar& s);

struct StarExpResult {
  bool yes = false;
  std::string reason;              // "pigeonhole", "no-ordering" or "" on success
  std::vector<int> order;          // leaf visiting order of the witness
  std::vector<WalkStep> walk;      // indices into star_to_graph(s)
};

struct StarExpOptions {
  int threads = 1;
  int max_leaves = 10;  // larger stars raise SizeBoundError once ordering search is needed
};

StarExpResult solve_starexp(const TemporalStar& s, int tau, const StarExpOptions& opt = {});
// Serial reference used to validate the parallel path.
StarExpResult solve_starexp_serial(const TemporalStar& s, int tau);

// Earliest-pair greedy walk for one leaf ordering; nullopt when it fails.
std::optional<std::vector<std::pair<Time, Time>>> greedy_visit(const TemporalStar& s, const std::vector<int>& order);

}  // namespace tgp
