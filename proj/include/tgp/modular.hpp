#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgp/cliquewidth.hpp"
#include "tgp/core.hpp"

namespace tgp {

enum class TMDKind { Leaf, Parallel, Series, Prime };

const char* to_string(TMDKind k);

struct TMDNode {
  TMDKind kind = TMDKind::Leaf;
  std::vector<int> vertices;  // sorted vertex indices of the host graph
  // Quotient on the children; node i is named after child i's smallest member.
  TemporalGraph quotient;
  TimeSet series_times;  // Series nodes: the uniform cross time set
  std::vector<TMDNode> children;  // ordered by smallest member
};

struct TMDTree {
  std::vector<std::string> names;  // host graph vertex names
  TMDNode root;
};

// Throws InputError when m is empty or not a subset of V.
bool is_temporal_module(const TemporalGraph& g, const std::vector<int>& m);

// Smallest module of g[within] containing `seed`, grown by adding the
// modules (from `modules`) that contain splitters, smallest splitter first.
std::vector<int> grow_candidate(const TemporalGraph& g, const std::vector<int>& within,
                                const std::vector<std::vector<int>>& modules, std::vector<int> seed);

// Splitter-growing pairwise merge over the prime residue `within`. Pairs are
// scanned in lexicographic class-index order unless `shuffle_seed` is given,
// in which case each round scans pairs in a seeded random order.
std::vector<std::vector<int>> grow_maximal_modules(const TemporalGraph& g, const std::vector<int>& within,
                                                   std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// Maximal strong modules of g: connected components when G↓ is disconnected,
// the uniform-split classes for a series graph, otherwise the unique maximal
// proper modules found by grow_maximal_modules.
std::vector<std::vector<int>> maximal_temporal_modules(const TemporalGraph& g);

// Time set T and the classes of a uniform complete split of g[within], if any.
struct SeriesSplit {
  TimeSet times;
  std::vector<std::vector<int>> classes;  // >= 2 classes, ordered by smallest member
};
std::optional<SeriesSplit> find_series_split(const TemporalGraph& g, const std::vector<int>& within);

TMDTree decomposition_tree(const TemporalGraph& g);
int temporal_modular_width(const TMDTree& t);

// Substitutes children into quotients bottom-up and returns the result.
TemporalGraph evaluate_tree(const TMDTree& t);

CWExpression tmw_to_tcw_expression(const TMDTree& t);

}  // namespace tgp
