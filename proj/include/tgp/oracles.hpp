#pragma once

#include <cstdint>
#include <vector>

#include "tgp/core.hpp"
#include "tgp/starexp.hpp"

// Exhaustive reference implementations used to cross-check the solvers.
// Each one is written against the definitions directly and shares no code
// with the routine it checks.
namespace tgp::oracle {

// All nonempty vertex sets without a splitter in any snapshot, as bitmasks.
// Throws SizeBoundError for n > 16.
std::vector<uint32_t> all_modules(const TemporalGraph& g);

// Maximal proper strong modules (strong: overlaps no other module), sorted.
// For n == 1 returns {V}.
std::vector<std::vector<int>> maximal_strong_modules(const TemporalGraph& g);

// Minimum over module partitions (at least two parts) of
// max(#parts, max width of a part), recursively; 1 on a single vertex.
// Throws SizeBoundError for n > 8.
int modular_width(const TemporalGraph& g);

// Pairs active in every window [i, i + delta - 1], i in [1, lifetime - delta + 1].
StaticGraph association_graph(const TemporalGraph& g, int delta);

// Largest clique by subset enumeration. Throws SizeBoundError for n > 22.
int max_clique(const StaticGraph& g);

// Enumerates every closed walk from the centre. Throws SizeBoundError for
// lifetime > 12 or more than 8 leaves.
bool star_explorable(const TemporalStar& s);

}  // namespace tgp::oracle
