#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgp/core.hpp"
#include "tgp/partition.hpp"

namespace tgp {

using BurningStrategy = std::vector<int>;  // vertex per timestep, 1-based time = position + 1

struct BurnTrace {
  std::vector<std::vector<char>> burning;  // burning[t-1][v] after the t-th placement
};

BurnTrace simulate(const TemporalGraph& g, const BurningStrategy& s);
bool is_successful(const TemporalGraph& g, const BurningStrategy& s);

struct BurningResult {
  bool yes = false;
  BurningStrategy witness;
  // Canonical enumeration coordinates of the witness (class indices).
  std::vector<int> order;  // ordering of A
  std::vector<int> b_set;  // B, sorted
  long long strategies_checked = 0;
  // False when the class count exceeded the canonical bound and the witness
  // is the first one found by the decision search (order and b_set then
  // describe it, or are empty if it has no class-strategy form).
  bool canonical = true;
};

struct BurningOptions {
  int threads = 1;
  // Prune A-prefixes with a disjoint-demand lower bound. Turning this off
  // gives the plain enumeration (exponential in the number of classes).
  bool prune = true;
  // Above this many classes only the decision search runs.
  int canonical_max_classes = 12;
};

// Class-based search over (A, ordering of A, B subset of A). The witness is
// the first success in the order: |A|, A lexicographic, ordering
// lexicographic, |B|, B lexicographic.
BurningResult solve_tnd_burning(const TemporalGraph& g, int h,
                                const std::optional<NeighbourhoodPartition>& p = std::nullopt,
                                const BurningOptions& opt = {});

// Unpruned enumeration of the same candidate space, kept as a reference.
BurningResult solve_tnd_burning_reference(const TemporalGraph& g, int h,
                                          const std::optional<NeighbourhoodPartition>& p = std::nullopt);

// Builds the strategy for one (ordering, B) choice, stopping as soon as all
// vertices burn or the budget h is reached.
BurningStrategy class_strategy(const TemporalGraph& g, const NeighbourhoodPartition& p,
                               const std::vector<int>& order, const std::vector<int>& b_set, int h);

// Minimum successful strategy length by breadth-first search over burning
// sets. Throws SizeBoundError when n exceeds max_n.
int brute_force_burning_number(const TemporalGraph& g, int max_n = 6);

struct Literal {
  int var = 0;  // 1-based
  bool positive = true;
  auto operator<=>(const Literal&) const = default;
};

struct Formula32B {
  int n = 0;
  std::vector<std::vector<Literal>> clauses;  // each of size 3
};

// Throws InputError unless every clause has three literals and every
// variable occurs exactly twice positively and twice negatively.
void validate_formula(const Formula32B& f);
Formula32B parse_dimacs(std::string_view text);
std::string format_dimacs(const Formula32B& f);
bool brute_force_satisfiable(const Formula32B& f);

struct BurningInstance {
  TemporalGraph graph;
  int h = 0;
};

// leaf_multiplicity = 0 uses the full h + 1 leaves per hub.
BurningInstance sat_to_burning(const Formula32B& f, int leaf_multiplicity = 0);

// Strategy derived from a satisfying assignment (assignment[i-1] = value of x_i).
BurningStrategy strategy_from_assignment(const Formula32B& f, const BurningInstance& inst,
                                         const std::vector<bool>& assignment);

}  // namespace tgp
