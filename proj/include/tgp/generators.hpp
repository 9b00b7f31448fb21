#pragma once

#include <cstdint>
#include <random>

#include "tgp/burning.hpp"
#include "tgp/cliquewidth.hpp"
#include "tgp/core.hpp"
#include "tgp/starexp.hpp"

namespace tgp::gen {

using Rng = std::mt19937_64;

// Vertex names v00, v01, ... so that index order matches name order.
std::vector<std::string> vertex_names(int n);

// Random subset of [1, lifetime] with 1..max_times elements.
TimeSet random_times(Rng& rng, int lifetime, int max_times);

// Each pair becomes an edge with probability edge_prob.
TemporalGraph random_graph(Rng& rng, int n, int lifetime, double edge_prob, int max_times = 2);

// Blow-up of a random quotient on k classes: every class is an independent
// set or a clique at shared times, and class pairs are uniform. Produces
// graphs with nontrivial twin classes and modules.
TemporalGraph random_blowup(Rng& rng, int n, int k, int lifetime, double edge_prob, int max_times = 2);

TemporalStar random_star(Rng& rng, int leaves, int lifetime, int max_times);

// Uniformly shuffled (3,2B) formula; n must be a multiple of 3.
Formula32B random_formula(Rng& rng, int n);

CWExpression random_static_expression(Rng& rng, int vertices, int width, double join_prob = 0.5);
CWExpression random_temporal_expression(Rng& rng, int vertices, int width, int lifetime, double join_prob = 0.5);

}  // namespace tgp::gen
