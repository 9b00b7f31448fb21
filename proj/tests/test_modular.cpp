#include <gtest/gtest.h>

#include <numeric>

#include "tgp/generators.hpp"
#include "tgp/modular.hpp"
#include "tgp/oracles.hpp"

using namespace tgp;

namespace {

TemporalGraph uniform_k4() {
  TemporalGraph g({"a", "b", "c", "d"});
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_times(u, v, {1});
  return g;
}

std::vector<int> all_vertices(const TemporalGraph& g) {
  std::vector<int> v(g.n());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void check_shape(const TMDNode& n) {
  if (n.kind == TMDKind::Leaf) {
    EXPECT_EQ(n.vertices.size(), 1u);
    EXPECT_TRUE(n.children.empty());
    return;
  }
  if (n.kind == TMDKind::Prime) EXPECT_GE(n.children.size(), 3u);
  else EXPECT_EQ(n.children.size(), 2u);
  std::vector<int> merged;
  for (const auto& c : n.children) {
    merged.insert(merged.end(), c.vertices.begin(), c.vertices.end());
    check_shape(c);
  }
  std::sort(merged.begin(), merged.end());
  EXPECT_EQ(merged, n.vertices);
}

TemporalGraph mixed(gen::Rng& rng, int max_n, int life) {
  int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  if (rng() % 2) return gen::random_graph(rng, n, life, 0.5, 2);
  return gen::random_blowup(rng, n, std::max(1, n / 2), life, 0.6, 2);
}

}  // namespace

TEST(Module, Examples) {
  auto tw = fixtures::twin();
  EXPECT_TRUE(is_temporal_module(tw, {0, 1}));
  auto p = fixtures::path();
  EXPECT_FALSE(is_temporal_module(p, {0, 1}));
  EXPECT_TRUE(is_temporal_module(p, all_vertices(p)));
  EXPECT_THROW(is_temporal_module(p, {}), InputError);
  EXPECT_THROW(is_temporal_module(p, {7}), InputError);
}

TEST(MaximalModules, Examples) {
  EXPECT_EQ(maximal_temporal_modules(fixtures::twin()), (std::vector<std::vector<int>>{{0, 1}, {2}}));
  EXPECT_EQ(maximal_temporal_modules(fixtures::path()), (std::vector<std::vector<int>>{{0}, {1}, {2}}));
  TemporalGraph star({"c", "l1", "l2", "l3"});
  for (const char* l : {"l1", "l2", "l3"}) star.add_times("c", l, {1});
  EXPECT_EQ(maximal_temporal_modules(star), (std::vector<std::vector<int>>{{0}, {1, 2, 3}}));
}

TEST(MaximalModules, MatchOracle) {
  gen::Rng rng(21);
  for (int i = 0; i < 150; ++i) {
    auto g = mixed(rng, 7, 3);
    EXPECT_EQ(maximal_temporal_modules(g), oracle::maximal_strong_modules(g)) << serialize_temporal_graph(g);
  }
}

TEST(GrowModules, ScanOrderDoesNotMatter) {
  gen::Rng rng(22);
  int prime = 0;
  for (int i = 0; i < 200; ++i) {
    auto g = mixed(rng, 8, 3);
    auto v = all_vertices(g);
    if (g.n() < 4 || connected_components(g).size() > 1 || find_series_split(g, v)) continue;
    ++prime;
    auto base = grow_maximal_modules(g, v);
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
      EXPECT_EQ(grow_maximal_modules(g, v, seed), base) << serialize_temporal_graph(g);
  }
  EXPECT_GT(prime, 10);
}

TEST(DecompositionTree, Twin) {
  auto g = fixtures::twin();
  auto t = decomposition_tree(g);
  EXPECT_EQ(temporal_modular_width(t), 2);
  ASSERT_EQ(t.root.children.size(), 2u);
  EXPECT_EQ(t.root.children[0].vertices, (std::vector<int>{0, 1}));
  EXPECT_EQ(t.root.children[0].kind, TMDKind::Parallel);
  EXPECT_EQ(evaluate_tree(t), g);
}

TEST(DecompositionTree, PathIsPrimeWithThreeChildren) {
  auto t = decomposition_tree(fixtures::path());
  EXPECT_EQ(t.root.kind, TMDKind::Prime);
  EXPECT_EQ(t.root.children.size(), 3u);
  EXPECT_EQ(temporal_modular_width(t), 3);
}

TEST(DecompositionTree, UniformCliqueIsSeriesChain) {
  auto t = decomposition_tree(uniform_k4());
  EXPECT_EQ(t.root.kind, TMDKind::Series);
  EXPECT_EQ(t.root.series_times, (TimeSet{1}));
  EXPECT_EQ(temporal_modular_width(t), 2);
  check_shape(t.root);
}

TEST(DecompositionTree, SingleVertex) {
  TemporalGraph g({"x"});
  auto t = decomposition_tree(g);
  EXPECT_EQ(t.root.kind, TMDKind::Leaf);
  EXPECT_EQ(temporal_modular_width(t), 1);
  auto e = tmw_to_tcw_expression(t);
  EXPECT_EQ(e.width(), 1);
  EXPECT_EQ(e.nodes().size(), 1u);
}

TEST(DecompositionTree, ShapeAndReevaluation) {
  gen::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    auto g = mixed(rng, 8, 4);
    auto t = decomposition_tree(g);
    check_shape(t.root);
    EXPECT_EQ(evaluate_tree(t), g) << serialize_temporal_graph(g);
  }
}

TEST(DecompositionTree, WidthMatchesExhaustiveOracle) {
  gen::Rng rng(24);
  for (int i = 0; i < 120; ++i) {
    auto g = mixed(rng, 6, 3);
    EXPECT_EQ(temporal_modular_width(decomposition_tree(g)), oracle::modular_width(g)) << serialize_temporal_graph(g);
  }
}

TEST(Compile, FixturesEvaluateBack) {
  for (const auto& g : {fixtures::twin(), fixtures::path(), fixtures::star3(), uniform_k4()}) {
    auto t = decomposition_tree(g);
    auto e = tmw_to_tcw_expression(t);
    EXPECT_TRUE(verify_expression(e, g));
    EXPECT_LE(e.width(), std::max(2, temporal_modular_width(t)));
  }
  EXPECT_LE(tmw_to_tcw_expression(decomposition_tree(fixtures::twin())).width(), 2);
}
