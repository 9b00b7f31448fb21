#include <gtest/gtest.h>

#include "tgp/generators.hpp"
#include "tgp/partition.hpp"

using namespace tgp;

namespace {

TemporalGraph uniform_k4() {
  TemporalGraph g({"a", "b", "c", "d"});
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_times(u, v, {1});
  return g;
}

}  // namespace

TEST(SameType, Examples) {
  auto tw = fixtures::twin();
  EXPECT_TRUE(same_temporal_type(tw, tw.index("u"), tw.index("v")));
  EXPECT_FALSE(same_temporal_type(tw, tw.index("u"), tw.index("w")));
  auto p = fixtures::path();
  EXPECT_FALSE(same_temporal_type(p, p.index("a"), p.index("c")));
}

TEST(Partition, Twin) {
  auto g = fixtures::twin();
  auto p = temporal_neighbourhood_partition(g);
  ASSERT_EQ(p.k(), 2);
  EXPECT_EQ(p.classes[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(p.classes[1], (std::vector<int>{2}));
  EXPECT_TRUE(p.internal_times[0].empty());
  EXPECT_EQ(p.cross(0, 1), (TimeSet{1, 3}));
}

TEST(Partition, UniformCliqueIsOneClass) {
  auto p = temporal_neighbourhood_partition(uniform_k4());
  ASSERT_EQ(p.k(), 1);
  EXPECT_EQ(p.internal_times[0], (TimeSet{1}));
}

TEST(Partition, PathIsAllSingletons) {
  EXPECT_EQ(temporal_neighbourhood_partition(fixtures::path()).k(), 3);
}

TEST(Partition, TablesDescribeEverySnapshot) {
  gen::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    auto g = gen::random_blowup(rng, 8, 4, 4, 0.5, 2);
    auto p = temporal_neighbourhood_partition(g);
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v) {
        const auto& want = p.adjacency(p.class_of[u], p.class_of[v]);
        EXPECT_EQ(g.times(u, v), want) << serialize_temporal_graph(g);
      }
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        EXPECT_EQ(p.class_of[u] == p.class_of[v], same_temporal_type(g, u, v));
  }
}

TEST(VerifyPartition, Examples) {
  auto tw = fixtures::twin();
  EXPECT_TRUE(verify_partition(tw, {{0, 1}, {2}}));
  auto p = fixtures::path();
  EXPECT_FALSE(verify_partition(p, {{0, 2}, {1}}));
  EXPECT_TRUE(verify_partition(p, {{0}, {1}, {2}}));
  EXPECT_THROW(verify_partition(p, {{0}, {1}}), InputError);
  EXPECT_THROW(verify_partition(p, {{0, 1}, {1, 2}}), InputError);
  EXPECT_THROW(make_partition(p, {{0, 2}, {1}}), InputError);
}

TEST(Quotient, Examples) {
  auto tw = fixtures::twin();
  auto q = quotient_graph(tw, temporal_neighbourhood_partition(tw));
  EXPECT_EQ(q.n(), 2);
  EXPECT_EQ(q.times(0, 1), (TimeSet{1, 3}));

  auto k4 = uniform_k4();
  auto pk = temporal_neighbourhood_partition(k4);
  auto qk = quotient_graph(k4, pk);
  EXPECT_EQ(qk.n(), 1);
  EXPECT_EQ(qk.num_edges(), 0);
  EXPECT_EQ(pk.internal_times[0], (TimeSet{1}));

  auto path = fixtures::path();
  EXPECT_EQ(quotient_graph(path, temporal_neighbourhood_partition(path)), path);
}
