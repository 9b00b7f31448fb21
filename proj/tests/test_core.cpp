#include <gtest/gtest.h>

#include "tgp/core.hpp"
#include "tgp/generators.hpp"

using namespace tgp;

namespace {

std::set<std::string> names(const TemporalGraph& g, const std::set<int>& s) {
  std::set<std::string> out;
  for (int v : s) out.insert(g.name(v));
  return out;
}

}  // namespace

TEST(Parse, PathFixture) {
  auto g = parse_temporal_graph("v a b c\ne a b : 1\ne b c : 2\n");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.lifetime(), 2);
  EXPECT_EQ(g, fixtures::path());
}

TEST(Parse, SingleVertex) {
  auto g = parse_temporal_graph("v a\n");
  EXPECT_EQ(g.n(), 1);
  EXPECT_EQ(g.lifetime(), 0);
  EXPECT_EQ(g.num_edges(), 0);
}

TEST(Parse, TimeBelowOneReportsLine) {
  try {
    parse_temporal_graph("e a b : 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_NE(std::string(e.what()).find("time < 1"), std::string::npos);
  }
}

TEST(Parse, RejectsMalformedLines) {
  EXPECT_THROW(parse_temporal_graph("e a a : 1\n"), ParseError);
  EXPECT_THROW(parse_temporal_graph("e a b\n"), ParseError);
  EXPECT_THROW(parse_temporal_graph("e a b : x\n"), ParseError);
  EXPECT_THROW(parse_temporal_graph("q a\n"), ParseError);
  try {
    parse_temporal_graph("v a b\n# fine\ne a b :\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Parse, RoundTrip) {
  gen::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    auto g = gen::random_graph(rng, 6, 5, 0.5, 3);
    EXPECT_EQ(parse_temporal_graph(serialize_temporal_graph(g)), g);
  }
}

TEST(Snapshot, Path) {
  auto g = fixtures::path();
  EXPECT_EQ(snapshot(g, 1).edges, (std::set<VertexPair>{{0, 1}}));
  EXPECT_EQ(snapshot(g, 2).edges, (std::set<VertexPair>{{1, 2}}));
  EXPECT_TRUE(snapshot(g, 3).edges.empty());
}

TEST(EarliestArrival, Path) {
  auto g = fixtures::path();
  EXPECT_EQ(earliest_arrival(g, g.index("a")), (std::vector<Time>{0, 1, 2}));
  EXPECT_EQ(earliest_arrival(g, g.index("c")), (std::vector<Time>{kInf, 2, 0}));
}

TEST(EarliestArrival, StrictTimes) {
  // Same time on consecutive edges does not chain.
  TemporalGraph g({"a", "b", "c"});
  g.add_times("a", "b", {1});
  g.add_times("b", "c", {1});
  EXPECT_EQ(earliest_arrival(g, 0), (std::vector<Time>{0, 1, kInf}));
}

TEST(EarliestArrival, Edgeless) {
  TemporalGraph g({"a", "b"});
  EXPECT_EQ(earliest_arrival(g, 1), (std::vector<Time>{kInf, 0}));
}

TEST(ReachSet, Path) {
  auto g = fixtures::path();
  EXPECT_EQ(names(g, reach_set(g, g.index("a"))), (std::set<std::string>{"a", "b", "c"}));
  EXPECT_EQ(names(g, reach_set(g, g.index("c"))), (std::set<std::string>{"b", "c"}));
  TemporalGraph one({"v"});
  EXPECT_EQ(reach_set(one, 0), (std::set<int>{0}));
}

TEST(Temporality, Examples) {
  EXPECT_EQ(temporality(fixtures::path()), 1);
  TemporalGraph g({"a", "b"});
  EXPECT_EQ(temporality(g), 0);
  g.add_times("a", "b", {1, 4, 9});
  EXPECT_EQ(temporality(g), 3);
}

TEST(Walk, Validity) {
  auto g = fixtures::path();
  EXPECT_TRUE(is_valid_walk(g, {0, {{0, 1, 1}, {1, 2, 2}}}));
  EXPECT_FALSE(is_valid_walk(g, {2, {{2, 1, 2}, {1, 0, 1}}}));
  EXPECT_FALSE(is_valid_walk(g, {0, {{1, 2, 2}}}));
}

TEST(Components, TwoParts) {
  TemporalGraph g({"a", "b", "c", "d"});
  g.add_times("a", "c", {2});
  EXPECT_EQ(connected_components(g), (std::vector<std::vector<int>>{{0, 2}, {1}, {3}}));
}

TEST(Graph, RemoveTimeDropsEmptyEdge) {
  auto g = fixtures::twin();
  int u = g.index("u"), w = g.index("w");
  g.remove_time(u, w, 1);
  EXPECT_EQ(g.times(u, w), (TimeSet{3}));
  g.remove_time(u, w, 3);
  EXPECT_FALSE(g.adjacent(u, w));
  EXPECT_EQ(g.num_time_edges(), 2);
}
