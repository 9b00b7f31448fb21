#include <gtest/gtest.h>

#include "tgp/generators.hpp"
#include "tgp/reachdelete.hpp"

using namespace tgp;

namespace {

struct Twin {
  TemporalGraph g = fixtures::twin();
  NeighbourhoodPartition p = temporal_neighbourhood_partition(g);
  int w = g.index("w");

  SubclassGraph with_target(Time t) const { return subclass_graph(p, w, {{t}, {}}); }
};

TemporalGraph random_small(gen::Rng& rng) {
  int n = std::uniform_int_distribution<int>(2, 8)(rng);
  if (rng() % 2) return gen::random_graph(rng, n, 4, 0.4, 2);
  return gen::random_blowup(rng, n, std::max(1, n / 2), 4, 0.5, 2);
}

}  // namespace

TEST(Candidates, Twin) {
  Twin t;
  auto c = subclass_candidates(t.g, t.p, t.w);
  ASSERT_EQ(c.size(), 2u);
  for (Time x : c[0]) EXPECT_TRUE(x == 1 || x == 3);
}

TEST(Candidates, IsolatedClassHasNone) {
  TemporalGraph g({"a", "b", "z"});
  g.add_times("a", "b", {2});
  auto p = temporal_neighbourhood_partition(g);
  auto c = subclass_candidates(g, p, 0);
  EXPECT_TRUE(c[p.class_of[2]].empty());
}

TEST(Candidates, AtMostTauTimesK) {
  gen::Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    auto g = random_small(rng);
    auto p = temporal_neighbourhood_partition(g);
    auto c = subclass_candidates(g, p, 0);
    for (const auto& ts : c) EXPECT_LE(static_cast<int>(ts.size()), temporality(g) * p.k());
  }
}

TEST(FeasibilityBfs, TwinTargets) {
  Twin t;
  auto unreached = feasibility_bfs(t.with_target(kInf));
  ASSERT_TRUE(unreached);
  ASSERT_EQ(unreached->times.size(), 1u);
  EXPECT_EQ(unreached->times.begin()->first, (std::pair<int, int>{0, 1}));
  EXPECT_EQ(unreached->times.begin()->second, (TimeSet{1, 3}));

  auto at1 = feasibility_bfs(t.with_target(1));
  ASSERT_TRUE(at1);
  EXPECT_EQ(at1->size(), 0u);

  auto at3 = feasibility_bfs(t.with_target(3));
  ASSERT_TRUE(at3);
  ASSERT_EQ(at3->times.size(), 1u);
  EXPECT_EQ(at3->times.begin()->second, (TimeSet{1}));
}

TEST(FeasibilityBfs, UnreachableTargetIsInfeasible) {
  Twin t;
  EXPECT_FALSE(feasibility_bfs(t.with_target(2)));
}

TEST(FeasibilityBfs, PlanHitsTargetsAndIsMinimal) {
  gen::Rng rng(62);
  int feasible = 0;
  for (int i = 0; i < 150; ++i) {
    auto g = random_small(rng);
    auto p = temporal_neighbourhood_partition(g);
    int s = 0;
    auto cand = subclass_candidates(g, p, s);
    Assignment phi(p.k());
    for (int c = 0; c < p.k(); ++c) {
      int size = static_cast<int>(p.classes[c].size()) - (c == p.class_of[s] ? 1 : 0);
      if (size == 0) continue;
      if (!cand[c].empty() && rng() % 3)
        phi[c].push_back(cand[c][std::uniform_int_distribution<size_t>(0, cand[c].size() - 1)(rng)]);
      else
        phi[c].push_back(kInf);
    }
    auto h = subclass_graph(p, s, phi);
    auto plan = feasibility_bfs(h);
    if (!plan) continue;
    ++feasible;
    auto arr = subclass_arrivals(h, *plan);
    for (size_t v = 1; v < h.nodes.size(); ++v) EXPECT_EQ(arr[v], h.nodes[v].target);
    // Restoring any single deleted time breaks some target.
    for (const auto& [pair, ts] : plan->times)
      for (Time t : ts) {
        DeletionPlan less = *plan;
        auto& row = less.times[pair];
        row.erase(std::find(row.begin(), row.end(), t));
        if (row.empty()) less.times.erase(pair);
        auto a2 = subclass_arrivals(h, less);
        bool same = true;
        for (size_t v = 1; v < h.nodes.size(); ++v) same = same && a2[v] == h.nodes[v].target;
        EXPECT_FALSE(same);
      }
  }
  EXPECT_GT(feasible, 20);
}

TEST(Iqp, TwinUnreached) {
  Twin t;
  auto h = t.with_target(kInf);
  auto plan = feasibility_bfs(h);
  ASSERT_TRUE(plan);
  auto inst = build_iqp(h, *plan, t.p, t.w, 1, false);
  ASSERT_EQ(inst.num_vars(), 2u);
  EXPECT_EQ(inst.q[0][1], 2);
  EXPECT_EQ(inst.group_size, (std::vector<int>{2}));
  auto sol = solve_iqp_exact(inst);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->objective, 4);
  EXPECT_EQ(sol->x, (std::vector<int>{1, 2}));
}

TEST(Iqp, ZeroObjective) {
  Twin t;
  auto h = t.with_target(1);
  auto inst = build_iqp(h, *feasibility_bfs(h), t.p, t.w, 3, false);
  for (const auto& row : inst.q)
    for (auto x : row) EXPECT_EQ(x, 0);
  auto sol = solve_iqp_exact(inst);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->objective, 0);
}

TEST(Iqp, BudgetBelowForcedMass) {
  Twin t;
  auto h = t.with_target(1);
  auto inst = build_iqp(h, *feasibility_bfs(h), t.p, t.w, 2, false);
  EXPECT_FALSE(solve_iqp_exact(inst));
}

TEST(Iqp, VariableBound) {
  IQPInstance inst;
  inst.q.assign(30, std::vector<long long>(30, 0));
  EXPECT_THROW(solve_iqp_exact(inst, 24), SizeBoundError);
}

TEST(ReachDelete, Examples) {
  TemporalGraph two({"l1", "l2", "s"});
  two.add_times("s", "l1", {1});
  two.add_times("s", "l2", {1});
  EXPECT_EQ(solve_reachdelete(two, two.index("s"), 1).min_deletions, 2);

  Twin t;
  auto r = solve_reachdelete(t.g, t.w, 1);
  EXPECT_EQ(r.min_deletions, 4);
  EXPECT_EQ(r.witness.size(), 4u);
  EXPECT_EQ(solve_reachdelete(t.g, t.w, 3).min_deletions, 0);
  EXPECT_EQ(solve_reachdelete(t.g, t.w, 1).min_deletions, brute_force_reachdelete(t.g, t.w, 1));
}

TEST(ReachDelete, ExcludeSource) {
  Twin t;
  ReachDeleteOptions opt;
  opt.exclude_source = true;
  EXPECT_EQ(solve_reachdelete(t.g, t.w, 0, opt).min_deletions, 4);
  EXPECT_EQ(solve_reachdelete(t.g, t.w, 1, opt).min_deletions, 2);
  EXPECT_EQ(brute_force_reachdelete(t.g, t.w, 1, true), 2);
}

TEST(ReachDelete, MatchesBruteForce) {
  gen::Rng rng(63);
  int done = 0;
  while (done < 120) {
    auto g = random_small(rng);
    if (g.num_time_edges() > 12) continue;
    ++done;
    int s = std::uniform_int_distribution<int>(0, g.n() - 1)(rng);
    auto brute = brute_force_reachdelete_all(g, s);
    auto p = temporal_neighbourhood_partition(g);
    for (int r = 1; r <= g.n(); ++r) {
      auto res = solve_reachdelete(g, s, r);
      ASSERT_EQ(res.min_deletions, brute[r]) << serialize_temporal_graph(g) << "source " << s << " r " << r;
      EXPECT_EQ(static_cast<long long>(res.witness.size()), res.min_deletions);
      auto after = without_time_edges(g, res.witness);
      EXPECT_LE(static_cast<int>(reach_set(after, s).size()), r);
      EXPECT_FALSE(has_useless_deletion(g, s, res.witness));
      EXPECT_TRUE(is_subclass_uniform(g, p, s, res.witness));
    }
  }
}

TEST(ReachDelete, ThreadCountDoesNotChangeResult) {
  gen::Rng rng(64);
  for (int i = 0; i < 40; ++i) {
    auto g = random_small(rng);
    int s = std::uniform_int_distribution<int>(0, g.n() - 1)(rng);
    int r = std::uniform_int_distribution<int>(1, g.n())(rng);
    auto a = solve_reachdelete(g, s, r);
    ReachDeleteOptions opt;
    opt.threads = 3;
    auto b = solve_reachdelete(g, s, r, opt);
    EXPECT_EQ(a.min_deletions, b.min_deletions);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.phi, b.phi);
  }
}

TEST(ReachDelete, InputChecks) {
  Twin t;
  EXPECT_THROW(solve_reachdelete(t.g, 9, 1), InputError);
  TemporalGraph big(gen::vertex_names(2));
  for (int i = 1; i <= 15; ++i) big.add_times(0, 1, {i});
  EXPECT_THROW(brute_force_reachdelete(big, 0, 1), SizeBoundError);
}

TEST(PropertyChecks, UselessAndUniform) {
  auto g = fixtures::path();
  int a = g.index("a"), b = g.index("b"), c = g.index("c");
  EXPECT_FALSE(has_useless_deletion(g, a, {{b, c, 2}}));
  // From c, ab@1 comes before anything reaches b.
  EXPECT_TRUE(has_useless_deletion(g, c, {{a, b, 1}}));

  TemporalGraph g3({"w", "x", "y", "z"});
  for (const char* v : {"x", "y", "z"}) g3.add_times("w", v, {1, 3});
  auto p = temporal_neighbourhood_partition(g3);
  int w = g3.index("w"), x = g3.index("x"), y = g3.index("y"), z = g3.index("z");
  // x arrives at 3, y and z at 1; deleting yw@3 but not zw@3 splits a subclass.
  EXPECT_FALSE(is_subclass_uniform(g3, p, w, {{w, x, 1}, {w, y, 3}}));
  EXPECT_TRUE(is_subclass_uniform(g3, p, w, {{w, x, 1}}));
  EXPECT_TRUE(is_subclass_uniform(g3, p, w, {{w, x, 3}, {w, y, 3}, {w, z, 3}}));
}
