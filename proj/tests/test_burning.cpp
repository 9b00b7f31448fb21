#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tgp/burning.hpp"
#include "tgp/generators.hpp"

using namespace tgp;

namespace {

TemporalGraph edge_ab(Time t) {
  TemporalGraph g({"a", "b"});
  g.add_times("a", "b", {t});
  return g;
}

TemporalGraph isolated(int n) { return TemporalGraph(gen::vertex_names(n)); }

std::vector<std::vector<char>> rows(std::initializer_list<std::vector<char>> r) { return r; }

Formula32B formula(std::vector<std::array<int, 3>> cs, int n) {
  Formula32B f;
  f.n = n;
  for (auto& c : cs) {
    std::vector<Literal> cl;
    for (int x : c) cl.push_back({std::abs(x), x > 0});
    f.clauses.push_back(cl);
  }
  return f;
}

TemporalGraph small_random(gen::Rng& rng) {
  int n = std::uniform_int_distribution<int>(1, 6)(rng);
  int life = std::uniform_int_distribution<int>(1, 5)(rng);
  if (rng() % 2) return gen::random_graph(rng, n, life, 0.5, 2);
  return gen::random_blowup(rng, n, std::max(1, n / 2), life, 0.6, 2);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Simulate, Examples) {
  EXPECT_EQ(simulate(edge_ab(2), {0, 0}).burning, rows({{1, 0}, {1, 1}}));
  EXPECT_EQ(simulate(edge_ab(1), {0, 1}).burning, rows({{1, 0}, {1, 1}}));
  EXPECT_EQ(simulate(isolated(1), {0}).burning, rows({{1}}));
  EXPECT_THROW(simulate(edge_ab(1), {}), InputError);
  EXPECT_THROW(simulate(edge_ab(1), {5}), InputError);
}

TEST(Simulate, SpreadIsOneHopPerStep) {
  // a-b and b-c both at time 2: a fire at a reaches b, not c.
  TemporalGraph g({"a", "b", "c"});
  g.add_times("a", "b", {2});
  g.add_times("b", "c", {2});
  auto tr = simulate(g, {0, 0});
  EXPECT_EQ(tr.burning.back(), (std::vector<char>{1, 1, 0}));
}

TEST(Successful, Examples) {
  EXPECT_TRUE(is_successful(edge_ab(2), {0, 0}));
  EXPECT_FALSE(is_successful(edge_ab(2), {0}));
  EXPECT_TRUE(is_successful(isolated(2), {0, 1}));
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_burning_number(isolated(1)), 1);
  EXPECT_EQ(brute_force_burning_number(isolated(5)), 5);
  EXPECT_EQ(brute_force_burning_number(edge_ab(2)), 2);
  EXPECT_THROW(brute_force_burning_number(isolated(7)), SizeBoundError);
}

TEST(Solve, Examples) {
  auto r = solve_tnd_burning(edge_ab(2), 2);
  EXPECT_TRUE(r.yes);
  EXPECT_TRUE(is_successful(edge_ab(2), r.witness));
  EXPECT_FALSE(solve_tnd_burning(isolated(3), 2).yes);
  EXPECT_TRUE(solve_tnd_burning(isolated(3), 3).yes);
  auto tw = fixtures::twin();
  EXPECT_EQ(solve_tnd_burning(tw, 2).yes, brute_force_burning_number(tw) <= 2);
  EXPECT_THROW(solve_tnd_burning(tw, 0), InputError);
}

TEST(Solve, AgreesWithBruteForce) {
  gen::Rng rng(51);
  for (int i = 0; i < 300; ++i) {
    auto g = small_random(rng);
    int bn = brute_force_burning_number(g);
    for (int h = 1; h <= g.n(); ++h) {
      auto r = solve_tnd_burning(g, h);
      ASSERT_EQ(r.yes, bn <= h) << serialize_temporal_graph(g) << "h=" << h;
      if (r.yes) {
        EXPECT_TRUE(is_successful(g, r.witness));
        EXPECT_LE(static_cast<int>(r.witness.size()), h);
      }
    }
  }
}

TEST(Solve, CanonicalWitnessMatchesReference) {
  gen::Rng rng(52);
  for (int i = 0; i < 150; ++i) {
    auto g = small_random(rng);
    for (int h = 1; h <= g.n(); ++h) {
      auto a = solve_tnd_burning_reference(g, h);
      auto b = solve_tnd_burning(g, h);
      ASSERT_EQ(a.yes, b.yes);
      EXPECT_TRUE(b.canonical);
      EXPECT_EQ(a.witness, b.witness);
      EXPECT_EQ(a.order, b.order);
      EXPECT_EQ(a.b_set, b.b_set);
    }
  }
}

TEST(Solve, WitnessIsItsClassStrategy) {
  gen::Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    auto g = small_random(rng);
    auto p = temporal_neighbourhood_partition(g);
    int h = std::uniform_int_distribution<int>(1, g.n())(rng);
    auto r = solve_tnd_burning(g, h, p);
    if (r.yes) EXPECT_EQ(class_strategy(g, p, r.order, r.b_set, h), r.witness);
  }
}

TEST(Solve, ThreadCountDoesNotChangeResult) {
  gen::Rng rng(54);
  for (int i = 0; i < 80; ++i) {
    auto g = small_random(rng);
    int h = std::uniform_int_distribution<int>(1, g.n())(rng);
    auto a = solve_tnd_burning(g, h, std::nullopt, {1, true});
    for (int threads : {2, 4}) {
      auto b = solve_tnd_burning(g, h, std::nullopt, {threads, true});
      EXPECT_EQ(a.yes, b.yes);
      EXPECT_EQ(a.witness, b.witness);
      EXPECT_EQ(a.order, b.order);
      EXPECT_EQ(a.b_set, b.b_set);
    }
  }
}

TEST(Solve, UnprunedEnumerationAgrees) {
  gen::Rng rng(55);
  for (int i = 0; i < 60; ++i) {
    auto g = small_random(rng);
    int h = std::uniform_int_distribution<int>(1, g.n())(rng);
    auto a = solve_tnd_burning(g, h);
    auto b = solve_tnd_burning(g, h, std::nullopt, {1, false});
    EXPECT_EQ(a.yes, b.yes);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(Solve, DecisionWitnessAboveCanonicalBound) {
  gen::Rng rng(56);
  for (int i = 0; i < 60; ++i) {
    auto g = small_random(rng);
    int h = std::uniform_int_distribution<int>(1, g.n())(rng);
    BurningOptions opt;
    opt.canonical_max_classes = 0;
    auto r = solve_tnd_burning(g, h, std::nullopt, opt);
    EXPECT_EQ(r.yes, brute_force_burning_number(g) <= h);
    if (r.yes) {
      EXPECT_FALSE(r.canonical);
      EXPECT_TRUE(is_successful(g, r.witness));
      EXPECT_LE(static_cast<int>(r.witness.size()), h);
    }
  }
}

TEST(ClassStrategy, StopsWhenEverythingBurns) {
  auto g = edge_ab(1);
  auto p = temporal_neighbourhood_partition(g);
  ASSERT_EQ(p.k(), 1);
  auto s = class_strategy(g, p, {0}, {0}, 5);
  EXPECT_EQ(s, (BurningStrategy{0, 1}));
  EXPECT_THROW(class_strategy(g, p, {0, 1}, {}, 5), InputError);
  EXPECT_THROW(class_strategy(g, p, {0}, {2}, 5), InputError);
}

TEST(Formula, Validation) {
  auto ok = formula({{1, 2, 3}, {-1, -2, -3}, {1, -2, 3}, {-1, 2, -3}}, 3);
  EXPECT_NO_THROW(validate_formula(ok));
  auto bad = ok;
  bad.clauses[0][0].positive = false;
  EXPECT_THROW(validate_formula(bad), InputError);
  auto short_clause = ok;
  short_clause.clauses[1].pop_back();
  EXPECT_THROW(validate_formula(short_clause), InputError);
  EXPECT_THROW(sat_to_burning(bad), InputError);
}

TEST(Formula, Dimacs) {
  auto f = parse_dimacs(read_file(std::string(TGP_TEST_DATA) + "/sat_small.cnf"));
  EXPECT_EQ(f.n, 3);
  EXPECT_EQ(f.clauses.size(), 4u);
  auto again = parse_dimacs(format_dimacs(f));
  EXPECT_EQ(again.clauses, f.clauses);
  EXPECT_THROW(parse_dimacs("1 2 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 x 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 3\n"), ParseError);
  try {
    parse_dimacs("p cnf 2 1\n1 5 2 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Formula, BruteForceSatisfiable) {
  EXPECT_TRUE(brute_force_satisfiable(formula({{1, 2, 3}, {-1, -2, -3}, {1, -2, 3}, {-1, 2, -3}}, 3)));
  EXPECT_FALSE(brute_force_satisfiable(formula({{-2, -3, -3}, {-2, 3, 3}, {-1, -1, 2}, {1, 1, 2}}, 3)));
}

TEST(Reduction, Counts) {
  gen::Rng rng(57);
  for (int i = 0; i < 10; ++i) {
    auto f = gen::random_formula(rng, 3 * (1 + i % 3));
    const int n = f.n, m = static_cast<int>(f.clauses.size());
    auto inst = sat_to_burning(f);
    const int h = 2 * n + 3 * m + 1;
    EXPECT_EQ(inst.h, h);
    EXPECT_EQ(inst.graph.n(), 2 * n + 3 * m + 2 * (4 * n) + (2 * n + 3 * m) * (h + 1));
    EXPECT_EQ(static_cast<int>(connected_components(inst.graph).size()), 2 * n);
    EXPECT_EQ(inst.graph.lifetime(), h);
    auto small = sat_to_burning(f, 3);
    EXPECT_EQ(small.h, h);
    EXPECT_EQ(small.graph.n(), 2 * n + 3 * m + 2 * (4 * n) + (2 * n + 3 * m) * 3);
  }
}

TEST(Reduction, AssignmentStrategyBurnsSatisfiedInstances) {
  gen::Rng rng(58);
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    auto f = gen::random_formula(rng, 3 + 3 * (i % 2));
    auto inst = sat_to_burning(f);
    for (int mask = 0; mask < (1 << f.n); ++mask) {
      std::vector<bool> a(f.n);
      for (int v = 0; v < f.n; ++v) a[v] = mask >> v & 1;
      bool sat = true;
      for (const auto& c : f.clauses) {
        bool any = false;
        for (const auto& l : c) any = any || a[l.var - 1] == l.positive;
        sat = sat && any;
      }
      if (!sat) continue;
      auto s = strategy_from_assignment(f, inst, a);
      EXPECT_EQ(static_cast<int>(s.size()), inst.h);
      EXPECT_TRUE(is_successful(inst.graph, s));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Reduction, ReducedInstancesFollowSatisfiability) {
  auto sat = formula({{1, 2, 3}, {-1, -2, -3}, {1, -2, 3}, {-1, 2, -3}}, 3);
  auto unsat = formula({{-2, -3, -3}, {-2, 3, 3}, {-1, -1, 2}, {1, 1, 2}}, 3);
  auto a = sat_to_burning(sat, 3);
  auto ra = solve_tnd_burning(a.graph, a.h);
  EXPECT_TRUE(ra.yes);
  EXPECT_FALSE(ra.canonical);
  EXPECT_TRUE(is_successful(a.graph, ra.witness));
  auto b = sat_to_burning(unsat, 3);
  EXPECT_FALSE(solve_tnd_burning(b.graph, b.h).yes);
}
