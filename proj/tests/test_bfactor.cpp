#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "mms/bfactor.hpp"
#include "oracles.hpp"

using namespace mms;

namespace {

std::vector<Edge> sorted_edges(const Graph& g) { return g.edges(); }

}  // namespace

TEST(Gadget, TriangleFactor) {
  BFactorInstance inst({2, 2, 2});
  GadgetGraph gg = tutte_gadget(inst);
  EXPECT_EQ(gg.node_count, 6);
  for (const auto& in : gg.internals) EXPECT_TRUE(in.empty());
  std::size_t count = 0;
  oracle::for_each_perfect_matching(gg.node_count, gg.edges, [&](const std::vector<std::size_t>& m) {
    ++count;
    EXPECT_EQ(induced_b_factor(gg, 3, m), complete_graph(3));
  });
  EXPECT_EQ(count, 1u);
}

TEST(Gadget, NodeCounts) {
  BFactorInstance inst({1, 2, 0, 3, 2});
  GadgetGraph gg = tutte_gadget(inst);
  EXPECT_EQ(gg.node_count, 5 * 4 + (3 + 2 + 4 + 1 + 2));
  EXPECT_EQ(gg.edges.size(), gg.back_map.size());
  EXPECT_THROW(tutte_gadget(BFactorInstance({1, 5, 0})), Error);
}

TEST(BFactor, Examples) {
  BFactorInstance k2({1, 1});
  k2.set_cost(0, 1, 1);
  EXPECT_EQ(min_cost_b_factor(k2).total_cost, 1);

  // S = {3,4}, T = {0}: an edge costs 1 when it touches S and its other end is not in T.
  BFactorInstance a(std::vector<int>(5, 2));
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      bool in_s = u >= 3 || v >= 3;
      bool other_in_t = (u >= 3 && v == 0) || (v >= 3 && u == 0);
      a.set_cost(u, v, in_s && !other_in_t ? 1 : 0);
    }
  }
  EXPECT_EQ(min_cost_b_factor(a).total_cost, 2);

  // S = {2,3,4}, T = {0,1}: the cycle 2-0-3-1-4-2 costs 1.
  BFactorInstance b(std::vector<int>(5, 2));
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      b.set_cost(u, v, u >= 2 && v >= 2 ? 1 : 0);
    }
  }
  EXPECT_EQ(min_cost_b_factor(b).total_cost, 1);

  EXPECT_THROW(min_cost_b_factor(BFactorInstance({3, 1, 1, 1, 1})), Error);
  try {
    min_cost_b_factor(BFactorInstance({2, 2, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoBFactor);
  }
}

TEST(BFactor, MatchesEnumerationWithRandomCosts) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> pick_cost(0, 9);
  int feasible = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 5;
    std::uniform_int_distribution<int> pick_b(0, n - 1);
    std::vector<int> b(static_cast<std::size_t>(n));
    for (int& x : b) x = pick_b(rng);
    BFactorInstance inst(b);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) inst.set_cost(u, v, pick_cost(rng));
    }
    auto all = oracle::enumerate_b_factors(inst);
    if (all.factors.empty()) {
      EXPECT_THROW(min_cost_b_factor(inst), Error);
      continue;
    }
    ++feasible;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& [f, c] : all.factors) best = std::min(best, c);
    BFactorResult r = min_cost_b_factor(inst);
    EXPECT_EQ(r.total_cost, best);
    EXPECT_EQ(r.factor.degrees(), b);
    EXPECT_TRUE(all.factors.count(sorted_edges(r.factor)));
  }
  EXPECT_GT(feasible, 60);
}

TEST(Gadget, CanonicalBijectionOnFiveVertexHosts) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::int64_t> pick_cost(0, 5);
  std::uniform_int_distribution<int> pick_b(0, 4);
  for (int t = 0; t < 60; ++t) {
    std::vector<int> b(5);
    for (int& x : b) x = pick_b(rng);
    if (std::accumulate(b.begin(), b.end(), 0) % 2 != 0) {
      EXPECT_THROW(tutte_gadget(BFactorInstance(b)), Error);
      continue;
    }
    BFactorInstance inst(b);
    for (int u = 0; u < 5; ++u) {
      for (int v = u + 1; v < 5; ++v) inst.set_cost(u, v, pick_cost(rng));
    }
    auto canonical = oracle::canonical_gadget_matchings(tutte_gadget(inst), 5);
    EXPECT_EQ(canonical.duplicates, 0u);
    EXPECT_EQ(canonical.factors, oracle::enumerate_b_factors(inst).factors);
  }
}

TEST(Gadget, CostBijectionForSmallHosts) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> pick_cost(0, 5);
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    do {
      BFactorInstance inst(b);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) inst.set_cost(u, v, pick_cost(rng));
      }
      auto expected = oracle::enumerate_b_factors(inst).factors;
      // An odd degree sum leaves the gadget with an odd node count.
      if (std::accumulate(b.begin(), b.end(), 0) % 2 != 0) {
        EXPECT_THROW(tutte_gadget(inst), Error);
        EXPECT_TRUE(expected.empty());
        continue;
      }
      GadgetGraph gg = tutte_gadget(inst);
      auto canonical = oracle::canonical_gadget_matchings(gg, n);
      EXPECT_EQ(canonical.duplicates, 0u);
      EXPECT_EQ(canonical.factors, expected);

      std::uint64_t multiplicity = 1;
      for (int x : b) multiplicity *= oracle::factorial(n - 1 - x);
      std::size_t total = 0;
      oracle::for_each_perfect_matching(gg.node_count, gg.edges, [&](const std::vector<std::size_t>&) { ++total; });
      EXPECT_EQ(total, expected.size() * multiplicity);
    } while (oracle::next_degree_vector(b, n));
  }
}
