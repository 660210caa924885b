#include <gtest/gtest.h>

#include <random>

#include "mms/blossom.hpp"
#include "oracles.hpp"

using namespace mms;

namespace {

void expect_perfect(int n, const std::vector<CostedEdge>& edges, const PerfectMatchingResult& r) {
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::int64_t total = 0;
  for (auto [a, b] : r.matching.pairs) {
    ++seen[static_cast<std::size_t>(a)];
    ++seen[static_cast<std::size_t>(b)];
    std::int64_t cheapest = std::numeric_limits<std::int64_t>::max();
    for (const auto& e : edges) {
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) cheapest = std::min(cheapest, e.cost);
    }
    ASSERT_NE(cheapest, std::numeric_limits<std::int64_t>::max()) << "matched a non-edge";
    total += cheapest;
  }
  for (int s : seen) EXPECT_EQ(s, 1);
  EXPECT_EQ(total, r.total_cost);
}

}  // namespace

TEST(Blossom, Examples) {
  auto c4 = min_cost_perfect_matching(4, {{0, 1, 0}, {2, 3, 0}, {1, 2, 5}, {3, 0, 5}});
  EXPECT_EQ(c4.total_cost, 0);
  EXPECT_THROW(min_cost_perfect_matching(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}), Error);
  auto k4 = min_cost_perfect_matching(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  EXPECT_EQ(k4.total_cost, 2);
  EXPECT_EQ(k4.matching.size(), 2u);
  EXPECT_EQ(min_cost_perfect_matching(0, {}).total_cost, 0);
}

TEST(Blossom, Errors) {
  try {
    min_cost_perfect_matching(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoPerfectMatching);
  }
  EXPECT_THROW(min_cost_perfect_matching(2, {{0, 1, -1}}), Error);
  EXPECT_THROW(min_cost_perfect_matching(2, {{0, 2, 1}}), Error);
}

TEST(Blossom, OddCycleTrapNeedsBlossoms) {
  // Two triangles joined by a cheap bridge; the optimum must use the bridge.
  std::vector<CostedEdge> e{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, 0}};
  auto r = min_cost_perfect_matching(6, e);
  EXPECT_EQ(r.total_cost, 2);
  expect_perfect(6, e, r);
}

TEST(Blossom, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick_n(1, 5);
  std::uniform_real_distribution<double> pick_p(0.2, 1.0);
  std::uniform_int_distribution<std::int64_t> pick_cost(0, 20);
  int feasible = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 2 * pick_n(rng);
    std::bernoulli_distribution coin(pick_p(rng));
    std::vector<CostedEdge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.push_back({u, v, pick_cost(rng)});
      }
    }
    auto expected = oracle::brute_min_cost_perfect_matching(n, edges);
    if (!expected) {
      EXPECT_THROW(min_cost_perfect_matching(n, edges), Error);
      continue;
    }
    ++feasible;
    auto r = min_cost_perfect_matching(n, edges);
    ASSERT_EQ(r.total_cost, *expected) << "trial " << t;
    expect_perfect(n, edges, r);
  }
  EXPECT_GT(feasible, 250);
}

TEST(Blossom, ZeroOneCostsOnLargerGraphs) {
  // Cost vs. a permuted copy: relabeling must not change the optimum.
  std::mt19937_64 rng(99);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < 30; ++t) {
    const int n = 40;
    std::vector<CostedEdge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) edges.push_back({u, v, coin(rng) ? 1 : 0});
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<CostedEdge> relabeled;
    for (const auto& e : edges) relabeled.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)], e.cost});
    auto a = min_cost_perfect_matching(n, edges);
    auto b = min_cost_perfect_matching(n, relabeled);
    EXPECT_EQ(a.total_cost, b.total_cost);
    expect_perfect(n, edges, a);
  }
}
