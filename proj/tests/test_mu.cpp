#include <gtest/gtest.h>

#include <random>

#include "mms/mu.hpp"
#include "oracles.hpp"

using namespace mms;

namespace {

MuCertificate checked_mu(const Graph& g) {
  MuCertificate c = mu_exact(g);
  auto check = verify_certificate(g, c);
  EXPECT_TRUE(check.ok) << check.reason;
  return c;
}

// A random degree-preserving swap, or nullopt if none was found.
std::optional<Graph> random_swap(const Graph& g, std::mt19937_64& rng) {
  if (g.size() < 2) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  std::bernoulli_distribution flip(0.5);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Edge e1 = g.edges()[pick(rng)];
    Edge e2 = g.edges()[pick(rng)];
    int a = e1.u, b = e1.v, c = e2.u, d = e2.v;
    if (flip(rng)) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) continue;
    if (g.has_edge(a, c) || g.has_edge(b, d)) continue;
    return swap(g, SwapMove{a, b, c, d});
  }
  return std::nullopt;
}

}  // namespace

TEST(MuExact, KnownValues) {
  EXPECT_EQ(checked_mu(complete_graph(5)).value, 3);
  for (int n = 6; n <= 10; ++n) EXPECT_EQ(checked_mu(complete_graph(n)).value, n - 1) << "K" << n;
  for (int n = 3; n <= 21; n += 2) EXPECT_EQ(checked_mu(cycle_graph(n)).value, 1) << "C" << n;
  EXPECT_EQ(checked_mu(circulant(4, 7)).value, 3);
  EXPECT_EQ(checked_mu(circulant(4, 9)).value, 4);
  EXPECT_EQ(checked_mu(circulant(4, 11)).value, 4);
  EXPECT_EQ(checked_mu(circulant(6, 11)).value, 6);
  EXPECT_EQ(checked_mu(circulant(6, 13)).value, 6);
}

TEST(MuExact, TrivialValues) {
  EXPECT_EQ(checked_mu(star_graph(2)).value, 0);
  EXPECT_EQ(checked_mu(star_graph(3)).value, 0);
  EXPECT_EQ(checked_mu(Graph(1)).value, 0);
  EXPECT_EQ(checked_mu(complete_graph(2)).value, 1);
  EXPECT_EQ(checked_mu(cycle_graph(4)).value, 2);
  EXPECT_THROW(mu_exact(Graph(0)), Error);
}

TEST(MuExact, Guard) {
  Graph big = cycle_graph(25);
  try {
    mu_exact(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GuardExceeded);
  }
  MuOptions opt;
  opt.force = true;
  EXPECT_EQ(mu_exact(big, opt).value, 1);
}

TEST(MuExact, MatchesDefinitionOnRandomGraphs) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> pick_p(0.1, 0.95);
  for (int t = 0; t < 300; ++t) {
    Graph g = random_graph(1 + t % 9, pick_p(rng), rng);
    ASSERT_EQ(checked_mu(g).value, oracle::brute_mu(g)) << write_graph(g);
  }
}

TEST(MuExact, ZeroIffNoPerfectTwoMatching) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 300; ++t) {
    Graph g = random_graph(2 + t % 12, 0.25, rng);
    EXPECT_EQ(mu_exact(g).value == 0, !has_perfect_2_matching(g));
  }
}

TEST(MuExact, AtMostMinimumDegree) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    Graph g = random_graph(2 + t % 14, 0.6, rng);
    EXPECT_LE(mu_exact(g).value, min_degree(g));
  }
}

TEST(MuExact, RegularGraphsAreAtLeastHalfTheDegree) {
  for (int n = 3; n <= 15; ++n) {
    for (int k = 2; k < n; k += 2) {
      EXPECT_GE(mu_exact(circulant(k, n)).value, (k + 1) / 2) << "C(" << k << "," << n << ")";
    }
  }
}

TEST(MuExact, RestrictedSetSizesNeverBeatTheFullSearch) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    Graph g = random_graph(4 + t % 9, 0.5, rng);
    const int full = mu_exact(g).value;
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    for (int s = 1; s <= (n + 1) / 2; ++s) {
      MuOptions opt;
      opt.min_set_size = s;
      opt.max_set_size = s;
      MuCertificate c = mu_exact(g, opt);
      EXPECT_EQ(c.S.size(), static_cast<std::size_t>(s));
      EXPECT_TRUE(verify_certificate(g, c).ok);
      best = std::min(best, c.value);
    }
    EXPECT_EQ(best, full);
  }
}

TEST(MuExact, SwapChangesMuByAtMostOne) {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> pick_n(4, 9);
  int done = 0;
  while (done < 200) {
    Graph g = random_graph(pick_n(rng), 0.5, rng);
    auto h = random_swap(g, rng);
    if (!h) continue;
    EXPECT_EQ(h->degrees(), g.degrees());
    EXPECT_LE(std::abs(mu_exact(g).value - mu_exact(*h).value), 1);
    ++done;
  }
}

TEST(Weighting, Examples) {
  WeightCertificate a = certificate_weighting(star_graph(2), VertexSet{1, 2}, VertexSet{0});
  EXPECT_EQ(a.weights, (std::vector<long long>{-4, 2, 2}));
  EXPECT_TRUE(a.nonnegative_edges.empty());

  WeightCertificate b = certificate_weighting(cycle_graph(5), VertexSet{0, 1, 3}, VertexSet{2, 4});
  EXPECT_EQ(b.weights, (std::vector<long long>{4, 4, -6, 4, -6}));
  EXPECT_EQ(b.nonnegative_edges, (std::vector<Edge>{Edge(0, 1)}));

  WeightCertificate c = certificate_weighting(Graph(1), VertexSet{0}, VertexSet{});
  EXPECT_EQ(c.weights, (std::vector<long long>{0}));
}

TEST(Weighting, Errors) {
  Graph g = cycle_graph(5);
  auto code = [&](VertexSet s, VertexSet t) {
    try {
      certificate_weighting(g, s, t);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  EXPECT_EQ(code({0, 1}, {1}), ErrorCode::InvalidSTPair);
  EXPECT_EQ(code({0, 1}, {}), ErrorCode::InvalidSTPair);
  EXPECT_EQ(code({}, {}), ErrorCode::InvalidSTPair);
  EXPECT_EQ(code({0, 9}, {1}), ErrorCode::InvalidSTPair);
}

TEST(Weighting, SumsToZeroAndFlagsExactlyTheDeletedEdges) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 14;
    Graph g = random_graph(n, 0.5, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const int s = 1 + t % ((n + 1) / 2);
    VertexSet S(std::vector<int>(perm.begin(), perm.begin() + s));
    VertexSet T(std::vector<int>(perm.begin() + s, perm.begin() + 2 * s - 1));
    WeightCertificate w = certificate_weighting(g, S, T);
    EXPECT_EQ(std::accumulate(w.weights.begin(), w.weights.end(), 0LL), 0);
    EXPECT_EQ(w.nonnegative_edges, deleted_edge_set(g, S, T));
  }
}

TEST(Verify, RejectsTampering) {
  Graph k5 = complete_graph(5);
  MuCertificate good = mu_exact(k5);
  EXPECT_TRUE(verify_certificate(k5, good).ok);

  MuCertificate bad_value = good;
  bad_value.value += 1;
  EXPECT_FALSE(verify_certificate(k5, bad_value).ok);

  MuCertificate short_deleted = good;
  short_deleted.deleted.pop_back();
  EXPECT_FALSE(verify_certificate(k5, short_deleted).ok);

  MuCertificate bad_weights = good;
  bad_weights.weights[0] += 1;
  EXPECT_FALSE(verify_certificate(k5, bad_weights).ok);

  MuCertificate bad_sizes = good;
  bad_sizes.T = VertexSet{};
  EXPECT_FALSE(verify_certificate(k5, bad_sizes).ok);

  // S not independent after deleting a consistent-looking but wrong edge set.
  Graph c4 = cycle_graph(4);
  MuCertificate forged;
  forged.S = VertexSet{0, 1};
  forged.T = VertexSet{2};
  forged.value = 0;
  forged.weights = {1, 1, -3, 1};
  EXPECT_FALSE(verify_certificate(c4, forged).ok);
}

TEST(Blocking, Examples) {
  BlockingResult c5 = mu_via_blocking(cycle_graph(5));
  EXPECT_EQ(c5.size, 1);
  EXPECT_EQ(c5.blockers.size(), 1u);
  BlockingResult k4 = mu_via_blocking(complete_graph(4));
  EXPECT_EQ(k4.size, 3);
  EXPECT_FALSE(has_perfect_2_matching(delete_edges(complete_graph(4), k4.blockers)));
  BlockingResult star = mu_via_blocking(star_graph(3));
  EXPECT_EQ(star.size, 0);
  EXPECT_TRUE(star.blockers.empty());
}

TEST(Blocking, AgreesWithExactSearch) {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> pick_p(0.2, 0.9);
  for (int t = 0; t < 150; ++t) {
    Graph g = random_graph(2 + t % 8, pick_p(rng), rng);
    BlockingResult b = mu_via_blocking(g);
    EXPECT_EQ(b.size, mu_exact(g).value) << write_graph(g);
    EXPECT_FALSE(has_perfect_2_matching(delete_edges(g, b.blockers)));
  }
}
