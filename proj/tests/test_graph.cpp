#include <gtest/gtest.h>

#include <random>

#include "mms/graph.hpp"

using namespace mms;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an mms::Error";
  return ErrorCode::InvalidInput;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Parse, StarWithCenterZero) {
  Graph g = parse_graph("3 2\n0 1\n0 2");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
}

TEST(Parse, SingleVertex) {
  Graph g = parse_graph("1 0");
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0u);
}

TEST(Parse, CommentsAndBlankLinesAreSkipped) {
  Graph g = parse_graph("# a path\n\n3 2\n# middle\n1 0\n\n2 1\n");
  EXPECT_EQ(g, path_graph(3));
}

TEST(Parse, Errors) {
  EXPECT_EQ(code_of([] { parse_graph("3 1\n2 2"); }), ErrorCode::ParseError);
  EXPECT_NE(message_of([] { parse_graph("3 1\n2 2"); }).find("line 2"), std::string::npos);
  EXPECT_EQ(code_of([] { parse_graph("3 2\n0 1\n1 0"); }), ErrorCode::ParseError);
  EXPECT_NE(message_of([] { parse_graph("3 2\n0 1\n1 0"); }).find("line 3"), std::string::npos);
  EXPECT_EQ(code_of([] { parse_graph("3 1\n0 3"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph("3 2\n0 1"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph("3 1\n0 1\n1 2"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph("x y"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph(""); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph("2 1\n0 1 7"); }), ErrorCode::ParseError);
}

TEST(Parse, RoundTripOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    Graph g = random_graph(1 + t % 15, 0.4, rng);
    EXPECT_EQ(parse_graph(write_graph(g)), g);
  }
}

TEST(Construct, RejectsBadEdges) {
  EXPECT_EQ(code_of([] { Graph::from_edges(3, {Edge(0, 0)}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { Graph::from_edges(3, {Edge(0, 1), Edge(1, 0)}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { Graph::from_edges(3, {Edge(0, 5)}); }), ErrorCode::InvalidInput);
}

TEST(Neighborhood, Examples) {
  EXPECT_EQ(neighborhood(cycle_graph(5), VertexSet{0}), (VertexSet{1, 4}));
  EXPECT_EQ(neighborhood(star_graph(3), VertexSet{1, 2, 3}), (VertexSet{0}));
  Graph k4 = complete_graph(4);
  EXPECT_TRUE(neighborhood(k4, VertexSet{0, 1, 2, 3}).empty());
}

TEST(CutCounts, Examples) {
  EXPECT_EQ(cut_counts(complete_graph(4), VertexSet{0, 1}, VertexSet{2}), (CutCounts{1, 2, 3}));
  EXPECT_EQ(cut_counts(complete_graph(4), VertexSet{}, VertexSet{}), (CutCounts{0, 0, 0}));
  CutCounts c5 = cut_counts(cycle_graph(5), VertexSet{0, 1, 3}, VertexSet{2, 4});
  EXPECT_EQ(c5.internal, 1u);
  EXPECT_EQ(c5.cost, 1u);
  EXPECT_EQ(code_of([] { cut_counts(complete_graph(3), VertexSet{0, 1}, VertexSet{1}); }),
            ErrorCode::InvalidInput);
}

TEST(CutCounts, CostMatchesDeletedSet) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> label(0, 2);
  for (int t = 0; t < 200; ++t) {
    Graph g = random_graph(9, 0.5, rng);
    std::vector<int> s;
    std::vector<int> tt;
    for (int v = 0; v < 9; ++v) {
      int l = label(rng);
      if (l == 1) s.push_back(v);
      if (l == 2) tt.push_back(v);
    }
    VertexSet S(s);
    VertexSet T(tt);
    EXPECT_EQ(cut_counts(g, S, T).cost, deleted_edge_set(g, S, T).size());
  }
}

TEST(Swap, Examples) {
  Graph two = Graph::from_edges(4, {Edge(0, 1), Edge(2, 3)});
  Graph swapped = swap(two, SwapMove{0, 1, 2, 3});
  EXPECT_EQ(swapped, Graph::from_edges(4, {Edge(0, 2), Edge(1, 3)}));

  Graph c6 = cycle_graph(6);
  Graph r = swap(c6, SwapMove{0, 1, 3, 4});
  EXPECT_TRUE(r.has_edge(0, 3));
  EXPECT_TRUE(r.has_edge(1, 4));
  EXPECT_FALSE(r.has_edge(0, 1));
  EXPECT_EQ(r.degrees(), c6.degrees());

  Graph tri = complete_graph(3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
          EXPECT_THROW(swap(tri, SwapMove{a, b, c, d}), Error);
        }
      }
    }
  }
}

TEST(DeleteEdges, Examples) {
  Graph k4 = complete_graph(4);
  std::vector<Edge> pm{Edge(0, 2), Edge(1, 3)};
  EXPECT_EQ(delete_edges(k4, pm), cycle_graph(4));
  EXPECT_EQ(delete_edges(k4, std::vector<Edge>{}), k4);
  std::vector<Edge> one{Edge(4, 0)};
  EXPECT_EQ(delete_edges(cycle_graph(5), one), path_graph(5));
  std::vector<Edge> missing{Edge(0, 2)};
  EXPECT_THROW(delete_edges(cycle_graph(5), missing), Error);
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(complete_graph(5)), 4);
  EXPECT_EQ(min_degree(star_graph(3)), 1);
  EXPECT_EQ(min_degree(Graph(1)), 0);
  EXPECT_EQ(code_of([] { min_degree(Graph(0)); }), ErrorCode::EmptyGraph);
}

TEST(Circulant, Examples) {
  EXPECT_EQ(circulant(2, 5), cycle_graph(5));
  EXPECT_EQ(neighborhood(circulant(4, 7), VertexSet{0}), (VertexSet{1, 2, 5, 6}));
  for (int n : {3, 5, 7, 9}) EXPECT_EQ(circulant(n - 1, n), complete_graph(n));
  EXPECT_THROW(circulant(3, 7), Error);
  EXPECT_THROW(circulant(8, 7), Error);
}

TEST(Circulant, RotationIsAnAutomorphism) {
  for (int n = 5; n <= 15; ++n) {
    for (int k = 2; k < n; k += 2) {
      Graph g = circulant(k, n);
      std::vector<Edge> rotated;
      for (const Edge& e : g.edges()) rotated.emplace_back((e.u + 1) % n, (e.v + 1) % n);
      EXPECT_EQ(Graph::from_edges(n, rotated), g) << "C(" << k << "," << n << ")";
      for (int v = 0; v < n; ++v) EXPECT_EQ(g.degree(v), k);
    }
  }
}

TEST(Construct, NamedFamilies) {
  EXPECT_EQ(complete_graph(6).size(), 15u);
  EXPECT_EQ(complete_bipartite(2, 3).size(), 6u);
  Graph u = disjoint_union(complete_graph(3), complete_graph(3));
  EXPECT_EQ(u.order(), 6);
  EXPECT_TRUE(u.has_edge(3, 5));
  EXPECT_FALSE(u.has_edge(2, 3));
  EXPECT_TRUE(is_independent(star_graph(4), VertexSet{1, 2, 3, 4}));
  EXPECT_FALSE(is_independent(cycle_graph(4), VertexSet{0, 1}));
}

TEST(VertexSetTest, MaskRoundTrip) {
  VertexSet s{5, 1, 3, 1};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.mask(), 0b101010u);
  EXPECT_EQ(VertexSet::from_mask(s.mask()), s);
}
