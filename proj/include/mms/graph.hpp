#pragma once

// Simple undirected graphs on vertices 0..n-1, plus the edge-list text format,
// degree/cut accounting, degree-preserving swaps and named constructions.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <istream>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mms/error.hpp"

namespace mms {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> ids) : members_(ids) { normalize(); }
  explicit VertexSet(std::vector<int> ids) : members_(std::move(ids)) { normalize(); }

  static VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    while (mask != 0) {
      s.members_.push_back(std::countr_zero(mask));
      mask &= mask - 1;
    }
    return s;
  }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (int v : members_) m |= std::uint64_t{1} << v;
    return m;
  }

  bool contains(int v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<int> members_;
};

/// Immutable simple graph. Adjacency is kept both as sorted lists and, for
/// n <= 64, as bitset rows for fast subset arithmetic.
class Graph {
 public:
  static constexpr int kBitsetLimit = 64;

  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw Error(ErrorCode::InvalidInput, "negative vertex count");
    if (n <= kBitsetLimit) rows_.assign(static_cast<std::size_t>(n), 0);
  }

  /// Validates the edge list: endpoints in range, no loops, no duplicates.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n) {
        throw Error(ErrorCode::InvalidInput,
                    "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range");
      }
      if (e.u == e.v) {
        throw Error(ErrorCode::InvalidInput, "self-loop at vertex " + std::to_string(e.u));
      }
      g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
      throw Error(ErrorCode::InvalidInput,
                  "duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    }
    g.build_adjacency();
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  bool has_bitset_rows() const { return n_ <= kBitsetLimit; }
  std::uint64_t row(int v) const { return rows_[static_cast<std::size_t>(v)]; }

  bool has_edge(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    if (has_bitset_rows()) return (row(a) >> b) & 1U;
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  std::vector<int> degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency() {
    for (const Edge& e : edges_) {
      adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
      if (has_bitset_rows()) {
        rows_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        rows_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
      }
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> rows_;
  std::vector<Edge> edges_;
};

/// Counts attached to a disjoint pair (S, T): i_G(S), d_G(S,T), and the size
/// of E_G(S; V\T), the edges inside S or from S to V-S-T.
struct CutCounts {
  std::size_t internal = 0;
  std::size_t cross_to_T = 0;
  std::size_t cost = 0;

  friend bool operator==(const CutCounts&, const CutCounts&) = default;
};

/// Replace edges {a,b} and {c,d} by {a,c} and {b,d}.
struct SwapMove {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
};

namespace detail {

inline void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorCode::InvalidInput, "vertex " + std::to_string(v) + " out of range");
  }
}

inline void check_set(const Graph& g, const VertexSet& s) {
  for (int v : s) check_vertex(g, v);
}

inline std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

// Parses exactly `count` nonnegative integers from a line.
inline bool parse_ints(const std::string& line, std::span<long long> out) {
  std::istringstream in(line);
  for (auto& x : out) {
    if (!(in >> x) || x < 0) return false;
  }
  std::string rest;
  return !(in >> rest);
}

}  // namespace detail

/// Reads the edge-list format: a `<n> <m>` header followed by m `<u> <v>`
/// lines. Lines starting with '#' and blank lines are ignored. Errors carry
/// the 1-based line number.
inline Graph parse_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
  };

  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    long long vals[2];
    if (!detail::parse_ints(line, vals)) {
      throw fail(have_header ? "expected '<u> <v>'" : "malformed header, expected '<n> <m>'");
    }
    if (!have_header) {
      n = vals[0];
      m = vals[1];
      if (n > 1'000'000) throw fail("vertex count too large");
      if (m > n * (n - 1) / 2) throw fail("edge count exceeds n(n-1)/2");
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) throw fail("more edge lines than declared");
    long long u = vals[0];
    long long v = vals[1];
    if (u >= n || v >= n) throw fail("endpoint out of range (n = " + std::to_string(n) + ")");
    if (u == v) throw fail("self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    edge_lines.push_back(line_no);
  }
  if (!have_header) throw fail("missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw fail("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }

  // Duplicates are reported against the later occurrence.
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      line_no = edge_lines[order[i]];
      throw fail("duplicate edge " + std::to_string(edges[order[i]].u) + " " +
                 std::to_string(edges[order[i]].v));
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

/// Emits the edge-list format with edges in lexicographic order.
inline std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

/// Γ_G(S): vertices outside S with at least one neighbour in S.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  detail::check_set(g, s);
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
  for (int v : s) {
    for (int w : g.neighbors(v)) mark[static_cast<std::size_t>(w)] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (mark[static_cast<std::size_t>(v)] && !s.contains(v)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

inline CutCounts cut_counts(const Graph& g, const VertexSet& s, const VertexSet& t) {
  detail::check_set(g, s);
  detail::check_set(g, t);
  for (int v : s) {
    if (t.contains(v)) throw Error(ErrorCode::InvalidInput, "S and T intersect");
  }
  CutCounts c;
  for (const Edge& e : g.edges()) {
    bool su = s.contains(e.u);
    bool sv = s.contains(e.v);
    if (su && sv) {
      ++c.internal;
      ++c.cost;
    } else if (su || sv) {
      int other = su ? e.v : e.u;
      if (t.contains(other)) {
        ++c.cross_to_T;
      } else {
        ++c.cost;
      }
    }
  }
  return c;
}

/// E_G(S; V\T) as an explicit sorted edge list.
inline std::vector<Edge> deleted_edge_set(const Graph& g, const VertexSet& s, const VertexSet& t) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    bool su = s.contains(e.u);
    bool sv = s.contains(e.v);
    if ((su && sv) || (su && !t.contains(e.v)) || (sv && !t.contains(e.u))) out.push_back(e);
  }
  return out;
}

inline Graph swap(const Graph& g, const SwapMove& mv) {
  for (int v : {mv.a, mv.b, mv.c, mv.d}) detail::check_vertex(g, v);
  if (mv.a == mv.b || mv.a == mv.c || mv.a == mv.d || mv.b == mv.c || mv.b == mv.d ||
      mv.c == mv.d) {
    throw Error(ErrorCode::InvalidInput, "swap vertices must be distinct");
  }
  if (!g.has_edge(mv.a, mv.b) || !g.has_edge(mv.c, mv.d)) {
    throw Error(ErrorCode::InvalidInput, "swap removes a missing edge");
  }
  if (g.has_edge(mv.a, mv.c) || g.has_edge(mv.b, mv.d)) {
    throw Error(ErrorCode::InvalidInput, "swap adds an edge that is already present");
  }
  const Edge gone1(mv.a, mv.b);
  const Edge gone2(mv.c, mv.d);
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) {
    if (e != gone1 && e != gone2) edges.push_back(e);
  }
  edges.emplace_back(mv.a, mv.c);
  edges.emplace_back(mv.b, mv.d);
  return Graph::from_edges(g.order(), edges);
}

inline Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> gone(removed.begin(), removed.end());
  std::sort(gone.begin(), gone.end());
  for (const Edge& e : gone) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::InvalidInput,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not present");
    }
  }
  std::vector<Edge> kept;
  std::set_difference(g.edges().begin(), g.edges().end(), gone.begin(), gone.end(),
                      std::back_inserter(kept));
  return Graph::from_edges(g.order(), kept);
}

inline Graph add_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph::from_edges(g.order(), edges);
}

inline int min_degree(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "min_degree of the empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

/// Degrees sorted nonincreasing.
inline std::vector<int> degree_sequence(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v : s) {
    for (int w : g.neighbors(v)) {
      if (s.contains(w)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Named constructions

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

/// K_{1,leaves} with centre 0.
inline Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

/// K_{a,b}: sides 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph::from_edges(a + b, edges);
}

/// Vertices of `h` are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.emplace_back(e.u + g.order(), e.v + g.order());
  return Graph::from_edges(g.order() + h.order(), edges);
}

/// C(k, n): i ~ j iff the cyclic distance min(|i-j|, n-|i-j|) is at most k/2.
inline Graph circulant(int k, int n) {
  if (k % 2 != 0) throw Error(ErrorCode::InvalidInput, "circulant degree must be even");
  if (k < 2 || k >= n) throw Error(ErrorCode::InvalidInput, "circulant requires 2 <= k < n");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int dist = std::min(j - i, i + n - j);
      if (dist <= k / 2) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

/// Erdős–Rényi G(n, p) sample.
template <class Rng>
Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace mms
