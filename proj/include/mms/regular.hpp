#pragma once

// Closed forms for the minimum and maximum of mu over realizations of the
// k-regular sequence k^n, and explicit graphs attaining them.

#include <string>
#include <vector>

#include "mms/degseq.hpp"
#include "mms/error.hpp"
#include "mms/graph.hpp"

namespace mms {

/// The sequence k^n; construction rejects non-graphical pairs (k >= n or kn odd).
class RegularSpec {
 public:
  RegularSpec(int k, int n) : k_(k), n_(n) {
    if (n < 1 || k < 0) throw Error(ErrorCode::InvalidInput, "need n >= 1 and k >= 0");
    if (k >= n || (static_cast<long long>(k) * n) % 2 != 0) {
      throw Error(ErrorCode::NotGraphical,
                  std::to_string(k) + "^" + std::to_string(n) + " is not graphical");
    }
  }

  int k() const { return k_; }
  int n() const { return n_; }

 private:
  int k_;
  int n_;
};

/// Minimum of mu over k-regular graphs on n vertices.
///
/// n odd (so k even):   k if n < 2k-3;  k-1 if n = 2k-3;  k/2 if n >= 2k-1.
/// n even:              k if n < 3k-2;  k-1 if n in {3k-2, 3k-1};  ceil(k/2) if n >= 3k.
///
/// The middle even case needs the two-component constructions, which exist
/// only for k >= 4 (n = 3k-2) and k >= 5 (n = 3k-1). For (k,n) = (1,2), (2,4)
/// and (3,8) every realization has mu = k.
inline int lower_mu_regular(const RegularSpec& spec) {
  const int k = spec.k();
  const int n = spec.n();
  if (n % 2 == 1) {
    if (n < 2 * k - 3) return k;
    if (n == 2 * k - 3) return k - 1;
    return k / 2;
  }
  if (n < 3 * k - 2) return k;
  if (n == 3 * k - 2) return k >= 4 ? k - 1 : k;
  if (n == 3 * k - 1) return k >= 5 ? k - 1 : k;
  return (k + 1) / 2;
}

/// Maximum of mu over k-regular graphs on n vertices: k, except k-1 when k = 2
/// with n odd, and for (4,5) and (4,7).
inline int upper_mu_regular(const RegularSpec& spec) {
  const int k = spec.k();
  const int n = spec.n();
  bool exceptional = (k == 2 && n % 2 == 1) || (k == 4 && (n == 5 || n == 7));
  return exceptional ? k - 1 : k;
}

// ---------------------------------------------------------------------------
// Building blocks

/// Removes vertex v and shifts higher ids down by one.
inline Graph remove_vertex(const Graph& g, int v) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    edges.emplace_back(e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v);
  }
  return Graph::from_edges(g.order() - 1, edges);
}

/// k-regular bipartite graph with sides 0..m-1 and m..2m-1; left i joins
/// right (i + j) mod m for j = 0..k-1.
inline Graph regular_bipartite(int k, int m) {
  if (k > m) throw Error(ErrorCode::InvalidInput, "k-regular bipartite graph needs k <= m");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) edges.emplace_back(i, m + (i + j) % m);
  }
  return Graph::from_edges(2 * m, edges);
}

/// Union of the first k rounds of the round-robin 1-factorization of K_n
/// (vertex n-1 fixed, the rest rotating). n even.
inline Graph round_robin_factors(int k, int n) {
  if (n % 2 != 0 || k > n - 1) throw Error(ErrorCode::InvalidInput, "round robin needs n even and k < n");
  const int m = n - 1;
  std::vector<Edge> edges;
  for (int r = 0; r < k; ++r) {
    edges.emplace_back(r, n - 1);
    for (int i = 1; i < n / 2; ++i) edges.emplace_back((r + i) % m, (r - i + m) % m);
  }
  return Graph::from_edges(n, edges);
}

namespace detail {

// Consecutive pairs of `vs` as edges.
inline std::vector<Edge> pair_up(const std::vector<int>& vs) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vs.size(); i += 2) out.emplace_back(vs[i], vs[i + 1]);
  return out;
}

// n = 2k-3, k even >= 4: K_{k-1,k-2}, a (k-1)-cycle on the larger side and a
// perfect matching on the smaller side.
inline Graph bipartite_plus_cycle(int k) {
  const int big = k - 1;
  const int small = k - 2;
  Graph g = complete_bipartite(big, small);
  std::vector<Edge> extra;
  for (int i = 0; i < big; ++i) extra.emplace_back(i, (i + 1) % big);
  std::vector<int> side;
  for (int i = 0; i < small; ++i) side.push_back(big + i);
  auto pm = pair_up(side);
  extra.insert(extra.end(), pm.begin(), pm.end());
  return add_edges(g, extra);
}

// n odd >= 2k-1, k even: k-regular bipartite graph on (n+1)/2 + (n+1)/2,
// minus one vertex, plus a perfect matching on that vertex's neighbours.
inline Graph bipartite_minus_vertex(int k, int n) {
  const int m = (n + 1) / 2;
  Graph g = remove_vertex(regular_bipartite(k, m), 0);
  std::vector<int> deficient;
  for (int j = 0; j < k; ++j) deficient.push_back(m - 1 + j);
  auto pm = pair_up(deficient);
  return add_edges(g, pm);
}

// n = 3k-1, k odd >= 5: K_{k+2} joined by a single edge to a second component
// built from K_{k-1,k-2}.
inline Graph two_component_bridge(int k) {
  // Second component: Q = 0..k-2 (size k-1), P = k-1..2k-4 (size k-2).
  const int q = k - 1;
  const int p = k - 2;
  Graph g = complete_bipartite(q, p);
  std::vector<Edge> extra;
  for (int i = 0; i < q; ++i) extra.emplace_back(i, (i + 1) % q);
  std::vector<int> p_side;
  for (int i = 0; i < p - 1; ++i) p_side.push_back(q + i);
  auto pm = pair_up(p_side);
  extra.insert(extra.end(), pm.begin(), pm.end());
  const int v1 = q + p - 1;
  g = add_edges(g, extra);

  // K_{k+2} on ids base..base+k+1: v2 = base, a1 = base+1, a2 = base+2.
  const int base = g.order();
  g = disjoint_union(g, complete_graph(k + 2));
  const int v2 = base;
  std::vector<Edge> gone{Edge(v2, base + 1), Edge(v2, base + 2)};
  std::vector<int> rest;
  for (int i = 3; i < k + 2; ++i) rest.push_back(base + i);
  auto rest_pm = pair_up(rest);
  gone.insert(gone.end(), rest_pm.begin(), rest_pm.end());
  g = delete_edges(g, gone);
  std::vector<Edge> bridge{Edge(v1, v2)};
  return add_edges(g, bridge);
}

// n even >= 3k+1, k odd: (G' - v) + H plus a perfect matching on the k+1
// vertices of degree k-1, where G' is k-regular bipartite on two sides of
// (n-k-1)/2 and H has degrees (k, ..., k, k-1) on k+2 vertices.
inline Graph bipartite_minus_vertex_with_patch(int k, int n) {
  const int m = (n - k - 1) / 2;
  Graph g = remove_vertex(regular_bipartite(k, m), 0);
  std::vector<int> deficient;
  for (int j = 0; j < k; ++j) deficient.push_back(m - 1 + j);
  std::vector<int> h_degrees(static_cast<std::size_t>(k + 2), k);
  h_degrees.back() = k - 1;
  Graph h = havel_hakimi_realize(DegreeSequence(h_degrees));
  const int base = g.order();
  g = disjoint_union(g, h);
  deficient.push_back(base + k + 1);
  return add_edges(g, pair_up(deficient));
}

}  // namespace detail

/// A k-regular graph on n vertices whose mu equals lower_mu_regular(spec).
inline Graph construct_lower_extremal(const RegularSpec& spec) {
  const int k = spec.k();
  const int n = spec.n();
  if (k == 0) return empty_graph(n);
  if (n % 2 == 1) {
    if (n < 2 * k - 3) return circulant(k, n);  // every realization has mu = k
    if (n == 2 * k - 3) return detail::bipartite_plus_cycle(k);
    return detail::bipartite_minus_vertex(k, n);
  }
  if (n == 3 * k - 2 && k >= 4) {
    return disjoint_union(detail::bipartite_plus_cycle(k), complete_graph(k + 1));
  }
  if (n == 3 * k - 1 && k >= 5) return detail::two_component_bridge(k);
  if (n >= 3 * k) {
    if (k % 2 == 0) {
      return disjoint_union(detail::bipartite_minus_vertex(k, n - (k + 1)), complete_graph(k + 1));
    }
    return detail::bipartite_minus_vertex_with_patch(k, n);
  }
  return round_robin_factors(k, n);  // every realization has mu = k
}

struct UpperExtremal {
  Graph graph;
  int value = 0;
  /// True for the families where no realization reaches mu = k.
  bool exceptional = false;
};

/// A k-regular graph on n vertices whose mu equals upper_mu_regular(spec):
/// k perfect matchings of K_n for n even, the circulant C(k,n) for n odd.
inline UpperExtremal construct_upper_extremal(const RegularSpec& spec) {
  const int k = spec.k();
  const int n = spec.n();
  UpperExtremal out;
  out.value = upper_mu_regular(spec);
  out.exceptional = out.value != k;
  if (k == 0) {
    out.graph = empty_graph(n);
  } else if (n % 2 == 0) {
    out.graph = round_robin_factors(k, n);
  } else {
    out.graph = circulant(k, n);
  }
  return out;
}

}  // namespace mms
