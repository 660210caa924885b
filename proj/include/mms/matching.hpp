#pragma once

// Bipartite maximum matching (Hopcroft-Karp) and perfect 2-matchings through
// the bipartite double cover.

#include <limits>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "mms/error.hpp"
#include "mms/graph.hpp"

namespace mms {

/// Vertex-disjoint pairs. For bipartite results `first` is a left id and
/// `second` a right id; for general graphs pairs are host edges.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  std::size_t size() const { return pairs.size(); }
};

/// Hopcroft-Karp on an explicit bipartite edge list.
class BipartiteMatcher {
 public:
  BipartiteMatcher(int left_size, int right_size) : left_(left_size), right_(right_size) {
    if (left_size < 0 || right_size < 0) {
      throw Error(ErrorCode::InvalidInput, "negative side size");
    }
    adj_.resize(static_cast<std::size_t>(left_size));
  }

  void add_edge(int l, int r) {
    if (l < 0 || l >= left_ || r < 0 || r >= right_) {
      throw Error(ErrorCode::InvalidInput, "bipartite edge endpoint out of range");
    }
    adj_[static_cast<std::size_t>(l)].push_back(r);
  }

  /// Returns mate_of_left (or -1), after running to a maximum matching.
  const std::vector<int>& solve() {
    mate_l_.assign(static_cast<std::size_t>(left_), -1);
    mate_r_.assign(static_cast<std::size_t>(right_), -1);
    dist_.assign(static_cast<std::size_t>(left_), 0);
    while (bfs()) {
      for (int l = 0; l < left_; ++l) {
        if (mate_l_[static_cast<std::size_t>(l)] == -1) dfs(l);
      }
    }
    return mate_l_;
  }

  const std::vector<int>& mate_of_left() const { return mate_l_; }
  const std::vector<int>& mate_of_right() const { return mate_r_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int l = 0; l < left_; ++l) {
      if (mate_l_[static_cast<std::size_t>(l)] == -1) {
        dist_[static_cast<std::size_t>(l)] = 0;
        q.push(l);
      } else {
        dist_[static_cast<std::size_t>(l)] = kInf;
      }
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : adj_[static_cast<std::size_t>(l)]) {
        int next = mate_r_[static_cast<std::size_t>(r)];
        if (next == -1) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(next)] == kInf) {
          dist_[static_cast<std::size_t>(next)] = dist_[static_cast<std::size_t>(l)] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(int l) {
    for (int r : adj_[static_cast<std::size_t>(l)]) {
      int next = mate_r_[static_cast<std::size_t>(r)];
      if (next == -1 || (dist_[static_cast<std::size_t>(next)] ==
                             dist_[static_cast<std::size_t>(l)] + 1 &&
                         dfs(next))) {
        mate_l_[static_cast<std::size_t>(l)] = r;
        mate_r_[static_cast<std::size_t>(r)] = l;
        return true;
      }
    }
    dist_[static_cast<std::size_t>(l)] = kInf;
    return false;
  }

  int left_;
  int right_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_l_;
  std::vector<int> mate_r_;
  std::vector<int> dist_;
};

inline Matching max_bipartite_matching(int left_size, int right_size,
                                       std::span<const std::pair<int, int>> edges) {
  BipartiteMatcher hk(left_size, right_size);
  for (auto [l, r] : edges) hk.add_edge(l, r);
  const auto& mate = hk.solve();
  Matching m;
  for (int l = 0; l < left_size; ++l) {
    if (mate[static_cast<std::size_t>(l)] != -1) m.pairs.emplace_back(l, mate[static_cast<std::size_t>(l)]);
  }
  return m;
}

namespace detail {

// Perfect-or-maximum matching of the double cover; mate[u] is the right copy
// matched to the left copy of u, or -1.
inline std::vector<int> double_cover_mates(const Graph& g) {
  BipartiteMatcher hk(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    hk.add_edge(e.u, e.v);
    hk.add_edge(e.v, e.u);
  }
  return hk.solve();
}

// Fast path for n <= 64: Kuhn's augmenting paths over bitset rows. Used by the
// exhaustive blocking-set search, which calls this millions of times.
inline bool has_perfect_2_matching_bits(std::span<const std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  int mate_r[64];
  std::fill(mate_r, mate_r + n, -1);
  std::uint64_t visited = 0;
  auto augment = [&](auto&& self, int l) -> bool {
    std::uint64_t cand = rows[static_cast<std::size_t>(l)] & ~visited;
    while (cand != 0) {
      int r = std::countr_zero(cand);
      cand &= cand - 1;
      visited |= std::uint64_t{1} << r;
      if (mate_r[r] == -1 || self(self, mate_r[r])) {
        mate_r[r] = l;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < n; ++l) {
    if (rows[static_cast<std::size_t>(l)] == 0) return false;
    visited = 0;
    if (!augment(augment, l)) return false;
  }
  return true;
}

}  // namespace detail

/// 2·ν*(G): the maximum matching size of the bipartite double cover.
inline int fractional_matching_number_doubled(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "fractional matching of the empty graph");
  auto mate = detail::double_cover_mates(g);
  return static_cast<int>(std::count_if(mate.begin(), mate.end(), [](int m) { return m != -1; }));
}

inline bool has_perfect_2_matching(const Graph& g) {
  return fractional_matching_number_doubled(g) == g.order();
}

/// Spanning subgraph whose components are single edges and odd cycles.
struct PerfectTwoMatching {
  std::vector<Edge> k2_components;
  /// Each cycle lists its vertices in order; the closing edge is implied.
  std::vector<std::vector<int>> odd_cycles;
};

/// Checks the structural invariants against `g`; returns an empty string when
/// valid, otherwise a description of the first violation.
inline std::string validate_p2m(const Graph& g, const PerfectTwoMatching& p) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  auto mark = [&](int v) -> bool {
    if (v < 0 || v >= g.order()) return false;
    return ++seen[static_cast<std::size_t>(v)] == 1;
  };
  for (const Edge& e : p.k2_components) {
    if (!g.has_edge(e.u, e.v)) return "K2 component is not an edge";
    if (!mark(e.u) || !mark(e.v)) return "components overlap";
  }
  for (const auto& cyc : p.odd_cycles) {
    if (cyc.size() < 3 || cyc.size() % 2 == 0) return "cycle length is not odd >= 3";
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return "cycle edge missing";
      if (!mark(cyc[i])) return "components overlap";
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (seen[static_cast<std::size_t>(v)] != 1) return "vertex " + std::to_string(v) + " uncovered";
  }
  return {};
}

/// Builds a perfect 2-matching from a perfect matching of the double cover.
/// The matching is a permutation of V: 2-cycles become K2 components, even
/// cycles are split into alternate edges, odd cycles are kept.
inline PerfectTwoMatching extract_p2m(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "extract_p2m of the empty graph");
  auto mate = detail::double_cover_mates(g);
  for (int m : mate) {
    if (m == -1) throw Error(ErrorCode::NoPerfect2Matching, "graph has no perfect 2-matching");
  }
  PerfectTwoMatching out;
  std::vector<char> done(static_cast<std::size_t>(g.order()), 0);
  for (int start = 0; start < g.order(); ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    for (int v = start; !done[static_cast<std::size_t>(v)]; v = mate[static_cast<std::size_t>(v)]) {
      done[static_cast<std::size_t>(v)] = 1;
      cyc.push_back(v);
    }
    if (cyc.size() % 2 == 0) {
      for (std::size_t i = 0; i < cyc.size(); i += 2) out.k2_components.emplace_back(cyc[i], cyc[i + 1]);
    } else {
      out.odd_cycles.push_back(std::move(cyc));
    }
  }
  return out;
}

}  // namespace mms
