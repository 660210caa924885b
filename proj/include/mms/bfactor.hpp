#pragma once

// Minimum-cost b-factors of a complete host graph, reduced to minimum-cost
// perfect matching with Tutte's vertex gadget.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "mms/blossom.hpp"
#include "mms/error.hpp"
#include "mms/graph.hpp"

namespace mms {

/// Degree targets b and symmetric nonnegative edge costs on K_n.
class BFactorInstance {
 public:
  BFactorInstance(std::vector<int> b, std::vector<std::int64_t> cost_matrix)
      : n_(static_cast<int>(b.size())), b_(std::move(b)), cost_(std::move(cost_matrix)) {
    if (cost_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
      throw Error(ErrorCode::InvalidInput, "cost matrix must be n x n");
    }
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) {
        if (u != v && (cost(u, v) < 0 || cost(u, v) != cost(v, u))) {
          throw Error(ErrorCode::InvalidInput, "costs must be nonnegative and symmetric");
        }
      }
    }
  }

  /// All-zero costs.
  explicit BFactorInstance(std::vector<int> b)
      : BFactorInstance(b, std::vector<std::int64_t>(b.size() * b.size(), 0)) {}

  int order() const { return n_; }
  const std::vector<int>& b() const { return b_; }
  int b(int v) const { return b_[static_cast<std::size_t>(v)]; }
  std::int64_t cost(int u, int v) const {
    return cost_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }
  void set_cost(int u, int v, std::int64_t c) {
    if (c < 0) throw Error(ErrorCode::InvalidInput, "negative edge cost");
    cost_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] = c;
    cost_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(u)] = c;
  }

  /// Throws unless 0 <= b(v) <= n-1 for every v and the sum of b is even.
  void validate() const {
    long long sum = 0;
    for (int v = 0; v < n_; ++v) {
      if (b(v) < 0 || b(v) > n_ - 1) {
        throw Error(ErrorCode::InvalidInput, "b(" + std::to_string(v) + ") outside [0, n-1]");
      }
      sum += b(v);
    }
    if (sum % 2 != 0) throw Error(ErrorCode::InvalidInput, "sum of b is odd");
  }

 private:
  int n_;
  std::vector<int> b_;
  std::vector<std::int64_t> cost_;
};

/// Perfect matchings of the gadget correspond to b-factors of the host: at
/// host vertex v, the d_v - b(v) internal nodes absorb all externals except
/// b(v), which must then be matched across host edges.
struct GadgetGraph {
  int node_count = 0;
  std::vector<CostedEdge> edges;
  /// Host edge for each gadget edge, or nullopt for gadget-internal edges.
  std::vector<std::optional<Edge>> back_map;
  /// externals[v][i] is the node of v facing its i-th neighbour in increasing id order.
  std::vector<std::vector<int>> externals;
  std::vector<std::vector<int>> internals;
};

inline GadgetGraph tutte_gadget(const BFactorInstance& inst) {
  inst.validate();
  const int n = inst.order();
  GadgetGraph gg;
  gg.externals.resize(static_cast<std::size_t>(n));
  gg.internals.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& ext = gg.externals[static_cast<std::size_t>(v)];
    for (int u = 0; u < n; ++u) {
      if (u != v) ext.push_back(gg.node_count++);
    }
    auto& in = gg.internals[static_cast<std::size_t>(v)];
    for (int i = 0; i < n - 1 - inst.b(v); ++i) in.push_back(gg.node_count++);
    for (int x : ext) {
      for (int y : in) {
        gg.edges.push_back({x, y, 0});
        gg.back_map.emplace_back(std::nullopt);
      }
    }
  }
  // Position of u among the neighbours of v in K_n.
  auto slot = [](int v, int u) { return u < v ? u : u - 1; };
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int x = gg.externals[static_cast<std::size_t>(u)][static_cast<std::size_t>(slot(u, v))];
      int y = gg.externals[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot(v, u))];
      gg.edges.push_back({x, y, inst.cost(u, v)});
      gg.back_map.emplace_back(Edge(u, v));
    }
  }
  return gg;
}

/// Host b-factor induced by a set of matched gadget edges (indices into gg.edges).
inline Graph induced_b_factor(const GadgetGraph& gg, int host_order, std::span<const std::size_t> matched) {
  std::vector<Edge> host;
  for (std::size_t i : matched) {
    if (gg.back_map[i]) host.push_back(*gg.back_map[i]);
  }
  return Graph::from_edges(host_order, host);
}

struct BFactorResult {
  Graph factor;
  std::int64_t total_cost = 0;
};

inline BFactorResult min_cost_b_factor(const BFactorInstance& inst) {
  GadgetGraph gg = tutte_gadget(inst);
  PerfectMatchingResult pm;
  try {
    pm = min_cost_perfect_matching(gg.node_count, gg.edges);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoPerfectMatching) {
      throw Error(ErrorCode::NoBFactor, "degree targets are not realizable in K_n");
    }
    throw;
  }
  // Recover which gadget edge each matched pair used: only external-external
  // pairs are host edges, and each such node pair is unique.
  std::vector<int> owner(static_cast<std::size_t>(gg.node_count), -1);
  for (int v = 0; v < inst.order(); ++v) {
    for (int x : gg.externals[static_cast<std::size_t>(v)]) owner[static_cast<std::size_t>(x)] = v;
  }
  std::vector<Edge> host;
  std::int64_t cost = 0;
  for (auto [x, y] : pm.matching.pairs) {
    int ox = owner[static_cast<std::size_t>(x)];
    int oy = owner[static_cast<std::size_t>(y)];
    if (ox != -1 && oy != -1) {
      host.emplace_back(ox, oy);
      cost += inst.cost(ox, oy);
    }
  }
  BFactorResult out{Graph::from_edges(inst.order(), host), cost};
  for (int v = 0; v < inst.order(); ++v) {
    if (out.factor.degree(v) != inst.b(v)) {
      throw Error(ErrorCode::InvalidInput, "internal error: gadget matching violates b");
    }
  }
  return out;
}

}  // namespace mms
