#pragma once

// Degree sequences: graphicality, realization, Kundu's perfect-matching test,
// the polynomial lower-mu algorithm, and exhaustive realization enumeration.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "mms/bfactor.hpp"
#include "mms/error.hpp"
#include "mms/graph.hpp"
#include "mms/matching.hpp"
#include "mms/mu.hpp"

namespace mms {

/// Nonnegative integers stored in nonincreasing order. Vertex i of any
/// realization produced here has degree degrees()[i].
class DegreeSequence {
 public:
  DegreeSequence() = default;
  DegreeSequence(std::initializer_list<int> d) : DegreeSequence(std::vector<int>(d)) {}
  explicit DegreeSequence(std::vector<int> d) : d_(std::move(d)) {
    for (int x : d_) {
      if (x < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
    }
    std::stable_sort(d_.begin(), d_.end(), std::greater<>());
  }

  /// k^n, the k-regular sequence of length n.
  static DegreeSequence regular(int k, int n) { return DegreeSequence(std::vector<int>(static_cast<std::size_t>(n), k)); }

  static DegreeSequence of(const Graph& g) { return DegreeSequence(g.degrees()); }

  int length() const { return static_cast<int>(d_.size()); }
  const std::vector<int>& degrees() const { return d_; }
  int operator[](int i) const { return d_[static_cast<std::size_t>(i)]; }
  long long sum() const { return std::accumulate(d_.begin(), d_.end(), 0LL); }

  /// d - 1^n.
  DegreeSequence minus_one() const {
    std::vector<int> r = d_;
    for (int& x : r) {
      if (x == 0) throw Error(ErrorCode::InvalidInput, "d - 1^n has a negative entry");
      --x;
    }
    return DegreeSequence(std::move(r));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(d_[i]);
    }
    return s;
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> d_;
};

/// Accepts comma- or whitespace-separated integers, or `@path` naming a file
/// with one integer per line.
inline DegreeSequence parse_degree_sequence(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '@') {
    std::ifstream in(body.substr(1));
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + body.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  std::vector<int> d;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw Error(ErrorCode::ParseError, "not an integer: '" + tok + "'");
    if (x < 0 || x > 1'000'000) throw Error(ErrorCode::ParseError, "degree out of range: " + tok);
    d.push_back(static_cast<int>(x));
  }
  if (d.empty()) throw Error(ErrorCode::ParseError, "empty degree sequence");
  return DegreeSequence(std::move(d));
}

/// Erdős–Gallai: even sum and, for every k,
///   d_1 + ... + d_k <= k(k-1) + sum_{i>k} min(d_i, k).
inline bool is_graphical(const DegreeSequence& seq) {
  const auto& d = seq.degrees();
  const int n = seq.length();
  if (seq.sum() % 2 != 0) return false;
  std::vector<long long> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + d[static_cast<std::size_t>(i)];
  long long prefix = 0;
  // p = first index (>= k) whose degree is < k; entries before p contribute k.
  int p = n;
  for (int k = 1; k <= n; ++k) {
    prefix += d[static_cast<std::size_t>(k - 1)];
    while (p > k && d[static_cast<std::size_t>(p - 1)] < k) --p;
    int first_small = std::max(p, k);
    long long rhs = static_cast<long long>(k) * (k - 1) +
                    static_cast<long long>(k) * (first_small - k) + suffix[static_cast<std::size_t>(first_small)];
    if (prefix > rhs) return false;
  }
  return true;
}

/// Havel–Hakimi: repeatedly join the vertex of largest residual degree to the
/// next-largest ones. Does not consult is_graphical; fails on its own.
inline Graph havel_hakimi_realize(const DegreeSequence& seq) {
  const int n = seq.length();
  std::vector<int> residual = seq.degrees();
  std::vector<Edge> edges;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)];
    });
    int v = order.empty() ? -1 : order[0];
    if (v == -1 || residual[static_cast<std::size_t>(v)] == 0) break;
    int need = residual[static_cast<std::size_t>(v)];
    residual[static_cast<std::size_t>(v)] = 0;
    for (int i = 1; i <= need; ++i) {
      if (i >= n || residual[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] == 0) {
        throw Error(ErrorCode::NotGraphical, "sequence " + seq.to_string() + " is not graphical");
      }
      int w = order[static_cast<std::size_t>(i)];
      --residual[static_cast<std::size_t>(w)];
      edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, edges);
}

namespace detail {

inline void require_graphical(const DegreeSequence& d) {
  if (!is_graphical(d)) throw Error(ErrorCode::NotGraphical, "sequence " + d.to_string() + " is not graphical");
}

}  // namespace detail

/// Kundu: some realization contains a perfect matching iff d - 1^n is graphical.
inline bool kundu_has_pm_realization(const DegreeSequence& d) {
  detail::require_graphical(d);
  if (d.length() % 2 != 0) throw Error(ErrorCode::UnsupportedOddLength, "perfect matching needs even length");
  for (int x : d.degrees()) {
    if (x == 0) throw Error(ErrorCode::InvalidInput, "zero degree cannot be perfectly matched");
  }
  return is_graphical(d.minus_one());
}

/// Whether some realization of an even-length sequence has a perfect
/// 2-matching, i.e. upper-mu > 0. For even n this is equivalent to having a
/// realization with a perfect matching.
inline bool upper_mu_positive(const DegreeSequence& d) {
  detail::require_graphical(d);
  if (d.length() == 0) throw Error(ErrorCode::InvalidInput, "empty sequence");
  if (d.length() % 2 != 0) {
    throw Error(ErrorCode::UnsupportedOddLength, "the perfect-matching reduction needs even length");
  }
  if (d[d.length() - 1] == 0) return false;
  return kundu_has_pm_realization(d);
}

struct LowerMuResult {
  int value = 0;
  int k_star = 0;
  /// Realization attaining the value, with the (S, T) that witnesses it.
  Graph witness;
  VertexSet S;
  VertexSet T;
  /// OPT(k) for k = 1 .. floor((n+1)/2), index k-1.
  std::vector<int> opt;
};

/// Minimum of mu over all realizations of d, in polynomial time.
///
/// For each k, S is the k lowest-degree vertices and T the k-1 highest. An
/// edge of K_n costs 1 when it lies inside S or joins S to a vertex outside
/// T, so the cost of a realization is |E(S; V\T)|. A minimum-cost b-factor
/// with b = d gives OPT(k); the answer is min_k OPT(k).
inline LowerMuResult lower_mu(const DegreeSequence& d) {
  detail::require_graphical(d);
  const int n = d.length();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "empty sequence");
  LowerMuResult best;
  best.value = std::numeric_limits<int>::max();
  for (int k = 1; k <= (n + 1) / 2; ++k) {
    auto in_s = [&](int v) { return v >= n - k; };
    auto in_t = [&](int v) { return v < k - 1; };
    BFactorInstance inst(d.degrees());
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        bool charged = (in_s(u) && !in_t(v)) || (in_s(v) && !in_t(u));
        inst.set_cost(u, v, charged ? 1 : 0);
      }
    }
    BFactorResult r = min_cost_b_factor(inst);
    int opt = static_cast<int>(r.total_cost);
    best.opt.push_back(opt);
    if (opt < best.value) {
      best.value = opt;
      best.k_star = k;
      best.witness = std::move(r.factor);
    }
  }
  std::vector<int> s;
  std::vector<int> t;
  for (int v = n - best.k_star; v < n; ++v) s.push_back(v);
  for (int v = 0; v < best.k_star - 1; ++v) t.push_back(v);
  best.S = VertexSet(std::move(s));
  best.T = VertexSet(std::move(t));
  return best;
}

namespace detail {

struct RowsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& rows) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto r : rows) h = (h ^ std::hash<std::uint64_t>{}(r)) * 0x100000001b3ULL;
    return h;
  }
};

inline Graph graph_from_rows(const std::vector<std::uint64_t>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    std::uint64_t r = rows[static_cast<std::size_t>(u)] >> (u + 1);
    while (r != 0) {
      int off = std::countr_zero(r);
      r &= r - 1;
      edges.emplace_back(u, u + 1 + off);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace detail

/// All labeled realizations of d, found by breadth-first search over single
/// swaps from the Havel–Hakimi realization (swaps connect the realization
/// space). Throws CapExceeded once more than `cap` graphs are found.
inline std::vector<Graph> enumerate_realizations(const DegreeSequence& d, std::size_t cap) {
  detail::require_graphical(d);
  const int n = d.length();
  if (n > Graph::kBitsetLimit) throw Error(ErrorCode::GuardExceeded, "enumeration needs n <= 64");
  Graph start = havel_hakimi_realize(d);
  using Rows = std::vector<std::uint64_t>;
  Rows first(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) first[static_cast<std::size_t>(v)] = start.row(v);

  std::unordered_set<Rows, detail::RowsHash> seen{first};
  std::vector<Rows> queue{first};
  std::vector<Edge> edges;
  auto bit = [](int v) { return std::uint64_t{1} << v; };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    // Copy: push_back below may reallocate.
    const Rows rows = queue[head];
    edges.clear();
    for (int u = 0; u < n; ++u) {
      std::uint64_t r = rows[static_cast<std::size_t>(u)] >> (u + 1);
      while (r != 0) {
        int off = std::countr_zero(r);
        r &= r - 1;
        edges.emplace_back(u, u + 1 + off);
      }
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const int a = edges[i].u;
        const int b = edges[i].v;
        for (int pairing = 0; pairing < 2; ++pairing) {
          const int c = pairing == 0 ? edges[j].u : edges[j].v;
          const int e = pairing == 0 ? edges[j].v : edges[j].u;
          if (a == c || a == e || b == c || b == e) continue;
          // Replace ab, ce by ac, be.
          if ((rows[static_cast<std::size_t>(a)] & bit(c)) || (rows[static_cast<std::size_t>(b)] & bit(e))) continue;
          Rows next = rows;
          next[static_cast<std::size_t>(a)] ^= bit(b) | bit(c);
          next[static_cast<std::size_t>(b)] ^= bit(a) | bit(e);
          next[static_cast<std::size_t>(c)] ^= bit(e) | bit(a);
          next[static_cast<std::size_t>(e)] ^= bit(c) | bit(b);
          if (seen.insert(next).second) {
            if (seen.size() > cap) {
              throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " realizations");
            }
            queue.push_back(std::move(next));
          }
        }
      }
    }
  }
  std::vector<Graph> out;
  out.reserve(queue.size());
  for (const auto& rows : queue) out.push_back(detail::graph_from_rows(rows));
  return out;
}

/// Calls fn(DegreeSequence) for every nonincreasing sequence of length n with
/// entries in [0, n-1], graphical or not.
template <class Fn>
void for_each_degree_sequence(int n, Fn&& fn) {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int max_value) -> void {
    if (pos == n) {
      fn(DegreeSequence(d));
      return;
    }
    for (int x = max_value; x >= 0; --x) {
      d[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1, x);
    }
  };
  rec(rec, 0, n - 1);
}

/// Sorted distinct values of mu over all realizations of d.
inline std::vector<int> mu_value_set(const DegreeSequence& d, std::size_t cap) {
  std::set<int> values;
  for (const Graph& g : enumerate_realizations(d, cap)) values.insert(mu_exact(g).value);
  return {values.begin(), values.end()};
}

}  // namespace mms
