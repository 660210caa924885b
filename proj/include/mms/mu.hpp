#pragma once

// Exact computation of mu(G), the minimum number of edges whose deletion
// leaves an independent set S with fewer than |S| neighbours, together with
// certificates that can be checked independently of the search.
//
// For a fixed S the best T is forced: a vertex u outside S placed in T saves
// the d(u,S) edges it receives from S, so T is the |S|-1 outside vertices with
// the largest d(u,S). This collapses the search over pairs (S,T) to a search
// over S alone, and it suffices to try |S| <= (n+1)/2.

#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mms/error.hpp"
#include "mms/graph.hpp"
#include "mms/matching.hpp"

namespace mms {

/// Integer vertex weighting with the set of edges whose endpoint weights sum
/// to a nonnegative value.
struct WeightCertificate {
  std::vector<long long> weights;
  std::vector<Edge> nonnegative_edges;
};

/// Witness for mu(G) = value: deleting `deleted` = E_G(S; V\T) leaves S
/// independent with all neighbours inside T, and |T| = |S| - 1.
struct MuCertificate {
  int value = 0;
  VertexSet S;
  VertexSet T;
  std::vector<Edge> deleted;
  std::vector<long long> weights;
};

struct MuOptions {
  /// Above this order the search refuses to run unless `force` is set.
  int max_order = 24;
  bool force = false;
  /// Restrict the search to min_set_size <= |S| <= max_set_size. A
  /// max_set_size of 0 means floor((n+1)/2).
  int min_set_size = 1;
  int max_set_size = 0;
};

/// Weighting that certifies a (S,T) pair: n-1 on S, -(n+1) on T, -1 elsewhere.
/// These are the fractional-cover weights scaled by 2n; the total is zero and
/// exactly the edges of E_G(S; V\T) get a nonnegative sum.
inline WeightCertificate certificate_weighting(const Graph& g, const VertexSet& s, const VertexSet& t) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::InvalidSTPair, "empty graph");
  for (int v : s) {
    if (v < 0 || v >= n) throw Error(ErrorCode::InvalidSTPair, "S member out of range");
    if (t.contains(v)) throw Error(ErrorCode::InvalidSTPair, "S and T intersect");
  }
  for (int v : t) {
    if (v < 0 || v >= n) throw Error(ErrorCode::InvalidSTPair, "T member out of range");
  }
  if (s.empty() || s.size() != t.size() + 1) {
    throw Error(ErrorCode::InvalidSTPair, "requires |S| = |T| + 1 >= 1");
  }
  WeightCertificate wc;
  wc.weights.assign(static_cast<std::size_t>(n), -1);
  for (int v : s) wc.weights[static_cast<std::size_t>(v)] = n - 1;
  for (int v : t) wc.weights[static_cast<std::size_t>(v)] = -(n + 1);
  for (const Edge& e : g.edges()) {
    if (wc.weights[static_cast<std::size_t>(e.u)] + wc.weights[static_cast<std::size_t>(e.v)] >= 0) {
      wc.nonnegative_edges.push_back(e);
    }
  }
  return wc;
}

/// Outcome of verify_certificate; `reason` names the first failed invariant.
struct CertificateCheck {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

inline CertificateCheck verify_certificate(const Graph& g, const MuCertificate& cert) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  const int n = g.order();
  if (n == 0) return fail("empty graph");
  for (int v : cert.S) {
    if (v < 0 || v >= n) return fail("S member out of range");
  }
  for (int v : cert.T) {
    if (v < 0 || v >= n) return fail("T member out of range");
    if (cert.S.contains(v)) return fail("S and T intersect");
  }
  if (cert.S.empty()) return fail("S is empty");
  if (cert.S.size() != cert.T.size() + 1) return fail("|S| != |T| + 1");
  if (cert.S.size() > static_cast<std::size_t>((n + 1) / 2)) return fail("|S| > (n+1)/2");

  auto expected = deleted_edge_set(g, cert.S, cert.T);
  auto listed = cert.deleted;
  std::sort(listed.begin(), listed.end());
  if (listed != expected) return fail("deleted set differs from E_G(S; V\\T)");
  if (cert.value < 0 || static_cast<std::size_t>(cert.value) != expected.size()) {
    return fail("value differs from |deleted|");
  }

  Graph rest = delete_edges(g, expected);
  if (!is_independent(rest, cert.S)) return fail("S not independent after deletion");
  for (int v : neighborhood(rest, cert.S)) {
    if (!cert.T.contains(v)) return fail("S has a neighbour outside T after deletion");
  }

  if (cert.weights.size() != static_cast<std::size_t>(n)) return fail("weights have wrong length");
  if (std::accumulate(cert.weights.begin(), cert.weights.end(), 0LL) != 0) return fail("weights do not sum to 0");
  std::vector<Edge> nonneg;
  for (const Edge& e : g.edges()) {
    if (cert.weights[static_cast<std::size_t>(e.u)] + cert.weights[static_cast<std::size_t>(e.v)] >= 0) {
      nonneg.push_back(e);
    }
  }
  if (nonneg != expected) return fail("nonnegative edges differ from the deleted set");
  return {true, {}};
}

/// Certificate for a given (S,T); T is not required to be optimal.
inline MuCertificate make_certificate(const Graph& g, const VertexSet& s, const VertexSet& t) {
  MuCertificate cert;
  cert.S = s;
  cert.T = t;
  cert.deleted = deleted_edge_set(g, s, t);
  cert.value = static_cast<int>(cert.deleted.size());
  cert.weights = certificate_weighting(g, s, t).weights;
  return cert;
}

namespace detail {

// Cost of the best (S,T) for a fixed S given as a bitmask.
inline int mu_cost_for_set(std::span<const std::uint64_t> rows, std::uint64_t s_mask) {
  const int n = static_cast<int>(rows.size());
  const int s = std::popcount(s_mask);
  int internal2 = 0;
  int outside = 0;
  int hist[65] = {};
  for (int v = 0; v < n; ++v) {
    int c = std::popcount(rows[static_cast<std::size_t>(v)] & s_mask);
    if ((s_mask >> v) & 1U) {
      internal2 += c;
    } else {
      outside += c;
      ++hist[c];
    }
  }
  int take = s - 1;
  int saved = 0;
  for (int c = s; c > 0 && take > 0; --c) {
    int k = std::min(take, hist[c]);
    saved += k * c;
    take -= k;
  }
  return internal2 / 2 + outside - saved;
}

// T for a fixed S: the |S|-1 outside vertices with the most edges into S,
// ties to the smaller id.
inline VertexSet best_t_for_set(const Graph& g, std::uint64_t s_mask) {
  std::vector<std::pair<int, int>> outside;
  for (int v = 0; v < g.order(); ++v) {
    if (!((s_mask >> v) & 1U)) outside.emplace_back(-std::popcount(g.row(v) & s_mask), v);
  }
  std::sort(outside.begin(), outside.end());
  std::vector<int> t;
  const std::size_t want = static_cast<std::size_t>(std::popcount(s_mask)) - 1;
  for (std::size_t i = 0; i < want; ++i) t.push_back(outside[i].second);
  return VertexSet(std::move(t));
}

}  // namespace detail

/// Exact mu(G) with a certificate. Among optimal S the numerically smallest
/// bitmask is reported.
inline MuCertificate mu_exact(const Graph& g, const MuOptions& opt = {}) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "mu of the empty graph");
  if (n > opt.max_order && !opt.force) {
    throw Error(ErrorCode::GuardExceeded,
                "n = " + std::to_string(n) + " exceeds the exact-search cap of " + std::to_string(opt.max_order));
  }
  if (n > 40) throw Error(ErrorCode::GuardExceeded, "exact search is limited to n <= 40");
  const int hi = opt.max_set_size > 0 ? std::min(opt.max_set_size, (n + 1) / 2) : (n + 1) / 2;
  const int lo = std::max(opt.min_set_size, 1);
  if (lo > hi) throw Error(ErrorCode::InvalidInput, "empty range of |S|");

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = g.row(v);

  int best = std::numeric_limits<int>::max();
  std::uint64_t best_mask = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    int s = std::popcount(mask);
    if (s < lo || s > hi) continue;
    int cost = detail::mu_cost_for_set(rows, mask);
    if (cost < best) {
      best = cost;
      best_mask = mask;
      if (best == 0) break;
    }
  }
  MuCertificate cert = make_certificate(g, VertexSet::from_mask(best_mask), detail::best_t_for_set(g, best_mask));
  if (cert.value != best) throw Error(ErrorCode::InvalidInput, "internal error: certificate cost mismatch");
  return cert;
}

struct BlockingResult {
  int size = 0;
  std::vector<Edge> blockers;
};

/// Number of r-subsets tried by mu_via_blocking is bounded by C(|E|, delta).
inline double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

/// Smallest edge set whose removal destroys every perfect 2-matching, found by
/// exhaustive search over edge subsets in size order. Independent of
/// mu_exact; intended as a test oracle.
inline BlockingResult mu_via_blocking(const Graph& g, double guard = 1e7) {
  if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "mu of the empty graph");
  if (g.order() > Graph::kBitsetLimit) throw Error(ErrorCode::GuardExceeded, "n > 64");
  if (!has_perfect_2_matching(g)) return {};
  const int delta = min_degree(g);
  if (binomial(g.size(), static_cast<std::size_t>(delta)) > guard) {
    throw Error(ErrorCode::GuardExceeded, "C(|E|, min degree) exceeds the blocking-search guard");
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.row(v);
  const auto& edges = g.edges();
  std::vector<std::size_t> chosen;

  auto toggle = [&](const Edge& e) {
    rows[static_cast<std::size_t>(e.u)] ^= std::uint64_t{1} << e.v;
    rows[static_cast<std::size_t>(e.v)] ^= std::uint64_t{1} << e.u;
  };
  auto search = [&](auto&& self, std::size_t start, int left) -> bool {
    if (left == 0) return !detail::has_perfect_2_matching_bits(rows);
    for (std::size_t i = start; i + static_cast<std::size_t>(left) <= edges.size(); ++i) {
      toggle(edges[i]);
      chosen.push_back(i);
      if (self(self, i + 1, left - 1)) return true;
      chosen.pop_back();
      toggle(edges[i]);
    }
    return false;
  };

  // Sizes below the minimum degree are searched exhaustively; at the minimum
  // degree, isolating a vertex always blocks.
  for (int r = 1; r < delta; ++r) {
    chosen.clear();
    if (search(search, 0, r)) {
      BlockingResult out{r, {}};
      for (std::size_t i : chosen) out.blockers.push_back(edges[i]);
      return out;
    }
  }
  BlockingResult out{delta, {}};
  int v = 0;
  while (g.degree(v) != delta) ++v;
  for (int w : g.neighbors(v)) out.blockers.emplace_back(v, w);
  std::sort(out.blockers.begin(), out.blockers.end());
  return out;
}

}  // namespace mms
