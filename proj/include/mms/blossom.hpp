#pragma once

// Minimum-cost perfect matching on general graphs.
//
// Primal-dual blossom algorithm (Edmonds) in the O(n^3) form with slack
// tracking. Costs c are turned into weights w = M - c with M larger than the
// sum of all costs, so a maximum-weight matching is perfect whenever a perfect
// matching exists and, among perfect matchings, has minimum cost. Duals are
// stored doubled (lab = 2y) so every quantity stays integral.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "mms/error.hpp"
#include "mms/graph.hpp"
#include "mms/matching.hpp"

namespace mms {

struct CostedEdge {
  int u = 0;
  int v = 0;
  std::int64_t cost = 0;
};

struct PerfectMatchingResult {
  Matching matching;
  std::int64_t total_cost = 0;
};

namespace detail {

class WeightedBlossom {
 public:
  using Weight = std::int64_t;

  explicit WeightedBlossom(int n)
      : n_(n),
        cap_(2 * n + 1),
        g_(static_cast<std::size_t>(cap_) * static_cast<std::size_t>(cap_)),
        lab_(static_cast<std::size_t>(cap_), 0),
        match_(static_cast<std::size_t>(cap_), 0),
        slack_(static_cast<std::size_t>(cap_), 0),
        st_(static_cast<std::size_t>(cap_), 0),
        pa_(static_cast<std::size_t>(cap_), 0),
        s_(static_cast<std::size_t>(cap_), 0),
        vis_(static_cast<std::size_t>(cap_), 0),
        flo_(static_cast<std::size_t>(cap_)),
        flo_from_(static_cast<std::size_t>(cap_) * static_cast<std::size_t>(n + 1), 0) {
    for (int u = 1; u <= n_; ++u) {
      for (int v = 1; v <= n_; ++v) at(u, v) = {u, v, 0};
    }
  }

  /// 1-based endpoints; weight must be positive. Keeps the heavier of parallel edges.
  void set_weight(int u, int v, Weight w) {
    if (w > at(u, v).w) {
      at(u, v).w = w;
      at(v, u).w = w;
    }
  }

  /// Runs to a maximum-weight matching; mate(u) is 1-based or 0.
  void solve() {
    n_x_ = n_;
    for (int u = 0; u <= n_; ++u) {
      st_[idx(u)] = u;
      flo_[idx(u)].clear();
    }
    Weight w_max = 0;
    for (int u = 1; u <= n_; ++u) {
      for (int v = 1; v <= n_; ++v) {
        from(u, v) = (u == v ? u : 0);
        w_max = std::max(w_max, at(u, v).w);
      }
    }
    for (int u = 1; u <= n_; ++u) lab_[idx(u)] = w_max;
    while (augment_once()) {
    }
  }

  int mate(int u) const { return match_[idx(u)]; }

 private:
  struct Slot {
    int u = 0;
    int v = 0;
    Weight w = 0;
  };

  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
  Slot& at(int u, int v) { return g_[idx(u) * idx(cap_) + idx(v)]; }
  int& from(int b, int x) { return flo_from_[idx(b) * idx(n_ + 1) + idx(x)]; }

  Weight e_delta(const Slot& e) const { return lab_[idx(e.u)] + lab_[idx(e.v)] - at_c(e.u, e.v).w * 2; }
  const Slot& at_c(int u, int v) const { return g_[idx(u) * idx(cap_) + idx(v)]; }

  void update_slack(int u, int x) {
    if (slack_[idx(x)] == 0 || e_delta(at(u, x)) < e_delta(at(slack_[idx(x)], x))) slack_[idx(x)] = u;
  }

  void set_slack(int x) {
    slack_[idx(x)] = 0;
    for (int u = 1; u <= n_; ++u) {
      if (at(u, x).w > 0 && st_[idx(u)] != x && s_[idx(st_[idx(u)])] == 0) update_slack(u, x);
    }
  }

  void q_push(int x) {
    if (x <= n_) {
      q_.push(x);
    } else {
      for (int y : flo_[idx(x)]) q_push(y);
    }
  }

  void set_st(int x, int b) {
    st_[idx(x)] = b;
    if (x > n_) {
      for (int y : flo_[idx(x)]) set_st(y, b);
    }
  }

  int get_pr(int b, int xr) {
    auto& f = flo_[idx(b)];
    int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
    if (pr % 2 == 1) {
      std::reverse(f.begin() + 1, f.end());
      return static_cast<int>(f.size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match_[idx(u)] = at(u, v).v;
    if (u <= n_) return;
    Slot e = at(u, v);
    int xr = from(u, e.u);
    int pr = get_pr(u, xr);
    auto& f = flo_[idx(u)];
    for (int i = 0; i < pr; ++i) set_match(f[idx(i)], f[idx(i ^ 1)]);
    set_match(xr, v);
    std::rotate(f.begin(), f.begin() + pr, f.end());
  }

  void augment(int u, int v) {
    for (;;) {
      int xnv = st_[idx(match_[idx(u)])];
      set_match(u, v);
      if (xnv == 0) return;
      set_match(xnv, st_[idx(pa_[idx(xnv)])]);
      u = st_[idx(pa_[idx(xnv)])];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    for (++stamp_; u != 0 || v != 0; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[idx(u)] == stamp_) return u;
      vis_[idx(u)] = stamp_;
      u = st_[idx(match_[idx(u)])];
      if (u != 0) u = st_[idx(pa_[idx(u)])];
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[idx(b)] != 0) ++b;
    if (b > n_x_) ++n_x_;
    lab_[idx(b)] = 0;
    s_[idx(b)] = 0;
    match_[idx(b)] = match_[idx(lca)];
    auto& f = flo_[idx(b)];
    f.clear();
    f.push_back(lca);
    for (int x = u, y; x != lca; x = st_[idx(pa_[idx(y)])]) {
      f.push_back(x);
      y = st_[idx(match_[idx(x)])];
      f.push_back(y);
      q_push(y);
    }
    std::reverse(f.begin() + 1, f.end());
    for (int x = v, y; x != lca; x = st_[idx(pa_[idx(y)])]) {
      f.push_back(x);
      y = st_[idx(match_[idx(x)])];
      f.push_back(y);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) {
      at(b, x).w = 0;
      at(x, b).w = 0;
    }
    for (int x = 1; x <= n_; ++x) from(b, x) = 0;
    for (int xs : f) {
      for (int x = 1; x <= n_x_; ++x) {
        if (at(b, x).w == 0 || e_delta(at(xs, x)) < e_delta(at(b, x))) {
          at(b, x) = at(xs, x);
          at(x, b) = at(x, xs);
        }
      }
      for (int x = 1; x <= n_; ++x) {
        if (from(xs, x) != 0) from(b, x) = xs;
      }
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    auto f = flo_[idx(b)];
    for (int x : f) set_st(x, x);
    int xr = from(b, at(b, pa_[idx(b)]).u);
    int pr = get_pr(b, xr);
    const auto& g = flo_[idx(b)];
    for (int i = 0; i < pr; i += 2) {
      int xs = g[idx(i)];
      int xns = g[idx(i + 1)];
      pa_[idx(xs)] = at(xns, xs).u;
      s_[idx(xs)] = 1;
      s_[idx(xns)] = 0;
      slack_[idx(xs)] = 0;
      set_slack(xns);
      q_push(xns);
    }
    s_[idx(xr)] = 1;
    pa_[idx(xr)] = pa_[idx(b)];
    for (std::size_t i = idx(pr) + 1; i < g.size(); ++i) {
      int xs = g[i];
      s_[idx(xs)] = -1;
      set_slack(xs);
    }
    st_[idx(b)] = 0;
  }

  bool on_found_edge(const Slot& e) {
    int u = st_[idx(e.u)];
    int v = st_[idx(e.v)];
    if (s_[idx(v)] == -1) {
      pa_[idx(v)] = e.u;
      s_[idx(v)] = 1;
      int nu = st_[idx(match_[idx(v)])];
      slack_[idx(v)] = 0;
      slack_[idx(nu)] = 0;
      s_[idx(nu)] = 0;
      q_push(nu);
    } else if (s_[idx(v)] == 0) {
      int lca = get_lca(u, v);
      if (lca == 0) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool augment_once() {
    std::fill(s_.begin() + 1, s_.begin() + 1 + n_x_, -1);
    std::fill(slack_.begin() + 1, slack_.begin() + 1 + n_x_, 0);
    q_ = {};
    for (int x = 1; x <= n_x_; ++x) {
      if (st_[idx(x)] == x && match_[idx(x)] == 0) {
        pa_[idx(x)] = 0;
        s_[idx(x)] = 0;
        q_push(x);
      }
    }
    if (q_.empty()) return false;
    for (;;) {
      while (!q_.empty()) {
        int u = q_.front();
        q_.pop();
        if (s_[idx(st_[idx(u)])] == 1) continue;
        for (int v = 1; v <= n_; ++v) {
          if (at(u, v).w > 0 && st_[idx(u)] != st_[idx(v)]) {
            if (e_delta(at(u, v)) == 0) {
              if (on_found_edge(at(u, v))) return true;
            } else {
              update_slack(u, st_[idx(v)]);
            }
          }
        }
      }
      Weight d = std::numeric_limits<Weight>::max();
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[idx(b)] == b && s_[idx(b)] == 1) d = std::min(d, lab_[idx(b)] / 2);
      }
      for (int x = 1; x <= n_x_; ++x) {
        if (st_[idx(x)] == x && slack_[idx(x)] != 0) {
          if (s_[idx(x)] == -1) {
            d = std::min(d, e_delta(at(slack_[idx(x)], x)));
          } else if (s_[idx(x)] == 0) {
            d = std::min(d, e_delta(at(slack_[idx(x)], x)) / 2);
          }
        }
      }
      for (int u = 1; u <= n_; ++u) {
        if (s_[idx(st_[idx(u)])] == 0) {
          // An exposed vertex's dual would go negative: matching is maximum.
          if (lab_[idx(u)] <= d) return false;
          lab_[idx(u)] -= d;
        } else if (s_[idx(st_[idx(u)])] == 1) {
          lab_[idx(u)] += d;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[idx(b)] == b) {
          if (s_[idx(b)] == 0) {
            lab_[idx(b)] += d * 2;
          } else if (s_[idx(b)] == 1) {
            lab_[idx(b)] -= d * 2;
          }
        }
      }
      q_ = {};
      for (int x = 1; x <= n_x_; ++x) {
        if (st_[idx(x)] == x && slack_[idx(x)] != 0 && st_[idx(slack_[idx(x)])] != x &&
            e_delta(at(slack_[idx(x)], x)) == 0) {
          if (on_found_edge(at(slack_[idx(x)], x))) return true;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[idx(b)] == b && s_[idx(b)] == 1 && lab_[idx(b)] == 0) expand_blossom(b);
      }
    }
  }

  int n_;
  int cap_;
  int n_x_ = 0;
  int stamp_ = 0;
  std::vector<Slot> g_;
  std::vector<Weight> lab_;
  std::vector<int> match_;
  std::vector<int> slack_;
  std::vector<int> st_;
  std::vector<int> pa_;
  std::vector<int> s_;
  std::vector<int> vis_;
  std::vector<std::vector<int>> flo_;
  std::vector<int> flo_from_;
  std::queue<int> q_;
};

}  // namespace detail

/// Minimum-cost perfect matching on `n` vertices. Costs must be nonnegative.
/// Throws NoPerfectMatching when no perfect matching exists.
inline PerfectMatchingResult min_cost_perfect_matching(int n, std::span<const CostedEdge> edges) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative vertex count");
  if (n % 2 != 0) throw Error(ErrorCode::NoPerfectMatching, "odd number of vertices");
  std::int64_t total = 0;
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
      throw Error(ErrorCode::InvalidInput, "costed edge endpoint invalid");
    }
    if (e.cost < 0) throw Error(ErrorCode::InvalidInput, "negative edge cost");
    if (total > std::numeric_limits<std::int64_t>::max() / 8 - e.cost) {
      throw Error(ErrorCode::InvalidInput, "edge costs too large");
    }
    total += e.cost;
  }
  PerfectMatchingResult result;
  if (n == 0) return result;

  const std::int64_t big = total + 1;
  detail::WeightedBlossom solver(n);
  for (const auto& e : edges) solver.set_weight(e.u + 1, e.v + 1, big - e.cost);
  solver.solve();

  // Parallel edges: the solver kept the cheapest copy, so report that cost.
  std::vector<std::int64_t> best(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                                 std::numeric_limits<std::int64_t>::max());
  for (const auto& e : edges) {
    auto& a = best[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.v)];
    auto& b = best[static_cast<std::size_t>(e.v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.u)];
    a = std::min(a, e.cost);
    b = std::min(b, e.cost);
  }
  for (int u = 0; u < n; ++u) {
    int m = solver.mate(u + 1) - 1;
    if (m < 0) throw Error(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
    if (u < m) {
      result.matching.pairs.emplace_back(u, m);
      result.total_cost +=
          best[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(m)];
    }
  }
  return result;
}

inline PerfectMatchingResult min_cost_perfect_matching(int n, std::initializer_list<CostedEdge> edges) {
  return min_cost_perfect_matching(n, std::span<const CostedEdge>(edges.begin(), edges.size()));
}

}  // namespace mms
