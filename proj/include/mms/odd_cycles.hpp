#pragma once

// Degree-preserving reduction of a perfect 2-matching to one with at most a
// single odd cycle.

#include <vector>

#include "mms/error.hpp"
#include "mms/graph.hpp"
#include "mms/matching.hpp"

namespace mms {

struct OddCycleReduction {
  Graph graph;
  PerfectTwoMatching p2m;
  /// One per merged pair of odd cycles.
  int iterations = 0;
  /// How many of the merges needed a swap.
  int swaps = 0;
};

namespace detail {

// Even cycle through all of c1 and c2 after replacing edge (a,b) of c1 and
// (c,d) of c2 by a-c and b-d, split into alternate edges. `i` indexes a in
// c1 (b follows it); `j` indexes the first vertex of the c2 edge, and
// `forward` says whether c = c2[j].
inline std::vector<Edge> merge_cycles(const std::vector<int>& c1, std::size_t i, const std::vector<int>& c2,
                                      std::size_t j, bool forward) {
  const std::size_t l1 = c1.size();
  const std::size_t l2 = c2.size();
  std::vector<int> seq;
  seq.reserve(l1 + l2);
  for (std::size_t k = 0; k < l1; ++k) seq.push_back(c1[(i + 1 + k) % l1]);  // b ... a
  if (forward) {
    // c = c2[j], d = c2[j+1]: walk backwards from c to d.
    for (std::size_t k = 0; k < l2; ++k) seq.push_back(c2[(j + l2 - k) % l2]);
  } else {
    // c = c2[j+1], d = c2[j]: walk forwards from c to d.
    for (std::size_t k = 0; k < l2; ++k) seq.push_back(c2[(j + 1 + k) % l2]);
  }
  std::vector<Edge> k2;
  for (std::size_t k = 0; k < seq.size(); k += 2) k2.emplace_back(seq[k], seq[k + 1]);
  return k2;
}

}  // namespace detail

/// While two odd cycles C1, C2 remain, look for edges a-b in C1 and c-d in C2
/// with a-c and b-d both present (merge directly) or both absent (swap a-b,
/// c-d for a-c, b-d, then merge). A 2-colouring argument on the odd cycle C2
/// shows one of the two cases always occurs. Cycles are paired in index order
/// and edge pairs scanned lexicographically.
inline OddCycleReduction reduce_odd_cycles(const Graph& g) {
  OddCycleReduction out{g, extract_p2m(g), 0, 0};
  auto& cycles = out.p2m.odd_cycles;
  while (cycles.size() >= 2) {
    const auto c1 = cycles[0];
    const auto c2 = cycles[1];
    bool merged = false;
    for (std::size_t i = 0; i < c1.size() && !merged; ++i) {
      const int a = c1[i];
      const int b = c1[(i + 1) % c1.size()];
      for (std::size_t j = 0; j < c2.size() && !merged; ++j) {
        for (bool forward : {true, false}) {
          const int c = forward ? c2[j] : c2[(j + 1) % c2.size()];
          const int d = forward ? c2[(j + 1) % c2.size()] : c2[j];
          const bool ac = out.graph.has_edge(a, c);
          const bool bd = out.graph.has_edge(b, d);
          if (ac != bd) continue;
          if (!ac) {
            out.graph = swap(out.graph, SwapMove{a, b, c, d});
            ++out.swaps;
          }
          auto k2 = detail::merge_cycles(c1, i, c2, j, forward);
          out.p2m.k2_components.insert(out.p2m.k2_components.end(), k2.begin(), k2.end());
          merged = true;
          break;
        }
      }
    }
    if (!merged) throw Error(ErrorCode::InvalidInput, "internal error: no mergeable edge pair between odd cycles");
    cycles.erase(cycles.begin(), cycles.begin() + 2);
    ++out.iterations;
  }
  return out;
}

}  // namespace mms
