#pragma once

// Exact decision procedures: maximum bipartite matching (Hopcroft-Karp),
// transversal existence, and Hall-deficient subfamilies.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdr/core.hpp"

namespace sdr {

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline Matching max_matching(const BipartiteGraph& graph) {
  constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t na = graph.size_a();
  std::vector<std::size_t> mate_a(na, kFree);
  std::vector<std::size_t> mate_b(graph.size_b(), kFree);
  std::vector<std::size_t> dist(na);
  std::vector<std::size_t> queue;
  queue.reserve(na);

  // Layers free A-vertices at distance 0; returns whether a free B-vertex is
  // reachable by an alternating path.
  auto bfs = [&] {
    queue.clear();
    for (std::size_t a = 0; a < na; ++a) {
      if (mate_a[a] == kFree) {
        dist[a] = 0;
        queue.push_back(a);
      } else {
        dist[a] = kInf;
      }
    }
    bool reachable = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto a = queue[head];
      for (auto b : graph.neighbors(a)) {
        const auto next = mate_b[b];
        if (next == kFree) {
          reachable = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[a] + 1;
          queue.push_back(next);
        }
      }
    }
    return reachable;
  };

  std::vector<std::size_t> cursor(na);
  // Iterative DFS along the layered graph.
  auto augment = [&](std::size_t root) {
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const auto a = stack.back();
      const auto& nb = graph.neighbors(a);
      bool advanced = false;
      while (cursor[a] < nb.size()) {
        const auto b = nb[cursor[a]];
        const auto next = mate_b[b];
        if (next == kFree) {
          // flip the path recorded on the stack
          std::size_t free_b = b;
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            const auto u = *it;
            const auto prev_b = mate_a[u];
            mate_a[u] = free_b;
            mate_b[free_b] = u;
            free_b = prev_b;
          }
          return true;
        }
        if (dist[next] == dist[a] + 1) {
          stack.push_back(next);
          advanced = true;
          break;
        }
        ++cursor[a];
      }
      if (!advanced) {
        dist[a] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++cursor[stack.back()];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (std::size_t a = 0; a < na; ++a) {
      if (mate_a[a] == kFree) augment(a);
    }
  }

  Matching m;
  for (std::size_t a = 0; a < na; ++a) {
    if (mate_a[a] != kFree) m.pairs.emplace_back(a, mate_a[a]);
  }
  return m;
}

// Incidence graph of a family: A = indices, B = distinct union elements in
// sorted order, edge iff membership. `labels[b]` maps B back to elements.
struct IncidenceGraph {
  BipartiteGraph graph;
  ElementSet labels;
};

inline IncidenceGraph incidence_graph(const SetFamily& family) {
  IncidenceGraph inc;
  inc.labels = family.universe();
  std::vector<Edge> edges;
  for (Index i = 0; i < family.size(); ++i) {
    for (auto x : family[i]) {
      const auto b = static_cast<std::size_t>(
          std::lower_bound(inc.labels.begin(), inc.labels.end(), x) - inc.labels.begin());
      edges.emplace_back(i, b);
    }
  }
  inc.graph = BipartiteGraph(family.size(), inc.labels.size(), std::move(edges));
  return inc;
}

// Witness transversal when one exists.
inline std::optional<Transversal> has_transversal_exact(const SetFamily& family) {
  const auto inc = incidence_graph(family);
  const auto m = max_matching(inc.graph);
  if (m.size() != family.size()) return std::nullopt;
  Assignment a;
  a.choices.resize(family.size());
  for (const auto& [i, b] : m.pairs) a.choices[i] = inc.labels[b];
  return Transversal::certify(family, std::move(a));
}

inline constexpr std::size_t kDefaultHallLimit = 20;

// First index subset (by size, then lexicographically) whose union is smaller
// than the subset. Exponential in n, so n is capped.
inline std::optional<std::vector<Index>> hall_violating_subfamily(
    const SetFamily& family, std::size_t max_n = kDefaultHallLimit) {
  const std::size_t n = family.size();
  if (n > max_n) {
    throw CapacityError("Hall enumeration limited to " + std::to_string(max_n) +
                        " sets, family has " + std::to_string(n) +
                        "; use the matching-based oracle");
  }
  const auto labels = family.universe();
  const std::size_t words = (labels.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(n, std::vector<std::uint64_t>(words, 0));
  for (Index i = 0; i < n; ++i) {
    for (auto x : family[i]) {
      const auto b = static_cast<std::size_t>(
          std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
      bits[i][b / 64] |= std::uint64_t{1} << (b % 64);
    }
  }

  std::vector<std::uint64_t> acc(words);
  std::vector<Index> subset;
  for (std::size_t k = 1; k <= n; ++k) {
    subset.resize(k);
    for (std::size_t t = 0; t < k; ++t) subset[t] = t;
    while (true) {
      std::fill(acc.begin(), acc.end(), 0);
      for (auto i : subset)
        for (std::size_t w = 0; w < words; ++w) acc[w] |= bits[i][w];
      std::size_t union_size = 0;
      for (auto w : acc) union_size += static_cast<std::size_t>(std::popcount(w));
      if (union_size < k) return subset;

      // next k-combination in lexicographic order
      std::size_t t = k;
      while (t > 0 && subset[t - 1] == n - k + (t - 1)) --t;
      if (t == 0) break;
      ++subset[t - 1];
      for (std::size_t u = t; u < k; ++u) subset[u] = subset[u - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace sdr
