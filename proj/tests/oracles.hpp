#pragma once

// Brute-force reference implementations and fixed instances for tests. Kept
// deliberately naive and independent of the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sdr/core.hpp"

namespace sdr::testing {

inline std::size_t brute_intersection(const ElementSet& a, const ElementSet& b) {
  std::size_t c = 0;
  for (auto x : a)
    for (auto y : b) c += (x == y);
  return c;
}

struct BruteStats {
  std::size_t l = 0;
  std::size_t m = 0;
};

inline BruteStats brute_stats(const SetFamily& f) {
  BruteStats s;
  s.l = f.empty() ? 0 : f[0].size();
  for (Index i = 0; i < f.size(); ++i) {
    s.l = std::min(s.l, f[i].size());
    for (Index j = 0; j < f.size(); ++j)
      if (i != j) s.m = std::max(s.m, brute_intersection(f[i], f[j]));
  }
  return s;
}

// Collision count over all |S_i| * |S_j| outcome pairs, unreduced.
inline std::pair<std::uint64_t, std::uint64_t> enumerate_collisions(const ElementSet& a,
                                                                    const ElementSet& b) {
  std::uint64_t hits = 0, total = 0;
  for (auto x : a) {
    for (auto y : b) {
      ++total;
      hits += (x == y);
    }
  }
  return {hits, total};
}

inline bool brute_is_transversal(const SetFamily& f, const std::vector<Label>& c) {
  if (c.size() != f.size()) return false;
  for (Index i = 0; i < f.size(); ++i) {
    if (std::find(f[i].begin(), f[i].end(), c[i]) == f[i].end()) return false;
    for (Index j = 0; j < i; ++j)
      if (c[i] == c[j]) return false;
  }
  return true;
}

// Exhaustive search over all choice tuples.
inline bool brute_has_transversal(const SetFamily& f) {
  std::vector<Label> choice(f.size());
  std::function<bool(Index)> rec = [&](Index i) -> bool {
    if (i == f.size()) return true;
    for (auto x : f[i]) {
      if (std::find(choice.begin(), choice.begin() + static_cast<std::ptrdiff_t>(i), x) !=
          choice.begin() + static_cast<std::ptrdiff_t>(i))
        continue;
      choice[i] = x;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// Largest matching by trying every edge subset in include/exclude order.
inline std::size_t brute_max_matching(const BipartiteGraph& g) {
  const auto& edges = g.edges();
  std::vector<bool> ua(g.size_a()), ub(g.size_b());
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t size) {
    best = std::max(best, size);
    if (k == edges.size()) return;
    const auto [a, b] = edges[k];
    if (!ua[a] && !ub[b]) {
      ua[a] = ub[b] = true;
      rec(k + 1, size + 1);
      ua[a] = ub[b] = false;
    }
    rec(k + 1, size);
  };
  rec(0, 0);
  return best;
}

// Every 4-cycle a1 b1 a2 b2 with a1 != a2, b1 != b2.
inline bool brute_has_c4(const BipartiteGraph& g) {
  for (std::size_t a1 = 0; a1 < g.size_a(); ++a1)
    for (std::size_t a2 = 0; a2 < g.size_a(); ++a2)
      for (std::size_t b1 = 0; b1 < g.size_b(); ++b1)
        for (std::size_t b2 = 0; b2 < g.size_b(); ++b2)
          if (a1 != a2 && b1 != b2 && g.has_edge(a1, b1) && g.has_edge(a1, b2) &&
              g.has_edge(a2, b1) && g.has_edge(a2, b2))
            return true;
  return false;
}

// Lines of the Fano plane, written out by hand.
inline SetFamily fano_lines() {
  return SetFamily{{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
}

inline BipartiteGraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, j);
  return BipartiteGraph(a, b, e);
}

inline SetFamily random_family(std::mt19937_64& rng, std::size_t n, std::size_t universe,
                               bool allow_empty = true) {
  std::vector<ElementSet> sets(n);
  std::bernoulli_distribution coin(0.4);
  std::uniform_int_distribution<std::size_t> pick(0, universe - 1);
  for (auto& s : sets) {
    for (std::size_t x = 0; x < universe; ++x)
      if (coin(rng)) s.push_back(x);
    if (s.empty() && !allow_empty) s.push_back(pick(rng));
  }
  return SetFamily(std::move(sets));
}

inline BipartiteGraph random_graph(std::mt19937_64& rng, std::size_t a, std::size_t b,
                                   double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return BipartiteGraph(a, b, e);
}

}  // namespace sdr::testing
