#pragma once

// C4-freeness and the degree condition for saturating matchings in
// bipartite graphs without 4-cycles.

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "sdr/core.hpp"
#include "sdr/lll.hpp"

namespace sdr {

// u, v in A and u_prime, v_prime in B with all four edges present.
struct C4Witness {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t u_prime = 0;
  std::size_t v_prime = 0;

  friend bool operator==(const C4Witness&, const C4Witness&) = default;
};

// Scans A-vertex pairs (u < v) in lexicographic order; the first pair with two
// common neighbours yields the witness built from its two smallest ones.
inline std::optional<C4Witness> find_c4(const BipartiteGraph& graph) {
  for (std::size_t u = 0; u < graph.size_a(); ++u) {
    const auto& nu = graph.neighbors(u);
    if (nu.size() < 2) continue;
    for (std::size_t v = u + 1; v < graph.size_a(); ++v) {
      const auto& nv = graph.neighbors(v);
      std::size_t found = 0;
      std::size_t common[2] = {0, 0};
      auto iu = nu.begin();
      auto iv = nv.begin();
      while (iu != nu.end() && iv != nv.end() && found < 2) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          common[found++] = *iu;
          ++iu;
          ++iv;
        }
      }
      if (found == 2) return C4Witness{u, v, common[0], common[1]};
    }
  }
  return std::nullopt;
}

inline bool is_c4_free(const BipartiteGraph& graph) { return !find_c4(graph).has_value(); }

// sqrt(2 e n); comparisons use the squared form instead.
inline double degree_threshold(std::size_t n) {
  return std::sqrt(2.0 * std::numbers::e * static_cast<double>(n));
}

inline bool meets_degree_threshold(std::size_t degree, std::size_t n) {
  const double d = static_cast<double>(degree);
  return le_with_tolerance(2.0 * std::numbers::e * static_cast<double>(n), d * d);
}

struct MatchingConditionReport {
  bool holds = false;
  bool c4_free = false;
  std::optional<C4Witness> c4;
  std::vector<std::size_t> deficient;  // A-vertices below the threshold
  std::size_t n = 0;                   // |A|
  std::size_t min_degree = 0;
  double threshold = 0.0;
  // squared form: lhs = 2 e n, rhs = min_degree^2
  double lhs = 0.0;
  double rhs = 0.0;
};

// Sufficient condition for a matching saturating A: G has no 4-cycle and
// deg(v)^2 >= 2 e |A| for every v in A. Failing it proves nothing.
inline MatchingConditionReport check_matching_condition(const BipartiteGraph& graph) {
  MatchingConditionReport r;
  r.n = graph.size_a();
  r.c4 = find_c4(graph);
  r.c4_free = !r.c4;
  r.threshold = degree_threshold(r.n);
  r.lhs = 2.0 * std::numbers::e * static_cast<double>(r.n);
  for (std::size_t a = 0; a < graph.size_a(); ++a) {
    const auto deg = graph.degree(a);
    if (a == 0 || deg < r.min_degree) r.min_degree = deg;
    if (!meets_degree_threshold(deg, r.n)) r.deficient.push_back(a);
  }
  r.rhs = static_cast<double>(r.min_degree) * static_cast<double>(r.min_degree);
  r.holds = r.c4_free && r.deficient.empty();
  return r;
}

}  // namespace sdr
