#pragma once

// Seeded instance generators: bounded-intersection families, projective
// plane incidence graphs over Z_q, and threshold instances cut from them.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdr/core.hpp"
#include "sdr/graph.hpp"
#include "sdr/solver.hpp"

namespace sdr {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kFamilyRetryLimit = 10'000;  // redraws per set

// Draws n sets of exactly l elements from {0, ..., universe-1}; a candidate
// set meeting an earlier one in more than m elements is redrawn.
inline SetFamily gen_family(std::size_t n, std::size_t l, std::size_t m, std::size_t universe,
                            std::uint64_t seed) {
  if (universe < l) {
    throw GenerationError("universe " + std::to_string(universe) + " smaller than set size " +
                          std::to_string(l));
  }
  if (n >= 2 && m == 0 && n * l > universe) {
    throw GenerationError("disjoint sets need universe >= n*l = " + std::to_string(n * l));
  }
  if (n >= 2 && m == 1 && n * l * (l - (l > 0 ? 1 : 0)) > universe * (universe - 1)) {
    throw GenerationError("pair-counting bound n*l(l-1)/2 <= universe(universe-1)/2 violated");
  }
  Rng rng(seed);
  std::vector<Label> pool(universe);
  std::vector<ElementSet> sets;
  sets.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kFamilyRetryLimit && !placed; ++attempt) {
      // partial Fisher-Yates for a uniform l-subset
      for (std::size_t t = 0; t < universe; ++t) pool[t] = t;
      for (std::size_t t = 0; t < l; ++t) {
        const auto r = t + rng.below(universe - t);
        std::swap(pool[t], pool[r]);
      }
      ElementSet candidate(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(l));
      std::sort(candidate.begin(), candidate.end());
      placed = true;
      for (const auto& s : sets) {
        if (intersection_size(s, candidate) > m) {
          placed = false;
          break;
        }
      }
      if (placed) sets.push_back(std::move(candidate));
    }
    if (!placed) {
      throw GenerationError("retry limit reached placing set " + std::to_string(k) +
                            " under intersection cap " + std::to_string(m));
    }
  }
  return SetFamily(std::move(sets));
}

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t f = 2; f * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

class PlaneOrder {
 public:
  explicit PlaneOrder(std::uint64_t q) : q_(q) {
    if (!is_prime(q)) {
      throw std::domain_error("plane order " + std::to_string(q) +
                              " is not prime (prime-power fields unsupported)");
    }
  }
  std::uint64_t value() const noexcept { return q_; }
  std::size_t points() const noexcept { return q_ * q_ + q_ + 1; }

 private:
  std::uint64_t q_;
};

using Homogeneous = std::array<std::uint64_t, 3>;

// Normalised homogeneous triples over Z_q (first nonzero coordinate 1), in
// lexicographic order.
inline std::vector<Homogeneous> projective_points(const PlaneOrder& order) {
  const auto q = order.value();
  std::vector<Homogeneous> pts;
  pts.reserve(order.points());
  pts.push_back({0, 0, 1});
  for (std::uint64_t z = 0; z < q; ++z) pts.push_back({0, 1, z});
  for (std::uint64_t y = 0; y < q; ++y)
    for (std::uint64_t z = 0; z < q; ++z) pts.push_back({1, y, z});
  return pts;
}

// A = points, B = lines; both indexed by the same triple order.
inline BipartiteGraph gen_plane_incidence(const PlaneOrder& order) {
  const auto q = order.value();
  const auto pts = projective_points(order);
  std::vector<Edge> edges;
  edges.reserve(pts.size() * (q + 1));
  for (std::size_t p = 0; p < pts.size(); ++p) {
    for (std::size_t l = 0; l < pts.size(); ++l) {
      const auto dot = pts[p][0] * pts[l][0] + pts[p][1] * pts[l][1] + pts[p][2] * pts[l][2];
      if (dot % q == 0) edges.emplace_back(p, l);
    }
  }
  return BipartiteGraph(pts.size(), pts.size(), std::move(edges));
}

inline std::size_t max_threshold_points(const PlaneOrder& order) {
  const double deg = static_cast<double>(order.value() + 1);
  auto n = static_cast<std::size_t>(std::floor(deg * deg / (2.0 * std::numbers::e)));
  return std::min(n, order.points());
}

// First n points of PG(2, q) against all lines; every point keeps degree q+1,
// so the degree condition holds whenever (q+1)^2 >= 2 e n.
inline BipartiteGraph gen_threshold_instance(const PlaneOrder& order, std::size_t n) {
  if (n > order.points() || !meets_degree_threshold(order.value() + 1, n)) {
    throw std::domain_error("n = " + std::to_string(n) + " infeasible for q = " +
                            std::to_string(order.value()) + "; largest feasible n is " +
                            std::to_string(max_threshold_points(order)));
  }
  const auto full = gen_plane_incidence(order);
  std::vector<Edge> edges;
  for (const auto& e : full.edges())
    if (e.first < n) edges.push_back(e);
  return BipartiteGraph(n, full.size_b(), std::move(edges));
}

}  // namespace sdr
