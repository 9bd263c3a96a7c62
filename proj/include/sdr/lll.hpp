#pragma once

// Local-lemma condition checking for collision events E_ij = {X_i = X_j},
// where X_i is drawn uniformly from S_i.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdr/core.hpp"

namespace sdr {

// Relative tie tolerance shared by every real-valued condition; ties resolve
// to "holds".
inline constexpr double kTieTolerance = 1e-12;

inline bool le_with_tolerance(double lhs, double rhs) {
  return lhs <= rhs + kTieTolerance * std::max(std::abs(lhs), std::abs(rhs));
}

struct Probability {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Probability reduced(std::uint64_t num, std::uint64_t den) {
    if (num == 0) return {0, 1};
    const auto g = std::gcd(num, den);
    return {num / g, den / g};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Probability&, const Probability&) = default;
};

// P(X_i = X_j) = |S_i ∩ S_j| / (|S_i| |S_j|), in lowest terms.
inline Probability pair_event_probability(const SetFamily& family, Index i, Index j) {
  if (i == j) throw std::invalid_argument("collision event needs two distinct indices");
  if (family.at(i).empty() || family.at(j).empty()) {
    throw std::domain_error("set " + std::to_string(family[i].empty() ? i : j) +
                            " is empty; no uniform choice exists");
  }
  return Probability::reduced(intersection_size(family[i], family[j]),
                              static_cast<std::uint64_t>(family[i].size()) * family[j].size());
}

// Symmetric dependency graph over events. For a family of n sets the events
// are the pairs {i, j}, i < j, and two events are adjacent iff they share an
// index.
class DependencyDigraph {
 public:
  DependencyDigraph() = default;
  DependencyDigraph(std::vector<std::vector<std::size_t>> adjacency,
                    std::vector<std::pair<Index, Index>> pairs)
      : adjacency_(std::move(adjacency)), pairs_(std::move(pairs)) {}

  std::size_t event_count() const noexcept { return adjacency_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t event) const {
    return adjacency_.at(event);
  }
  const std::pair<Index, Index>& event_pair(std::size_t event) const { return pairs_.at(event); }

  bool adjacent(std::size_t u, std::size_t v) const {
    const auto& nb = adjacency_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Event id of {i, j} (i < j) in lexicographic pair order.
  static std::size_t pair_id(std::size_t n, Index i, Index j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<Index, Index>> pairs_;
};

inline DependencyDigraph build_dependency_digraph(std::size_t n) {
  if (n < 2) throw std::domain_error("dependency digraph needs n >= 2, got " + std::to_string(n));
  std::vector<std::pair<Index, Index>> pairs;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<std::size_t>> adjacency(pairs.size());
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    const auto [i, j] = pairs[e];
    auto& nb = adjacency[e];
    for (Index k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      nb.push_back(DependencyDigraph::pair_id(n, std::min(i, k), std::max(i, k)));
      nb.push_back(DependencyDigraph::pair_id(n, std::min(j, k), std::max(j, k)));
    }
    std::sort(nb.begin(), nb.end());
  }
  return DependencyDigraph(std::move(adjacency), std::move(pairs));
}

// lhs <= rhs verdict with the inputs that produced it.
struct ConditionReport {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs

  // echoed inputs; unused fields stay zero
  std::size_t n = 0;
  double l = 0.0;
  std::size_t m = 0;
  double p = 0.0;
  std::size_t d = 0;

  static ConditionReport compare(double lhs, double rhs) {
    ConditionReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.holds = le_with_tolerance(lhs, rhs);
    return r;
  }
};

// Symmetric local lemma: holds iff e p (d + 1) <= 1.
inline ConditionReport check_symmetric_corollary(double p, std::size_t d) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("event probability must lie in [0, 1]");
  }
  auto r = ConditionReport::compare(std::numbers::e * p * static_cast<double>(d + 1), 1.0);
  r.p = p;
  r.d = d;
  return r;
}

struct LllCertificate {
  std::vector<double> probabilities;  // p_i in [0, 1]
  std::vector<double> weights;        // x_i in [0, 1)
  DependencyDigraph digraph;

  void check_well_formed() const {
    const auto k = digraph.event_count();
    if (probabilities.size() != k || weights.size() != k) {
      throw std::invalid_argument("certificate needs one probability and one weight per event");
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (!(probabilities[i] >= 0.0 && probabilities[i] <= 1.0))
        throw std::domain_error("probability of event " + std::to_string(i) + " outside [0, 1]");
      if (!(weights[i] >= 0.0 && weights[i] < 1.0))
        throw std::domain_error("weight of event " + std::to_string(i) + " outside [0, 1)");
    }
  }
};

struct LllVerdict {
  bool holds = true;
  double min_slack = 0.0;  // min_i x_i prod(1 - x_j) - p_i
  std::size_t worst_event = 0;
  double avoidance_lower_bound = 1.0;  // prod_i (1 - x_i)
};

// General local lemma: every event needs p_i <= x_i * prod_{j ~ i} (1 - x_j).
inline LllVerdict check_general_lll(const LllCertificate& cert) {
  cert.check_well_formed();
  LllVerdict v;
  const auto k = cert.digraph.event_count();
  for (std::size_t i = 0; i < k; ++i) {
    double bound = cert.weights[i];
    for (auto j : cert.digraph.neighbors(i)) bound *= 1.0 - cert.weights[j];
    const double slack = bound - cert.probabilities[i];
    if (i == 0 || slack < v.min_slack) {
      v.min_slack = slack;
      v.worst_event = i;
    }
    if (!le_with_tolerance(cert.probabilities[i], bound)) v.holds = false;
    v.avoidance_lower_bound *= 1.0 - cert.weights[i];
  }
  return v;
}

// Uniform certificate for the n-set collision events: every event gets
// probability p and weight 1/(d+1), d = 2n-4. With no neighbours (n = 2) the
// weight 1/(d+1) = 1 is not admissible and 1/e is used instead.
inline LllCertificate symmetric_collision_certificate(std::size_t n, double p) {
  LllCertificate cert;
  cert.digraph = build_dependency_digraph(n);
  const std::size_t d = 2 * n - 4;
  const double x = d == 0 ? 1.0 / std::numbers::e : 1.0 / static_cast<double>(d + 1);
  cert.probabilities.assign(cert.digraph.event_count(), p);
  cert.weights.assign(cert.digraph.event_count(), x);
  return cert;
}

// Intersection condition for a family of n nonempty sets with sizes >= l and
// pairwise intersections <= m: e m (2n - 3) <= l^2. Takes l^2 directly so
// callers with a non-square bound need no square root. n = 0 and n = 1 hold.
inline ConditionReport check_intersection_condition(std::size_t n, double l_squared,
                                                    std::size_t m) {
  ConditionReport r;
  if (n >= 2) {
    r = ConditionReport::compare(
        std::numbers::e * static_cast<double>(m) * static_cast<double>(2 * n - 3), l_squared);
  } else {
    r = ConditionReport::compare(0.0, l_squared);
    r.holds = true;
  }
  r.n = n;
  r.l = std::sqrt(l_squared);
  r.m = m;
  return r;
}

inline ConditionReport check_intersection_condition(const FamilyStats& stats) {
  if (stats.has_empty_set) {
    throw std::domain_error("set " + std::to_string(stats.first_empty.value_or(0)) +
                            " is empty; no transversal exists");
  }
  const double l = static_cast<double>(stats.min_size);
  auto r = check_intersection_condition(stats.n, l * l, stats.max_intersection);
  r.l = l;
  return r;
}

}  // namespace sdr
