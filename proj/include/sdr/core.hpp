#pragma once

// Core value types: indexed set families, assignments, transversals,
// bipartite graphs and matchings, plus the translations between them.
//
// Indices are 0-based throughout. A family is indexed by position, so the
// same set may appear at several indices; a transversal is an injective
// choice function on indices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdr {

using Label = std::uint64_t;
using Index = std::size_t;
using ElementSet = std::vector<Label>;  // sorted, duplicate-free

class SetFamily {
 public:
  SetFamily() = default;

  // Each input set is sorted and de-duplicated.
  explicit SetFamily(std::vector<ElementSet> sets) : sets_(std::move(sets)) {
    for (auto& s : sets_) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
  }
  SetFamily(std::initializer_list<ElementSet> sets)
      : SetFamily(std::vector<ElementSet>(sets)) {}

  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  const ElementSet& operator[](Index i) const { return sets_[i]; }
  const ElementSet& at(Index i) const { return sets_.at(i); }
  const std::vector<ElementSet>& sets() const noexcept { return sets_; }
  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }

  bool contains(Index i, Label x) const {
    return std::binary_search(sets_[i].begin(), sets_[i].end(), x);
  }

  // Sorted union of all sets.
  ElementSet universe() const {
    ElementSet all;
    for (const auto& s : sets_) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
  }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::vector<ElementSet> sets_;
};

inline std::size_t intersection_size(const ElementSet& a, const ElementSet& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

// Tightest size/intersection parameters of a family. For an empty family
// `min_size` is 0 and means "no sets"; `max_intersection` is taken over
// distinct index pairs only and is 0 when n < 2.
struct FamilyStats {
  std::size_t n = 0;
  std::size_t min_size = 0;
  std::size_t max_intersection = 0;
  bool has_empty_set = false;
  std::optional<Index> first_empty;

  friend bool operator==(const FamilyStats&, const FamilyStats&) = default;
};

inline FamilyStats family_stats(const SetFamily& family) {
  FamilyStats stats;
  stats.n = family.size();
  if (family.empty()) return stats;
  stats.min_size = family[0].size();
  for (Index i = 0; i < family.size(); ++i) {
    stats.min_size = std::min(stats.min_size, family[i].size());
    if (family[i].empty() && !stats.has_empty_set) {
      stats.has_empty_set = true;
      stats.first_empty = i;
    }
    for (Index j = i + 1; j < family.size(); ++j) {
      stats.max_intersection =
          std::max(stats.max_intersection, intersection_size(family[i], family[j]));
    }
  }
  return stats;
}

struct Assignment {
  std::vector<Label> choices;

  std::size_t size() const noexcept { return choices.size(); }
  Label operator[](Index i) const { return choices[i]; }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

namespace detail {
// Lexicographically smallest pair (i, j), i < j, with choices[i] == choices[j].
inline std::optional<std::pair<Index, Index>> first_collision(const std::vector<Label>& choices) {
  std::vector<std::pair<Label, Index>> keyed;
  keyed.reserve(choices.size());
  for (Index i = 0; i < choices.size(); ++i) keyed.emplace_back(choices[i], i);
  std::sort(keyed.begin(), keyed.end());
  std::optional<std::pair<Index, Index>> best;
  for (std::size_t k = 0; k + 1 < keyed.size(); ++k) {
    if (keyed[k].first != keyed[k + 1].first) continue;
    // only the first two indices of a label group matter
    if (k > 0 && keyed[k - 1].first == keyed[k].first) continue;
    std::pair<Index, Index> candidate{keyed[k].second, keyed[k + 1].second};
    if (!best || candidate < *best) best = candidate;
  }
  return best;
}
}  // namespace detail

struct TransversalVerdict {
  enum class Kind { valid, not_member, collision };

  Kind kind = Kind::valid;
  Index index = 0;                    // not_member: offending index
  std::pair<Index, Index> pair{0, 0};  // collision: smallest colliding pair

  bool valid() const noexcept { return kind == Kind::valid; }
  explicit operator bool() const noexcept { return valid(); }
};

// Membership is checked first (lowest failing index), then distinctness
// (lexicographically smallest colliding pair).
inline TransversalVerdict validate_transversal(const SetFamily& family,
                                              const Assignment& assignment) {
  if (assignment.size() != family.size()) {
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) +
                                " choices, family has " + std::to_string(family.size()) +
                                " sets");
  }
  TransversalVerdict verdict;
  for (Index i = 0; i < family.size(); ++i) {
    if (!family.contains(i, assignment[i])) {
      verdict.kind = TransversalVerdict::Kind::not_member;
      verdict.index = i;
      return verdict;
    }
  }
  const auto best = detail::first_collision(assignment.choices);
  if (best) {
    verdict.kind = TransversalVerdict::Kind::collision;
    verdict.pair = *best;
  }
  return verdict;
}

inline std::string describe(const TransversalVerdict& v, const Assignment& a) {
  switch (v.kind) {
    case TransversalVerdict::Kind::valid:
      return "valid";
    case TransversalVerdict::Kind::not_member:
      return "element " + std::to_string(a[v.index]) + " not in set " + std::to_string(v.index);
    case TransversalVerdict::Kind::collision:
      return "sets " + std::to_string(v.pair.first) + " and " + std::to_string(v.pair.second) +
             " share element " + std::to_string(a[v.pair.first]);
  }
  return {};
}

// An assignment known to be a transversal of some family. Only obtainable
// through `certify`, so holding one means validation has succeeded.
class Transversal {
 public:
  static std::optional<Transversal> certify(const SetFamily& family, Assignment assignment) {
    if (assignment.size() != family.size() || !validate_transversal(family, assignment)) {
      return std::nullopt;
    }
    return Transversal(std::move(assignment));
  }

  const Assignment& assignment() const noexcept { return assignment_; }
  const std::vector<Label>& choices() const noexcept { return assignment_.choices; }
  std::size_t size() const noexcept { return assignment_.size(); }
  Label operator[](Index i) const { return assignment_[i]; }
  friend bool operator==(const Transversal&, const Transversal&) = default;

 private:
  explicit Transversal(Assignment a) : assignment_(std::move(a)) {}
  Assignment assignment_;
};

using Edge = std::pair<std::size_t, std::size_t>;  // (a in A, b in B)

class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Edges are stored sorted; out-of-range endpoints and duplicates throw.
  BipartiteGraph(std::size_t size_a, std::size_t size_b, std::vector<Edge> edges)
      : size_a_(size_a), size_b_(size_b), edges_(std::move(edges)), adj_a_(size_a) {
    for (const auto& [a, b] : edges_) {
      if (a >= size_a_ || b >= size_b_) {
        throw std::invalid_argument("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") out of range");
      }
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + ", " +
                                  std::to_string(dup->second) + ")");
    }
    for (const auto& [a, b] : edges_) adj_a_[a].push_back(b);
  }

  std::size_t size_a() const noexcept { return size_a_; }
  std::size_t size_b() const noexcept { return size_b_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Sorted B-neighbours of an A-vertex.
  const std::vector<std::size_t>& neighbors(std::size_t a) const { return adj_a_.at(a); }
  std::size_t degree(std::size_t a) const { return adj_a_.at(a).size(); }

  bool has_edge(std::size_t a, std::size_t b) const {
    if (a >= size_a_) return false;
    return std::binary_search(adj_a_[a].begin(), adj_a_[a].end(), b);
  }

  friend bool operator==(const BipartiteGraph& x, const BipartiteGraph& y) {
    return x.size_a_ == y.size_a_ && x.size_b_ == y.size_b_ && x.edges_ == y.edges_;
  }

 private:
  std::size_t size_a_ = 0;
  std::size_t size_b_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_a_;
};

struct Matching {
  std::vector<Edge> pairs;  // sorted by A-vertex

  std::size_t size() const noexcept { return pairs.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

// S_v = neighbours of v, for each v in A in vertex order.
inline SetFamily neighbor_family(const BipartiteGraph& graph) {
  std::vector<ElementSet> sets(graph.size_a());
  for (std::size_t a = 0; a < graph.size_a(); ++a) {
    const auto& nb = graph.neighbors(a);
    sets[a].assign(nb.begin(), nb.end());
  }
  return SetFamily(std::move(sets));
}

inline Matching matching_from_transversal(const BipartiteGraph& graph,
                                          const Transversal& transversal) {
  if (!Transversal::certify(neighbor_family(graph), transversal.assignment())) {
    throw std::invalid_argument("not a transversal of the graph's neighbourhood family");
  }
  Matching m;
  m.pairs.reserve(transversal.size());
  for (Index i = 0; i < transversal.size(); ++i) {
    m.pairs.emplace_back(i, static_cast<std::size_t>(transversal[i]));
  }
  return m;
}

struct MatchingVerdict {
  enum class Kind { valid, not_an_edge, a_reused, b_reused, not_saturating };

  Kind kind = Kind::valid;
  Edge offending{0, 0};

  bool valid() const noexcept { return kind == Kind::valid; }
  explicit operator bool() const noexcept { return valid(); }
};

inline MatchingVerdict validate_matching(const BipartiteGraph& graph, const Matching& matching,
                                         bool require_saturate_a) {
  MatchingVerdict v;
  std::vector<bool> used_a(graph.size_a(), false);
  std::vector<bool> used_b(graph.size_b(), false);
  for (const auto& e : matching.pairs) {
    const auto [a, b] = e;
    if (!graph.has_edge(a, b)) {
      v = {MatchingVerdict::Kind::not_an_edge, e};
      return v;
    }
    if (used_a[a]) {
      v = {MatchingVerdict::Kind::a_reused, e};
      return v;
    }
    if (used_b[b]) {
      v = {MatchingVerdict::Kind::b_reused, e};
      return v;
    }
    used_a[a] = used_b[b] = true;
  }
  if (require_saturate_a && matching.size() != graph.size_a()) {
    v.kind = MatchingVerdict::Kind::not_saturating;
  }
  return v;
}

inline std::string describe(const MatchingVerdict& v) {
  const auto edge = "(" + std::to_string(v.offending.first) + ", " +
                    std::to_string(v.offending.second) + ")";
  switch (v.kind) {
    case MatchingVerdict::Kind::valid: return "valid";
    case MatchingVerdict::Kind::not_an_edge: return "pair " + edge + " is not an edge";
    case MatchingVerdict::Kind::a_reused: return "A-vertex reused at " + edge;
    case MatchingVerdict::Kind::b_reused: return "B-vertex reused at " + edge;
    case MatchingVerdict::Kind::not_saturating: return "matching does not saturate A";
  }
  return {};
}

}  // namespace sdr
