#pragma once

// Resampling search for transversals: draw X_i uniformly from S_i, and while
// some collision X_i = X_j remains, redraw both variables of the
// lexicographically smallest colliding pair.

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdr/core.hpp"

namespace sdr {

// splitmix64 finaliser; used to spread seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-trial seed as a pure function of (master seed, trial index).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial) noexcept {
  return mix64(mix64(master) ^ trial);
}

// mt19937_64 seeded with mix64(seed). Uniform draws use rejection sampling,
// so they carry no modulo bias.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  // Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

namespace detail {
inline void require_nonempty(const SetFamily& family) {
  for (Index i = 0; i < family.size(); ++i) {
    if (family[i].empty()) {
      throw std::domain_error("set " + std::to_string(i) + " is empty; nothing to sample");
    }
  }
}

inline Label draw(const ElementSet& s, Rng& rng) { return s[rng.below(s.size())]; }

}  // namespace detail

inline Assignment sample_tuple(const SetFamily& family, Rng& rng) {
  detail::require_nonempty(family);
  Assignment a;
  a.choices.reserve(family.size());
  for (const auto& s : family) a.choices.push_back(detail::draw(s, rng));
  return a;
}

// All colliding pairs (i, j), i < j, in lexicographic order.
inline std::vector<std::pair<Index, Index>> violated_events(const SetFamily& family,
                                                            const Assignment& assignment) {
  if (assignment.size() != family.size()) {
    throw std::invalid_argument("assignment length does not match family size");
  }
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < assignment.size(); ++i)
    for (Index j = i + 1; j < assignment.size(); ++j)
      if (assignment[i] == assignment[j]) out.emplace_back(i, j);
  return out;
}

inline std::size_t default_rounds_cap(std::size_t n) { return 10'000 + 100 * n * n; }

struct SolveOutcome {
  std::optional<Transversal> transversal;  // empty means exhausted
  std::size_t resample_count = 0;
  std::size_t rounds_cap = 0;
  std::uint64_t seed = 0;

  bool found() const noexcept { return transversal.has_value(); }
  friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;
};

inline SolveOutcome find_transversal_mt(const SetFamily& family, std::uint64_t seed,
                                        std::size_t rounds_cap) {
  detail::require_nonempty(family);
  Rng rng(seed);
  SolveOutcome out;
  out.rounds_cap = rounds_cap;
  out.seed = seed;
  Assignment a = sample_tuple(family, rng);
  auto bad = detail::first_collision(a.choices);
  while (bad && out.resample_count < rounds_cap) {
    const auto [i, j] = *bad;
    a.choices[i] = detail::draw(family[i], rng);
    a.choices[j] = detail::draw(family[j], rng);
    ++out.resample_count;
    bad = detail::first_collision(a.choices);
  }
  if (!bad) out.transversal = Transversal::certify(family, std::move(a));
  return out;
}

inline SolveOutcome find_transversal_mt(const SetFamily& family, std::uint64_t seed) {
  return find_transversal_mt(family, seed, default_rounds_cap(family.size()));
}

}  // namespace sdr
