#pragma once

// Command-line front end. Results go to `out` as "key: value" lines followed
// by an optional payload; diagnostics go to `err`.
//
// Exit codes: 0 condition holds / object found, 1 condition fails / not
// found / exhausted, 2 input or usage error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdr/core.hpp"
#include "sdr/exact.hpp"
#include "sdr/generators.hpp"
#include "sdr/graph.hpp"
#include "sdr/io.hpp"
#include "sdr/lll.hpp"
#include "sdr/solver.hpp"

namespace sdr::cli {

enum ExitStatus : int { kHolds = 0, kFails = 1, kUsage = 2 };

namespace detail {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string real(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

template <typename Range>
std::string joined(const Range& r) {
  std::string out;
  for (const auto& v : r) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

inline const char* verdict(bool holds) { return holds ? "holds" : "fails"; }

struct Options {
  std::string kind;
  std::string file;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_resamples;
  bool exact = false;
  std::string assignment_file;
  std::string matching_file;
  bool saturate_a = false;
  std::size_t n = 0, l = 0, m = 0, universe = 0, q = 0, trials = 0;
};

inline int check_family(const Options& o, std::ostream& out) {
  const auto family = parse_family(read_file(o.file));
  const auto stats = family_stats(family);
  out << "n: " << stats.n << "\n";
  out << "l: " << stats.min_size << "\n";
  out << "m: " << stats.max_intersection << "\n";
  if (stats.has_empty_set) {
    out << "empty_set: " << *stats.first_empty << "\n";
    out << "theorem2: fails\n";
    return kFails;
  }
  const auto r = check_intersection_condition(stats);
  out << "lhs: " << real(r.lhs) << "\n";
  out << "rhs: " << real(r.rhs) << "\n";
  out << "margin: " << real(r.margin) << "\n";
  if (stats.n >= 2) {
    const double l = static_cast<double>(stats.min_size);
    const double p = static_cast<double>(stats.max_intersection) / (l * l);
    const auto sym = check_symmetric_corollary(std::min(p, 1.0), 2 * stats.n - 4);
    out << "p: " << real(sym.p) << "\n";
    out << "d: " << sym.d << "\n";
    out << "symmetric_lll: " << verdict(sym.holds) << "\n";
  }
  out << "theorem2: " << verdict(r.holds) << "\n";
  return r.holds ? kHolds : kFails;
}

inline int check_graph(const Options& o, std::ostream& out) {
  const auto graph = parse_graph(read_file(o.file));
  const auto r = check_matching_condition(graph);
  out << "size_a: " << graph.size_a() << "\n";
  out << "size_b: " << graph.size_b() << "\n";
  out << "edges: " << graph.edge_count() << "\n";
  out << "c4_free: " << (r.c4_free ? "yes" : "no") << "\n";
  if (r.c4) {
    out << "c4_witness: " << r.c4->u << " " << r.c4->v << " " << r.c4->u_prime << " "
        << r.c4->v_prime << "\n";
  }
  out << "min_degree: " << r.min_degree << "\n";
  out << "threshold: " << real(r.threshold) << "\n";
  out << "deficient_vertices: " << joined(r.deficient) << "\n";
  out << "theorem3: " << verdict(r.holds) << "\n";
  return r.holds ? kHolds : kFails;
}

// Either a transversal or nothing, plus the resample report lines.
inline std::optional<Transversal> solve_family_core(const SetFamily& family, const Options& o,
                                                    std::ostream& out) {
  out << "seed: " << o.seed << "\n";
  out << "method: " << (o.exact ? "exact" : "resample") << "\n";
  const auto stats = family_stats(family);
  if (o.exact) {
    auto t = has_transversal_exact(family);
    if (!t && family.size() <= kDefaultHallLimit) {
      if (auto deficient = hall_violating_subfamily(family)) {
        out << "deficient_subfamily: " << joined(*deficient) << "\n";
      }
    }
    return t;
  }
  const auto cap = o.max_resamples.value_or(default_rounds_cap(family.size()));
  out << "max_resamples: " << cap << "\n";
  if (stats.has_empty_set) {
    out << "empty_set: " << *stats.first_empty << "\n";
    return std::nullopt;
  }
  auto outcome = find_transversal_mt(family, o.seed, cap);
  out << "resamples: " << outcome.resample_count << "\n";
  return outcome.transversal;
}

inline const char* missing_word(const Options& o) { return o.exact ? "not found" : "exhausted"; }

inline int solve_family(const Options& o, std::ostream& out) {
  const auto family = parse_family(read_file(o.file));
  const auto t = solve_family_core(family, o, out);
  if (!t) {
    out << "result: " << missing_word(o) << "\n";
    return kFails;
  }
  out << "result: found\n";
  out << serialize_assignment(t->assignment());
  return kHolds;
}

inline int solve_graph(const Options& o, std::ostream& out) {
  const auto graph = parse_graph(read_file(o.file));
  const auto t = solve_family_core(neighbor_family(graph), o, out);
  if (!t) {
    if (o.exact) out << "maximum_matching_size: " << max_matching(graph).size() << "\n";
    out << "result: " << missing_word(o) << "\n";
    return kFails;
  }
  const auto matching = matching_from_transversal(graph, *t);
  out << "matching_size: " << matching.size() << "\n";
  out << "result: found\n";
  out << serialize_matching(matching);
  return kHolds;
}

inline int verify_family(const Options& o, std::ostream& out) {
  if (o.assignment_file.empty()) throw InputError("verify family requires --assignment");
  const auto family = parse_family(read_file(o.file));
  const auto a = parse_assignment(read_file(o.assignment_file));
  if (a.size() != family.size()) {
    throw InputError("assignment has " + std::to_string(a.size()) + " choices, family has " +
                     std::to_string(family.size()) + " sets");
  }
  const auto v = validate_transversal(family, a);
  out << "verdict: " << (v ? "valid" : "invalid") << "\n";
  if (!v) out << "violation: " << describe(v, a) << "\n";
  return v ? kHolds : kFails;
}

inline int verify_graph(const Options& o, std::ostream& out) {
  if (o.matching_file.empty()) throw InputError("verify graph requires --matching");
  const auto graph = parse_graph(read_file(o.file));
  const auto m = parse_matching(read_file(o.matching_file));
  const auto v = validate_matching(graph, m, o.saturate_a);
  out << "matching_size: " << m.size() << "\n";
  out << "verdict: " << (v ? "valid" : "invalid") << "\n";
  if (!v) out << "violation: " << describe(v) << "\n";
  return v ? kHolds : kFails;
}

inline int gen(const Options& o, std::ostream& out) {
  if (o.kind == "family") {
    out << serialize_family(gen_family(o.n, o.l, o.m, o.universe, o.seed));
  } else if (o.kind == "plane") {
    out << serialize_graph(gen_plane_incidence(PlaneOrder(o.q)));
  } else {
    out << serialize_graph(gen_threshold_instance(PlaneOrder(o.q), o.n));
  }
  return kHolds;
}

inline int bench(const Options& o, std::ostream& out) {
  const auto cap = o.max_resamples.value_or(default_rounds_cap(o.n));
  out << "seed: " << o.seed << "\n";
  out << "trials: " << o.trials << "\n";
  out << "max_resamples: " << cap << "\n";
  out << "trial resamples outcome\n";
  std::size_t found = 0;
  std::size_t total = 0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto trial_seed = derive_seed(o.seed, t);
    const auto family = gen_family(o.n, o.l, o.m, o.universe, trial_seed);
    const auto outcome = find_transversal_mt(family, derive_seed(trial_seed, 1), cap);
    found += outcome.found();
    total += outcome.resample_count;
    out << t << " " << outcome.resample_count << " " << (outcome.found() ? "found" : "exhausted")
        << "\n";
  }
  const double trials = static_cast<double>(o.trials);
  out << "success_rate: " << real(o.trials ? static_cast<double>(found) / trials : 1.0) << "\n";
  out << "mean_resamples: " << real(o.trials ? static_cast<double>(total) / trials : 0.0) << "\n";
  const bool all = found == o.trials;
  out << "result: " << (all ? "found" : "exhausted") << "\n";
  return all ? kHolds : kFails;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Transversals of set families and saturating matchings via the local lemma",
               "sdr"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "evaluate the sufficient condition");
  check->add_option("kind", o.kind)->required()->check(CLI::IsMember({"family", "graph"}));
  check->add_option("file", o.file)->required();

  auto* solve = app.add_subcommand("solve", "find a transversal or saturating matching");
  solve->add_option("kind", o.kind)->required()->check(CLI::IsMember({"family", "graph"}));
  solve->add_option("file", o.file)->required();
  solve->add_option("--seed", o.seed, "RNG seed (default 0)");
  solve->add_option("--max-resamples", o.max_resamples, "resample cap (default 10000 + 100 n^2)");
  solve->add_flag("--exact", o.exact, "use maximum matching instead of resampling");

  auto* verify = app.add_subcommand("verify", "validate a transversal or matching");
  verify->add_option("kind", o.kind)->required()->check(CLI::IsMember({"family", "graph"}));
  verify->add_option("file", o.file)->required();
  verify->add_option("--assignment", o.assignment_file, "transversal file");
  verify->add_option("--matching", o.matching_file, "matching file");
  verify->add_flag("--saturate-a", o.saturate_a, "require every A-vertex to be matched");

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"family", "plane", "theorem3"}));
  gen->add_option("--n", o.n, "number of sets / A-vertices");
  gen->add_option("--l", o.l, "set size");
  gen->add_option("--m", o.m, "pairwise intersection cap");
  gen->add_option("--universe", o.universe, "universe size");
  gen->add_option("--q", o.q, "prime plane order");
  gen->add_option("--seed", o.seed, "RNG seed (default 0)");

  auto* bench = app.add_subcommand("bench", "resampling success over generated families");
  bench->add_option("--trials", o.trials)->required();
  bench->add_option("--n", o.n)->required();
  bench->add_option("--l", o.l)->required();
  bench->add_option("--m", o.m)->required();
  bench->add_option("--universe", o.universe)->required();
  bench->add_option("--seed", o.seed, "master seed (default 0)");
  bench->add_option("--max-resamples", o.max_resamples);

  std::vector<const char*> argv;
  argv.push_back("sdr");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (check->parsed()) return o.kind == "family" ? detail::check_family(o, out)
                                                   : detail::check_graph(o, out);
    if (solve->parsed()) return o.kind == "family" ? detail::solve_family(o, out)
                                                   : detail::solve_graph(o, out);
    if (verify->parsed()) return o.kind == "family" ? detail::verify_family(o, out)
                                                    : detail::verify_graph(o, out);
    if (gen->parsed()) return detail::gen(o, out);
    if (bench->parsed()) return detail::bench(o, out);
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << "\n";
    return kFails;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sdr::cli
