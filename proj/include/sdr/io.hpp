#pragma once

// Line-oriented text formats (LF newlines, ASCII digits and single spaces):
//
//   family <n>                 then n lines of strictly ascending labels
//                              (an empty line is an empty set)
//   bipartite <|A|> <|B|> <|E|> then |E| lines "<a> <b>"
//   transversal <n>            then n lines "<index> <element>"
//   matching                   bare lines "<a> <b>"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdr/core.hpp"

namespace sdr {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  return lines;
}

inline std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t lineno) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ') {
      ++pos;
      continue;
    }
    const auto end = line.find(' ', pos);
    const auto token = line.substr(pos, end == std::string_view::npos ? line.size() - pos : end - pos);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError(lineno, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos += token.size();
  }
  return out;
}

// "<keyword> <k numbers>" on line 1.
inline std::vector<std::uint64_t> parse_header(const std::vector<std::string>& lines,
                                               std::string_view keyword, std::size_t count) {
  if (lines.empty()) throw ParseError(1, "missing '" + std::string(keyword) + "' header");
  std::string_view head = lines[0];
  if (head.substr(0, keyword.size()) != keyword ||
      (head.size() > keyword.size() && head[keyword.size()] != ' ')) {
    throw ParseError(1, "expected header '" + std::string(keyword) + "'");
  }
  auto numbers = parse_numbers(head.substr(keyword.size()), 1);
  if (numbers.size() != count) {
    throw ParseError(1, "header '" + std::string(keyword) + "' takes " + std::to_string(count) +
                            " count(s)");
  }
  return numbers;
}

inline void reject_trailing(const std::vector<std::string>& lines, std::size_t used) {
  for (std::size_t k = used; k < lines.size(); ++k) {
    if (!lines[k].empty()) throw ParseError(k + 1, "unexpected content after the last record");
  }
}

inline std::pair<std::uint64_t, std::uint64_t> parse_pair(const std::string& line,
                                                          std::size_t lineno) {
  const auto v = parse_numbers(line, lineno);
  if (v.size() != 2) throw ParseError(lineno, "expected two integers");
  return {v[0], v[1]};
}

}  // namespace detail

inline SetFamily parse_family(std::string_view text) {
  const auto lines = detail::split_lines(text);
  const auto n = detail::parse_header(lines, "family", 1)[0];
  if (lines.size() < n + 1) {
    throw ParseError(lines.size() + 1, "expected " + std::to_string(n) + " set lines, found " +
                                           std::to_string(lines.size() - 1));
  }
  std::vector<ElementSet> sets;
  sets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto s = detail::parse_numbers(lines[i + 1], i + 2);
    for (std::size_t k = 1; k < s.size(); ++k) {
      if (s[k] <= s[k - 1]) throw ParseError(i + 2, "elements must be strictly ascending");
    }
    sets.push_back(std::move(s));
  }
  detail::reject_trailing(lines, n + 1);
  return SetFamily(std::move(sets));
}

inline std::string serialize_family(const SetFamily& family) {
  std::string out = "family " + std::to_string(family.size()) + "\n";
  for (const auto& s : family) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(s[k]);
    }
    out += '\n';
  }
  return out;
}

inline BipartiteGraph parse_graph(std::string_view text) {
  const auto lines = detail::split_lines(text);
  const auto header = detail::parse_header(lines, "bipartite", 3);
  const auto size_a = header[0];
  const auto size_b = header[1];
  const auto count = header[2];
  if (lines.size() < count + 1) {
    throw ParseError(lines.size() + 1, "expected " + std::to_string(count) + " edge lines, found " +
                                           std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto [a, b] = detail::parse_pair(lines[k + 1], k + 2);
    if (a >= size_a || b >= size_b) {
      throw ParseError(k + 2, "edge endpoint out of range");
    }
    edges.emplace_back(a, b);
  }
  // duplicates are reported at their second occurrence
  std::vector<std::pair<Edge, std::size_t>> keyed;
  for (std::size_t k = 0; k < edges.size(); ++k) keyed.emplace_back(edges[k], k);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t k = 1; k < keyed.size(); ++k) {
    if (keyed[k].first == keyed[k - 1].first) throw ParseError(keyed[k].second + 2, "duplicate edge");
  }
  detail::reject_trailing(lines, count + 1);
  return BipartiteGraph(size_a, size_b, std::move(edges));
}

inline std::string serialize_graph(const BipartiteGraph& graph) {
  std::string out = "bipartite " + std::to_string(graph.size_a()) + " " +
                    std::to_string(graph.size_b()) + " " + std::to_string(graph.edge_count()) + "\n";
  for (const auto& [a, b] : graph.edges()) {
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return out;
}

inline Assignment parse_assignment(std::string_view text) {
  const auto lines = detail::split_lines(text);
  const auto n = detail::parse_header(lines, "transversal", 1)[0];
  if (lines.size() < n + 1) {
    throw ParseError(lines.size() + 1, "expected " + std::to_string(n) + " choice lines");
  }
  Assignment a;
  a.choices.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [index, element] = detail::parse_pair(lines[k + 1], k + 2);
    if (index >= n) throw ParseError(k + 2, "index out of range");
    if (seen[index]) throw ParseError(k + 2, "index listed twice");
    seen[index] = true;
    a.choices[index] = element;
  }
  detail::reject_trailing(lines, n + 1);
  return a;
}

inline std::string serialize_assignment(const Assignment& a) {
  std::string out = "transversal " + std::to_string(a.size()) + "\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    out += std::to_string(i) + " " + std::to_string(a[i]) + "\n";
  }
  return out;
}

inline Matching parse_matching(std::string_view text) {
  const auto lines = detail::split_lines(text);
  Matching m;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (lines[k].empty()) continue;
    m.pairs.push_back(detail::parse_pair(lines[k], k + 1));
  }
  return m;
}

inline std::string serialize_matching(const Matching& m) {
  std::string out;
  for (const auto& [a, b] : m.pairs) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

}  // namespace sdr
