#pragma once

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace oct {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parsed instance. Internal ids are dense and 0-based; `labels` maps them
/// back to the input naming: 1-based numbers in DIMACS mode, 0-based numbers
/// in bare mode, or whatever an explicit "l" record assigned.
struct Instance {
  Graph graph;
  std::vector<std::string> labels;

  std::optional<int> find_label(const std::string& name) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline bool parse_int(const std::string& tok, long long& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

}  // namespace detail

/// Accepts two formats.
///
/// DIMACS-style: optional "c" comment lines, one "p edge <n> <m>" header,
/// then m lines "e <u> <v>" with 1-based endpoints; optional "l <v> <name>"
/// records attach labels. The declared edge count must match the number of
/// edge records (duplicates collapse only afterwards).
///
/// Bare list: one "u v" pair per line with 0-based endpoints; the vertex
/// count is one past the largest endpoint.
inline Instance parse_instance(std::string_view text) {
  const auto lines = detail::split_lines(text);

  bool dimacs = false;
  for (const auto& line : lines) {
    const auto toks = detail::split_tokens(line);
    if (toks.empty()) continue;
    const char head = toks[0][0];
    dimacs = head == 'c' || head == 'p' || head == 'e' || head == 'l';
    break;
  }

  Instance inst;
  std::vector<std::pair<int, int>> edges;

  if (dimacs) {
    long long n = -1;
    long long declared = -1;
    std::vector<std::pair<int, std::string>> label_records;  // (vertex, name)
    std::vector<int> label_line;

    for (std::size_t li = 0; li < lines.size(); ++li) {
      const int line_no = static_cast<int>(li) + 1;
      const auto toks = detail::split_tokens(lines[li]);
      if (toks.empty()) continue;
      if (toks[0] == "c") continue;
      if (toks[0] == "p") {
        if (n != -1) throw ParseError(line_no, "duplicate 'p' header");
        long long m = -1;
        if (toks.size() != 4 || toks[1] != "edge" || !detail::parse_int(toks[2], n) ||
            !detail::parse_int(toks[3], m) || n < 0 || m < 0)
          throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
        declared = m;
      } else if (toks[0] == "e") {
        if (n == -1) throw ParseError(line_no, "edge record before 'p edge' header");
        long long u = 0;
        long long v = 0;
        if (toks.size() != 3 || !detail::parse_int(toks[1], u) || !detail::parse_int(toks[2], v))
          throw ParseError(line_no, "malformed edge record, expected 'e <u> <v>'");
        if (u < 1 || v < 1 || u > n || v > n)
          throw ParseError(line_no, "vertex out of range [1," + std::to_string(n) + "]");
        if (u == v) throw ParseError(line_no, "self-loop");
        edges.emplace_back(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
        if (static_cast<long long>(edges.size()) > declared)
          throw ParseError(line_no, "more edge records than the declared " +
                                        std::to_string(declared));
      } else if (toks[0] == "l") {
        if (n == -1) throw ParseError(line_no, "label record before 'p edge' header");
        long long v = 0;
        if (toks.size() != 3 || !detail::parse_int(toks[1], v))
          throw ParseError(line_no, "malformed label record, expected 'l <v> <name>'");
        if (v < 1 || v > n)
          throw ParseError(line_no, "vertex out of range [1," + std::to_string(n) + "]");
        label_records.emplace_back(static_cast<int>(v) - 1, toks[2]);
        label_line.push_back(line_no);
      } else {
        throw ParseError(line_no, "unrecognized record '" + toks[0] + "'");
      }
    }
    if (n == -1)
      throw ParseError(static_cast<int>(lines.size()), "missing 'p edge' header");
    if (static_cast<long long>(edges.size()) != declared)
      throw ParseError(static_cast<int>(lines.size()),
                       "edge count mismatch: header declares " + std::to_string(declared) +
                           ", found " + std::to_string(edges.size()));

    inst.labels.resize(static_cast<std::size_t>(n));
    for (long long v = 0; v < n; ++v) inst.labels[v] = std::to_string(v + 1);
    for (std::size_t r = 0; r < label_records.size(); ++r) {
      const auto& [v, name] = label_records[r];
      for (long long other = 0; other < n; ++other)
        if (other != v && inst.labels[other] == name)
          throw ParseError(label_line[r], "duplicate label '" + name + "'");
      inst.labels[v] = name;
    }
    inst.graph = Graph(static_cast<int>(n), edges);
  } else {
    int max_vertex = -1;
    for (std::size_t li = 0; li < lines.size(); ++li) {
      const int line_no = static_cast<int>(li) + 1;
      const auto toks = detail::split_tokens(lines[li]);
      if (toks.empty()) continue;
      long long u = 0;
      long long v = 0;
      if (toks.size() != 2 || !detail::parse_int(toks[0], u) || !detail::parse_int(toks[1], v))
        throw ParseError(line_no, "expected one '<u> <v>' pair per line");
      if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex id");
      if (u == v) throw ParseError(line_no, "self-loop");
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
    }
    const int n = max_vertex + 1;
    inst.labels.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) inst.labels[v] = std::to_string(v);
    inst.graph = Graph(n, edges);
  }
  return inst;
}

inline std::string render_instance(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

inline std::string render_instance(const Graph& g, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v)
    if (labels[v] != std::to_string(v + 1)) os << "l " << v + 1 << ' ' << labels[v] << '\n';
  for (const auto& [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

}  // namespace oct
