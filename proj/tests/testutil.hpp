#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oct/bipartite.hpp"
#include "oct/graph.hpp"

namespace testutil {

inline oct::Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return oct::Graph(n, edges);
}

inline oct::Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return oct::Graph(n, edges);
}

inline oct::Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return oct::Graph(n, edges);
}

inline oct::Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return oct::Graph(a + b, edges);
}

// outer 5-cycle 0..4, spokes to 5..9, inner pentagram
inline oct::Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return oct::Graph(10, edges);
}

inline oct::Graph two_triangles() {
  return oct::Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

// ground truth by trying all 2^n colorings; n must stay small
inline bool exhaustive_bipartite(const oct::Graph& g) {
  const int n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("graph too large for exhaustive coloring");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool proper = true;
    for (const auto& [u, v] : g.edges()) {
      if (((mask >> u) & 1u) == ((mask >> v) & 1u)) {
        proper = false;
        break;
      }
    }
    if (proper) return true;
  }
  return g.edge_count() == 0;
}

namespace detail {
inline int brute_matching_rec(const oct::Graph& g, std::size_t edge_idx, std::uint64_t used) {
  if (edge_idx == g.edges().size()) return 0;
  const auto& [u, v] = g.edges()[edge_idx];
  int best = brute_matching_rec(g, edge_idx + 1, used);
  if (!((used >> u) & 1u) && !((used >> v) & 1u)) {
    const int take =
        1 + brute_matching_rec(g, edge_idx + 1, used | (std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    if (take > best) best = take;
  }
  return best;
}
}  // namespace detail

// exhaustive over edge subsets; fine for the small graphs used in tests
inline int brute_max_matching_size(const oct::Graph& g) {
  if (g.vertex_count() > 63) throw std::invalid_argument("graph too large");
  return detail::brute_matching_rec(g, 0, 0);
}

inline bool matching_valid(const oct::Graph& g, const oct::Matching& m) {
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& [u, v] : m.pairs) {
    if (!g.has_edge(u, v)) return false;
    if (++degree[u] > 1 || ++degree[v] > 1) return false;
  }
  return true;
}

struct ProcessResult {
  int exit_code = -1;
  std::string output;
};

// runs a command capturing stdout; stderr is left alone
inline ProcessResult run_process(const std::string& command) {
  ProcessResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("octsolve_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

  std::string write_file(const std::string& name, const std::string& contents) const {
    const auto full = path_ / name;
    std::ofstream out(full, std::ios::binary);
    out << contents;
    out.close();
    return full.string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace testutil
