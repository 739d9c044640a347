#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace oct {

/// Set of vertex-disjoint edges, stored as normalized (min,max) pairs.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
  int size() const { return static_cast<int>(pairs.size()); }
};

struct VertexCover {
  VertexSet members;
};

namespace detail {

/// Hopcroft-Karp over a fixed two-sided graph, reusable across runs on
/// vertex-induced subsets (the `active` mask). A warm-start matching can be
/// supplied to cut the number of augmentation phases. All scans run in
/// ascending vertex order, so results are deterministic.
class HopcroftKarp {
 public:
  HopcroftKarp(int n, const std::vector<std::pair<int, int>>& edges,
               std::vector<std::uint8_t> is_right)
      : n_(n), is_right_(std::move(is_right)), mate_(n, -1), dist_(n, kInf), row_(n + 1, 0) {
    for (const auto& [a, b] : edges) {
      if (is_right_[a] == is_right_[b])
        throw std::logic_error("edge does not cross the bipartition");
      ++row_[(is_right_[a] ? b : a) + 1];
    }
    for (int v = 0; v < n; ++v) row_[v + 1] += row_[v];
    col_.resize(edges.size());
    std::vector<int> fill(row_.begin(), row_.end() - 1);
    for (const auto& [a, b] : edges) {
      const int u = is_right_[a] ? b : a;
      const int v = is_right_[a] ? a : b;
      col_[fill[u]++] = v;
    }
    for (int u = 0; u < n; ++u) {
      if (!is_right_[u]) {
        std::sort(col_.begin() + row_[u], col_.begin() + row_[u + 1]);
        left_.push_back(u);
      }
    }
  }

  /// Maximum matching among active vertices; returns its size.
  int solve(const std::vector<std::uint8_t>& active,
            const std::vector<std::pair<int, int>>* warm_start = nullptr) {
    std::fill(mate_.begin(), mate_.end(), -1);
    int matched = 0;
    if (warm_start) {
      for (const auto& [a, b] : *warm_start) {
        if (active[a] && active[b] && mate_[a] == -1 && mate_[b] == -1) {
          mate_[a] = b;
          mate_[b] = a;
          ++matched;
        }
      }
    }
    while (bfs(active)) {
      for (int u : left_)
        if (active[u] && mate_[u] == -1 && try_augment(u, active)) ++matched;
    }
    return matched;
  }

  const std::vector<int>& mate() const { return mate_; }

  /// König construction over the current matching: left vertices outside the
  /// alternating forest grown from unmatched left vertices, plus right
  /// vertices inside it. Emitted in ascending id order.
  void min_cover(const std::vector<std::uint8_t>& active, std::vector<int>& out) {
    visited_.assign(static_cast<std::size_t>(n_), 0);
    queue_.clear();
    for (int u : left_) {
      if (active[u] && mate_[u] == -1) {
        visited_[u] = 1;
        queue_.push_back(u);
      }
    }
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const int u = queue_[qi];
      for (int idx = row_[u]; idx < row_[u + 1]; ++idx) {
        const int v = col_[idx];
        if (!active[v] || visited_[v] || v == mate_[u]) continue;
        visited_[v] = 1;
        const int w = mate_[v];
        if (w != -1 && !visited_[w]) {
          visited_[w] = 1;
          queue_.push_back(w);
        }
      }
    }
    out.clear();
    for (int v = 0; v < n_; ++v) {
      if (!active[v]) continue;
      const bool in_cover = is_right_[v] ? visited_[v] != 0 : visited_[v] == 0;
      if (in_cover) out.push_back(v);
    }
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs(const std::vector<std::uint8_t>& active) {
    queue_.clear();
    for (int u : left_) {
      if (active[u] && mate_[u] == -1) {
        dist_[u] = 0;
        queue_.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    dist_free_ = kInf;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const int u = queue_[qi];
      if (dist_[u] >= dist_free_) continue;
      for (int idx = row_[u]; idx < row_[u + 1]; ++idx) {
        const int v = col_[idx];
        if (!active[v]) continue;
        const int w = mate_[v];
        if (w == -1) {
          if (dist_free_ == kInf) dist_free_ = dist_[u] + 1;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue_.push_back(w);
        }
      }
    }
    return dist_free_ != kInf;
  }

  bool try_augment(int u, const std::vector<std::uint8_t>& active) {
    for (int idx = row_[u]; idx < row_[u + 1]; ++idx) {
      const int v = col_[idx];
      if (!active[v]) continue;
      const int w = mate_[v];
      const bool reaches_free = (w == -1) ? dist_free_ == dist_[u] + 1
                                          : (dist_[w] == dist_[u] + 1 && try_augment(w, active));
      if (reaches_free) {
        mate_[u] = v;
        mate_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  int n_;
  std::vector<std::uint8_t> is_right_;
  std::vector<int> mate_;
  std::vector<int> dist_;
  std::vector<int> row_;
  std::vector<int> col_;
  std::vector<int> left_;
  std::vector<int> queue_;
  std::vector<std::uint8_t> visited_;
  int dist_free_ = kInf;
};

inline std::vector<std::uint8_t> right_mask(const Graph& g, const Bipartition& sides) {
  std::vector<std::uint8_t> is_right(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : sides.right.members()) is_right[v] = 1;
  return is_right;
}

}  // namespace detail

inline void validate_bipartition(const Graph& g, const Bipartition& sides) {
  if (!is_valid_bipartition(g, sides))
    throw std::invalid_argument("sides do not form a bipartition of the graph");
}

inline Matching max_matching(const Graph& g, const Bipartition& sides) {
  validate_bipartition(g, sides);
  detail::HopcroftKarp hk(g.vertex_count(), g.edges(), detail::right_mask(g, sides));
  const std::vector<std::uint8_t> active(static_cast<std::size_t>(g.vertex_count()), 1);
  hk.solve(active);
  Matching m;
  const auto& mate = hk.mate();
  for (int u = 0; u < g.vertex_count(); ++u)
    if (mate[u] > u) m.pairs.emplace_back(u, mate[u]);
  return m;
}

/// Minimum vertex cover via König; |cover| equals the maximum matching size.
inline VertexCover min_vertex_cover(const Graph& g, const Bipartition& sides) {
  validate_bipartition(g, sides);
  detail::HopcroftKarp hk(g.vertex_count(), g.edges(), detail::right_mask(g, sides));
  const std::vector<std::uint8_t> active(static_cast<std::size_t>(g.vertex_count()), 1);
  hk.solve(active);
  std::vector<int> cover;
  hk.min_cover(active, cover);
  return VertexCover{VertexSet(std::move(cover))};
}

}  // namespace oct
