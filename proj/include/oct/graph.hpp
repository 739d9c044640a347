#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace oct {

/// Sorted, duplicate-free set of vertices of an associated graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static VertexSet full(int n) {
    std::vector<int> m(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(m.begin(), m.end(), 0);
    return VertexSet(std::move(m));
  }

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<int> members_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  out.reserve(a.members().size() + b.members().size());
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                 std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet complement_of(const VertexSet& s, int n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::max(n - s.size(), 0)));
  auto it = s.members().begin();
  for (int v = 0; v < n; ++v) {
    if (it != s.members().end() && *it == v) {
      ++it;
    } else {
      out.push_back(v);
    }
  }
  return VertexSet(std::move(out));
}

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Edges are stored normalized as (min,max) pairs, sorted and de-duplicated;
/// the adjacency view is derived from them at construction. Instances are
/// immutable afterwards and safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges collapse silently; self-loops and out-of-range
  /// endpoints are rejected with the index of the offending pair.
  Graph(int n, const std::vector<std::pair<int, int>>& pairs) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    edges_.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [u, v] = pairs[i];
      if (u == v)
        throw std::invalid_argument("self-loop at pair " + std::to_string(i) + ": (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("vertex out of range at pair " + std::to_string(i) + ": (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& row = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
  }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  return Graph(n, pairs);
}

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

/// Odd closed walk over distinct vertices; certifies non-bipartiteness.
struct OddCycleWitness {
  std::vector<int> cycle;
};

inline bool is_valid_bipartition(const Graph& g, const Bipartition& b) {
  const int n = g.vertex_count();
  std::vector<signed char> side(static_cast<std::size_t>(n), -1);
  for (int v : b.left.members()) {
    if (v < 0 || v >= n || side[v] != -1) return false;
    side[v] = 0;
  }
  for (int v : b.right.members()) {
    if (v < 0 || v >= n || side[v] != -1) return false;
    side[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (side[v] == -1) return false;
  for (const auto& [u, v] : g.edges())
    if (side[u] == side[v]) return false;
  return true;
}

/// Checks that pq splits exactly the vertices outside `removed` and that no
/// surviving edge lies within one side.
inline bool is_bipartition_of_complement(const Graph& g, const VertexSet& removed,
                                         const Bipartition& pq) {
  const int n = g.vertex_count();
  std::vector<signed char> side(static_cast<std::size_t>(n), -1);
  for (int v : removed.members()) {
    if (v < 0 || v >= n) return false;
    side[v] = 2;
  }
  for (int v : pq.left.members()) {
    if (v < 0 || v >= n || side[v] != -1) return false;
    side[v] = 0;
  }
  for (int v : pq.right.members()) {
    if (v < 0 || v >= n || side[v] != -1) return false;
    side[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (side[v] == -1) return false;
  for (const auto& [u, v] : g.edges())
    if (side[u] != 2 && side[u] == side[v]) return false;
  return true;
}

inline bool is_valid_odd_cycle(const Graph& g, const OddCycleWitness& w) {
  const auto& c = w.cycle;
  if (c.size() < 3 || c.size() % 2 == 0) return false;
  std::vector<int> sorted(c);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

using TwoColoring = std::variant<Bipartition, OddCycleWitness>;

/// BFS 2-coloring. Deterministic: components are rooted at their smallest
/// vertex, roots go left, neighbors are scanned in ascending order. Returns
/// an odd cycle when no proper coloring exists.
inline TwoColoring two_coloring(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<signed char> color(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.clear();
    queue.push_back(root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = static_cast<signed char>(color[u] ^ 1);
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // the tree paths from u and w to their lowest common ancestor plus
          // the clash edge close an odd cycle
          std::vector<int> up_u{u};
          std::vector<int> up_w{w};
          int a = u;
          int b = w;
          while (depth[a] > depth[b]) {
            a = parent[a];
            up_u.push_back(a);
          }
          while (depth[b] > depth[a]) {
            b = parent[b];
            up_w.push_back(b);
          }
          while (a != b) {
            a = parent[a];
            up_u.push_back(a);
            b = parent[b];
            up_w.push_back(b);
          }
          std::vector<int> cycle(std::move(up_u));
          for (std::size_t t = up_w.size() - 1; t-- > 0;) cycle.push_back(up_w[t]);
          return OddCycleWitness{std::move(cycle)};
        }
      }
    }
  }
  std::vector<int> left;
  std::vector<int> right;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? left : right).push_back(v);
  return Bipartition{VertexSet(std::move(left)), VertexSet(std::move(right))};
}

inline bool is_bipartite(const Graph& g) {
  return std::holds_alternative<Bipartition>(two_coloring(g));
}

inline std::optional<Bipartition> bipartition_of(const Graph& g) {
  auto result = two_coloring(g);
  if (auto* b = std::get_if<Bipartition>(&result)) return std::move(*b);
  return std::nullopt;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_label;  // new id -> old id, ascending
  std::vector<int> new_label;       // old id -> new id, -1 if dropped
};

/// Subgraph induced on `keep`, with vertices relabeled 0..|keep|-1 in
/// ascending original order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  const int n = g.vertex_count();
  InducedSubgraph out;
  out.new_label.assign(static_cast<std::size_t>(n), -1);
  out.original_label = keep.members();
  for (std::size_t i = 0; i < out.original_label.size(); ++i) {
    const int v = out.original_label[i];
    if (v < 0 || v >= n)
      throw std::invalid_argument("keep vertex out of range: " + std::to_string(v));
    out.new_label[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (out.new_label[u] != -1 && out.new_label[v] != -1)
      edges.emplace_back(out.new_label[u], out.new_label[v]);
  }
  out.graph = Graph(keep.size(), edges);
  return out;
}

/// True iff deleting s leaves a bipartite graph.
inline bool is_oct(const Graph& g, const VertexSet& s) {
  const int n = g.vertex_count();
  for (int v : s.members())
    if (v < 0 || v >= n)
      throw std::invalid_argument("transversal vertex out of range: " + std::to_string(v));
  std::vector<signed char> color(static_cast<std::size_t>(n), -1);
  for (int v : s.members()) color[v] = 2;
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.clear();
    queue.push_back(root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (int w : g.neighbors(u)) {
        if (color[w] == 2) continue;
        if (color[w] == -1) {
          color[w] = static_cast<signed char>(color[u] ^ 1);
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool covers_all_edges(const Graph& g, const VertexSet& cover) {
  for (const auto& [u, v] : g.edges())
    if (!cover.contains(u) && !cover.contains(v)) return false;
  return true;
}

inline bool is_independent_set(const Graph& g, const VertexSet& vs) {
  for (const auto& [u, v] : g.edges())
    if (vs.contains(u) && vs.contains(v)) return false;
  return true;
}

}  // namespace oct
