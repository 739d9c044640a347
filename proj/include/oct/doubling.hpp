#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bipartite.hpp"
#include "graph.hpp"

namespace oct {

/// Two copies of a base graph joined by one edge per vertex: copy one of v
/// is v, copy two is v + base_n. Edges are both copies of every base edge
/// plus the pairing edges, nothing else; the pairing edges form a perfect
/// matching. Odd cycle transversals of the base graph of size k correspond
/// to vertex covers of the doubled graph of size base_n + k.
struct DoubledGraph {
  int base_n = 0;
  Graph graph;

  int first_copy(int v) const { return v; }
  int second_copy(int v) const { return v + base_n; }
  int base_vertex(int dv) const { return dv >= base_n ? dv - base_n : dv; }
  bool is_second_copy(int dv) const { return dv >= base_n; }
};

inline DoubledGraph doubled_graph(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * g.edges().size() + static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(u + n, v + n);
  }
  for (int v = 0; v < n; ++v) edges.emplace_back(v, v + n);
  return DoubledGraph{n, Graph(2 * n, edges)};
}

/// Which of the two symmetric independent sets stays out of the cover.
enum class CoverSide {
  left_first,   // first copies of `left` and second copies of `right` stay independent
  left_second,  // the mirrored choice
};

/// Cover of the doubled graph built from a transversal s and a bipartition
/// pq of the rest: everything except one copy of each surviving vertex.
/// Size is base_n + |s|.
inline VertexCover cover_from_oct(const Graph& g, const VertexSet& s, const Bipartition& pq,
                                  CoverSide side = CoverSide::left_first) {
  if (!is_bipartition_of_complement(g, s, pq))
    throw std::invalid_argument("pq is not a bipartition of the graph minus s");
  const int n = g.vertex_count();
  std::vector<std::uint8_t> excluded(static_cast<std::size_t>(2 * n), 0);
  const bool left_goes_first = side == CoverSide::left_first;
  for (int v : pq.left.members()) excluded[left_goes_first ? v : v + n] = 1;
  for (int v : pq.right.members()) excluded[left_goes_first ? v + n : v] = 1;
  std::vector<int> cover;
  cover.reserve(static_cast<std::size_t>(n + s.size()));
  for (int dv = 0; dv < 2 * n; ++dv)
    if (!excluded[dv]) cover.push_back(dv);
  return VertexCover{VertexSet(std::move(cover))};
}

struct OctCertificate {
  VertexSet transversal;
  Bipartition sides;
};

/// Reads a transversal of the base graph off any vertex cover of the
/// doubled graph: vertices with both copies covered form the transversal,
/// the uncovered copies 2-color the rest.
inline OctCertificate oct_from_cover(const DoubledGraph& dg, const VertexCover& x) {
  const int n = dg.base_n;
  for (int dv : x.members.members())
    if (dv < 0 || dv >= 2 * n)
      throw std::invalid_argument("cover vertex out of range: " + std::to_string(dv));
  if (!covers_all_edges(dg.graph, x.members))
    throw std::invalid_argument("x is not a vertex cover of the doubled graph");
  std::vector<std::uint8_t> in_x(static_cast<std::size_t>(2 * n), 0);
  for (int dv : x.members.members()) in_x[dv] = 1;
  std::vector<int> transversal;
  std::vector<int> left;
  std::vector<int> right;
  for (int v = 0; v < n; ++v) {
    const bool first = in_x[v] != 0;
    const bool second = in_x[v + n] != 0;
    // the pairing edge guarantees at least one copy is covered
    if (first && second) transversal.push_back(v);
    if (!first) left.push_back(v);
    if (!second) right.push_back(v);
  }
  return OctCertificate{VertexSet(std::move(transversal)),
                        Bipartition{VertexSet(std::move(left)), VertexSet(std::move(right))}};
}

}  // namespace oct
