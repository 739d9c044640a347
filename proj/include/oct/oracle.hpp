#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bipartite.hpp"
#include "graph.hpp"

namespace oct {

/// SplitMix64, pinned so generated instances are identical across platforms
/// and compilers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53 significant bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0,bound) by modulo reduction; the bias is immaterial at
  /// instance-generation scales.
  std::uint64_t next_below(std::uint64_t bound) { return bound ? next() % bound : 0; }

 private:
  std::uint64_t state_;
};

struct GenSpec {
  int n = 0;
  double edge_probability = 0.0;
  std::optional<int> edge_count;   // exact edge count; overrides the probability
  std::optional<int> planted_oct;  // guaranteed upper bound on the minimum transversal
  std::uint64_t seed = 0;
};

namespace detail {

/// Visits size-subsets of `items` in lexicographic order; stops early when
/// the callback returns true.
template <typename Fn>
inline bool for_each_combination(const std::vector<int>& items, int size, Fn&& fn) {
  const int n = static_cast<int>(items.size());
  if (size < 0 || size > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(size));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> pick(static_cast<std::size_t>(size));
  while (true) {
    for (int i = 0; i < size; ++i) pick[i] = items[idx[i]];
    if (fn(pick)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Exhaustive minimum transversal: subsets by ascending size, lexicographic
/// within a size. Returns the first hit if its size is at most k. Intended
/// for small n.
inline std::optional<VertexSet> brute_oct(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  const int cap = std::min(k, n);
  for (int size = 0; size <= cap; ++size) {
    std::optional<VertexSet> hit;
    detail::for_each_combination(all, size, [&](const std::vector<int>& pick) {
      VertexSet s{std::vector<int>(pick)};
      if (!is_oct(g, s)) return false;
      hit = std::move(s);
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

/// Exhaustive minimum vertex cover, lexicographically first among minimums.
inline VertexCover brute_min_vc(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::uint8_t> in(static_cast<std::size_t>(n), 0);
  for (int size = 0; size <= n; ++size) {
    std::optional<VertexCover> hit;
    detail::for_each_combination(all, size, [&](const std::vector<int>& pick) {
      for (int v : pick) in[v] = 1;
      bool covers = true;
      for (const auto& [u, v] : g.edges()) {
        if (!in[u] && !in[v]) {
          covers = false;
          break;
        }
      }
      for (int v : pick) in[v] = 0;
      if (!covers) return false;
      hit = VertexCover{VertexSet{std::vector<int>(pick)}};
      return true;
    });
    if (hit) return *hit;
  }
  return VertexCover{VertexSet::full(n)};  // unreachable: the full set always covers
}

/// Smallest transversal of h drawn from outside t with size at most |t|-1,
/// lexicographically first, or absent.
inline std::optional<VertexSet> brute_disjoint(const Graph& h, const VertexSet& t) {
  const auto candidates = complement_of(t, h.vertex_count());
  for (int size = 0; size <= t.size() - 1; ++size) {
    std::optional<VertexSet> hit;
    detail::for_each_combination(candidates.members(), size, [&](const std::vector<int>& pick) {
      VertexSet s{std::vector<int>(pick)};
      if (!is_oct(h, s)) return false;
      hit = std::move(s);
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

/// Seeded instance generator. Without planting this is a plain G(n,p) (or
/// exact edge count) graph. With planted_oct = p the first n-p vertices form
/// a randomly 2-sided scaffold that only receives cross edges, the rest may
/// attach anywhere, and a final seeded relabeling hides the layout; deleting
/// the planted vertices always leaves the scaffold bipartite.
///
/// The draw order is pinned: scaffold sides first (one draw per scaffold
/// vertex), then one draw per admissible pair in lexicographic order (or a
/// partial Fisher-Yates over the admissible list in exact-count mode), then
/// the relabeling permutation.
inline Graph random_graph(const GenSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("n must be non-negative");
  if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0)
    throw std::invalid_argument("edge probability must lie in [0,1]");
  if (spec.planted_oct && (*spec.planted_oct < 0 || *spec.planted_oct > spec.n))
    throw std::invalid_argument("planted transversal size must lie in [0,n]");

  SplitMix64 rng(spec.seed);
  const int n = spec.n;
  const bool planted = spec.planted_oct.has_value();
  const int scaffold = planted ? n - *spec.planted_oct : n;

  std::vector<std::uint8_t> side(static_cast<std::size_t>(std::max(scaffold, 0)), 0);
  if (planted)
    for (int i = 0; i < scaffold; ++i) side[i] = static_cast<std::uint8_t>(rng.next() & 1);

  std::vector<std::pair<int, int>> admissible;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (planted && u < scaffold && v < scaffold && side[u] == side[v]) continue;
      admissible.emplace_back(u, v);
    }
  }

  std::vector<std::pair<int, int>> chosen;
  if (spec.edge_count) {
    const int m = *spec.edge_count;
    if (m < 0 || static_cast<std::size_t>(m) > admissible.size())
      throw std::invalid_argument("edge count exceeds the number of admissible pairs");
    for (int i = 0; i < m; ++i) {
      const std::size_t j = i + rng.next_below(admissible.size() - i);
      std::swap(admissible[i], admissible[j]);
    }
    chosen.assign(admissible.begin(), admissible.begin() + m);
  } else {
    for (const auto& e : admissible)
      if (rng.next_double() < spec.edge_probability) chosen.push_back(e);
  }

  if (planted) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
    for (auto& [u, v] : chosen) {
      u = perm[u];
      v = perm[v];
    }
  }
  return Graph(n, chosen);
}

}  // namespace oct
