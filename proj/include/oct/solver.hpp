#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bipartite.hpp"
#include "doubling.hpp"
#include "graph.hpp"

namespace oct {

/// Work counters; empirical witnesses for the exponential bounds. Per
/// disjoint compression call, assignments_enumerated never exceeds 2^|t|;
/// summed over one compression of a set s, it never exceeds 3^|s|.
struct CompressionStats {
  std::uint64_t assignments_enumerated = 0;
  std::uint64_t assignments_surviving_filter = 0;
  std::uint64_t matching_calls = 0;
  std::uint64_t subsets_tried = 0;

  CompressionStats& operator+=(const CompressionStats& o) {
    assignments_enumerated += o.assignments_enumerated;
    assignments_surviving_filter += o.assignments_surviving_filter;
    matching_calls += o.matching_calls;
    subsets_tried += o.subsets_tried;
    return *this;
  }
};

struct SolveOptions {
  /// 1 = sequential deterministic scan. More threads split the
  /// side-assignment scan across workers.
  unsigned threads = 1;
  /// Resolve parallel races toward the lowest-index success so the answer
  /// matches the sequential scan exactly. This build always does; the flag
  /// is kept so callers can state which guarantee they rely on.
  bool canonical = true;
};

/// One choice, per vertex of t, of which of its two copies in the doubled
/// graph is selected. Bit i of `choices` governs the i-th smallest vertex
/// of t; a clear bit selects the first copy.
struct SideAssignment {
  std::vector<int> t_order;
  std::uint64_t choices = 0;

  bool second_copy_selected(std::size_t i) const { return (choices >> i) & 1u; }

  std::vector<int> selected_copies(const DoubledGraph& dg) const {
    std::vector<int> out;
    out.reserve(t_order.size());
    for (std::size_t i = 0; i < t_order.size(); ++i)
      out.push_back(second_copy_selected(i) ? dg.second_copy(t_order[i])
                                            : dg.first_copy(t_order[i]));
    return out;
  }
};

/// Lazy enumeration of all 2^|t| side assignments in ascending choice order.
class SideAssignmentSequence {
 public:
  explicit SideAssignmentSequence(const VertexSet& t) : order_(t.members()) {
    if (order_.size() > 63)
      throw std::invalid_argument("t too large to enumerate side assignments");
  }

  std::uint64_t size() const { return std::uint64_t{1} << order_.size(); }
  SideAssignment at(std::uint64_t choices) const { return SideAssignment{order_, choices}; }

  class iterator {
   public:
    using value_type = SideAssignment;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;
    using pointer = void;
    using reference = SideAssignment;

    iterator(const SideAssignmentSequence* seq, std::uint64_t pos) : seq_(seq), pos_(pos) {}
    SideAssignment operator*() const { return seq_->at(pos_); }
    iterator& operator++() {
      ++pos_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++pos_;
      return old;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }
    bool operator!=(const iterator& o) const { return pos_ != o.pos_; }

   private:
    const SideAssignmentSequence* seq_;
    std::uint64_t pos_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size()); }

 private:
  std::vector<int> order_;
};

inline SideAssignmentSequence side_assignments(const VertexSet& t) {
  return SideAssignmentSequence(t);
}

/// True iff the selected copies cover every doubled edge whose endpoints are
/// both copies of t vertices. Pairing edges always pass; a copied base edge
/// passes iff its endpoints select opposite copies.
inline bool covers_doubled_t_edges(const DoubledGraph& dg, const SideAssignment& y) {
  std::vector<std::uint8_t> in_t(static_cast<std::size_t>(dg.base_n), 0);
  for (int v : y.t_order) {
    if (v < 0 || v >= dg.base_n)
      throw std::invalid_argument("assignment vertex out of range: " + std::to_string(v));
    in_t[v] = 1;
  }
  std::vector<std::uint8_t> in_y(static_cast<std::size_t>(2 * dg.base_n), 0);
  for (int dv : y.selected_copies(dg)) in_y[dv] = 1;
  for (const auto& [a, b] : dg.graph.edges()) {
    if (!in_t[dg.base_vertex(a)] || !in_t[dg.base_vertex(b)]) continue;
    if (!in_y[a] && !in_y[b]) return false;
  }
  return true;
}

enum class CompressionOutcome {
  found,            // a strictly smaller disjoint transversal was returned
  not_found,        // exhaustive scan proved none exists
  t_not_bipartite,  // t induces an odd cycle, so no disjoint replacement can exist
};

struct CompressionResult {
  CompressionOutcome outcome = CompressionOutcome::not_found;
  std::optional<VertexSet> transversal;
  CompressionStats stats;

  bool found() const { return outcome == CompressionOutcome::found; }
};

inline std::uint64_t pow3_saturating(int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > ~std::uint64_t{0} / 3) return ~std::uint64_t{0};
    out *= 3;
  }
  return out;
}

namespace detail {

inline constexpr std::uint64_t kNoAssignment = ~std::uint64_t{0};

inline void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t cur = target.load(std::memory_order_relaxed);
  while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_acq_rel)) {
  }
}

/// Immutable per-call context shared by all side-assignment scans: the
/// doubled complement graph with 2-coloring-induced sides, the edges inside
/// t (as bit positions), and the adjacency from t into the complement.
struct CompressionContext {
  int h_n = 0;
  int nb = 0;                                      // complement size
  std::vector<int> t_order;                        // ascending
  std::vector<int> b_order;                        // ascending complement vertices
  std::vector<std::pair<int, int>> t_edges;        // bit-index pairs of edges inside t
  std::vector<std::vector<int>> t_adj_b;           // per t index: complement-local neighbors
  std::vector<std::pair<int, int>> doubled_edges;  // on 2*nb local vertices
  std::vector<std::uint8_t> doubled_right;
  std::vector<std::pair<int, int>> pairing;        // (b, b+nb), a warm-start matching
};

inline CompressionContext make_compression_context(const Graph& h, const VertexSet& t) {
  CompressionContext cx;
  cx.h_n = h.vertex_count();
  cx.t_order = t.members();
  cx.b_order = complement_of(t, cx.h_n).members();
  cx.nb = static_cast<int>(cx.b_order.size());

  std::vector<int> t_index(static_cast<std::size_t>(cx.h_n), -1);
  std::vector<int> b_index(static_cast<std::size_t>(cx.h_n), -1);
  for (std::size_t i = 0; i < cx.t_order.size(); ++i) t_index[cx.t_order[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < cx.b_order.size(); ++i) b_index[cx.b_order[i]] = static_cast<int>(i);

  cx.t_adj_b.resize(cx.t_order.size());
  for (std::size_t i = 0; i < cx.t_order.size(); ++i) {
    for (int w : h.neighbors(cx.t_order[i])) {
      if (t_index[w] > static_cast<int>(i)) cx.t_edges.emplace_back(static_cast<int>(i), t_index[w]);
      if (b_index[w] != -1) cx.t_adj_b[i].push_back(b_index[w]);
    }
  }

  // Lifting the complement's 2-coloring to both copies keeps every doubled
  // edge crossing: copy one follows the coloring, copy two flips it.
  const auto induced = induced_subgraph(h, VertexSet(std::vector<int>(cx.b_order)));
  const auto coloring = bipartition_of(induced.graph);
  if (!coloring) throw std::logic_error("complement of a transversal must be bipartite");
  cx.doubled_right.assign(static_cast<std::size_t>(2 * cx.nb), 0);
  for (int v : coloring->left.members()) {
    cx.doubled_right[v] = 0;
    cx.doubled_right[v + cx.nb] = 1;
  }
  for (int v : coloring->right.members()) {
    cx.doubled_right[v] = 1;
    cx.doubled_right[v + cx.nb] = 0;
  }

  cx.doubled_edges.reserve(2 * induced.graph.edges().size() + static_cast<std::size_t>(cx.nb));
  for (const auto& [u, v] : induced.graph.edges()) {
    cx.doubled_edges.emplace_back(u, v);
    cx.doubled_edges.emplace_back(u + cx.nb, v + cx.nb);
  }
  cx.pairing.reserve(static_cast<std::size_t>(cx.nb));
  for (int v = 0; v < cx.nb; ++v) {
    cx.doubled_edges.emplace_back(v, v + cx.nb);
    cx.pairing.emplace_back(v, v + cx.nb);
  }
  return cx;
}

struct ScanResult {
  CompressionStats stats;
  std::uint64_t found_choices = kNoAssignment;
  std::vector<int> replacement;  // base vertex ids, ascending
};

/// Scans side assignments first, first+stride, ... in ascending order and
/// stops at this lane's first success or once `best` proves that no smaller
/// index can still be claimed. For each surviving assignment the forced
/// neighbors of the unselected copies leave the cover search, a minimum
/// cover of the remaining doubled complement completes the combined cover,
/// and vertices with both copies covered form the candidate replacement.
inline void scan_side_assignments(const CompressionContext& cx, std::uint64_t first,
                                  std::uint64_t stride, std::atomic<std::uint64_t>& best,
                                  ScanResult& out) {
  const int t_size = static_cast<int>(cx.t_order.size());
  const std::uint64_t total = std::uint64_t{1} << t_size;
  HopcroftKarp matcher(2 * cx.nb, cx.doubled_edges, cx.doubled_right);
  std::vector<std::uint8_t> active(static_cast<std::size_t>(2 * cx.nb));
  std::vector<std::uint8_t> in_cover(static_cast<std::size_t>(2 * cx.nb));
  std::vector<int> residual_cover;
  std::vector<int> replacement;

  for (std::uint64_t choices = first; choices < total; choices += stride) {
    if (choices > best.load(std::memory_order_relaxed)) break;
    ++out.stats.assignments_enumerated;

    // both doubled copies of an edge inside t are covered iff its endpoints
    // select opposite copies
    bool covered = true;
    for (const auto& [i, j] : cx.t_edges) {
      if (((choices >> i) & 1u) == ((choices >> j) & 1u)) {
        covered = false;
        break;
      }
    }
    if (!covered) continue;
    ++out.stats.assignments_surviving_filter;

    std::fill(active.begin(), active.end(), std::uint8_t{1});
    std::uint64_t forced = 0;
    for (int i = 0; i < t_size; ++i) {
      // neighbors of the unselected copy of t_order[i] are forced into the
      // cover, so they drop out of the minimum-cover subproblem
      const int offset = ((choices >> i) & 1u) ? 0 : cx.nb;
      for (int b : cx.t_adj_b[i]) {
        std::uint8_t& cell = active[b + offset];
        if (cell) {
          cell = 0;
          ++forced;
        }
      }
    }

    ++out.stats.matching_calls;
    const int matched = matcher.solve(active, &cx.pairing);
    matcher.min_cover(active, residual_cover);
    if (static_cast<int>(residual_cover.size()) != matched)
      throw std::logic_error("cover size does not match the matching size");

    for (int v = 0; v < 2 * cx.nb; ++v) in_cover[v] = static_cast<std::uint8_t>(!active[v]);
    for (int v : residual_cover) in_cover[v] = 1;
    replacement.clear();
    for (int b = 0; b < cx.nb; ++b)
      if (in_cover[b] && in_cover[b + cx.nb]) replacement.push_back(cx.b_order[b]);

    if (static_cast<int>(replacement.size()) <= t_size - 1) {
      // every pairing edge contributes at least one cover vertex, doubly
      // covered vertices contribute two
      const std::uint64_t cover_size =
          static_cast<std::uint64_t>(t_size) + forced + residual_cover.size();
      if (cover_size != static_cast<std::uint64_t>(cx.h_n) + replacement.size())
        throw std::logic_error("combined cover size accounting violated");
      out.found_choices = choices;
      out.replacement = replacement;
      atomic_min(best, choices);
      break;
    }
  }
}

}  // namespace detail

/// Searches for a transversal of h that avoids t entirely and is strictly
/// smaller. Enumerates one copy choice per t vertex (ascending), keeps the
/// choices that cover the doubled edges inside t, and completes each into a
/// smallest compatible cover of the doubled graph via bipartite matching.
/// Returns the first success in ascending choice order; parallel scans
/// resolve to that same assignment. Requires t to be a transversal of h;
/// when t itself induces an odd cycle the outcome is t_not_bipartite, since
/// a replacement disjoint from t cannot repair it.
inline CompressionResult disjoint_compression(const Graph& h, const VertexSet& t,
                                              const SolveOptions& opts = {}) {
  const int n = h.vertex_count();
  for (int v : t.members())
    if (v < 0 || v >= n)
      throw std::invalid_argument("t vertex out of range: " + std::to_string(v));
  if (!is_oct(h, t))
    throw std::invalid_argument("t is not an odd cycle transversal of h");
  if (t.size() > 63) throw std::invalid_argument("t too large to enumerate side assignments");

  CompressionResult result;
  if (!is_bipartite(induced_subgraph(h, t).graph)) {
    result.outcome = CompressionOutcome::t_not_bipartite;
    return result;
  }

  const auto cx = detail::make_compression_context(h, t);
  std::atomic<std::uint64_t> best{detail::kNoAssignment};
  const std::uint64_t total = std::uint64_t{1} << t.size();
  std::uint64_t workers = opts.threads > 1 ? opts.threads : 1;
  if (workers > total) workers = total;

  std::vector<detail::ScanResult> scans(static_cast<std::size_t>(workers));
  if (workers == 1) {
    detail::scan_side_assignments(cx, 0, 1, best, scans[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          detail::scan_side_assignments(cx, w, workers, best, scans[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  for (const auto& scan : scans) result.stats += scan.stats;
  const std::uint64_t winner = best.load();
  if (winner != detail::kNoAssignment) {
    for (const auto& scan : scans) {
      if (scan.found_choices == winner) {
        VertexSet replacement{std::vector<int>(scan.replacement)};
        if (replacement.size() > t.size() - 1 || !is_oct(h, replacement))
          throw std::logic_error("candidate replacement failed verification");
        result.outcome = CompressionOutcome::found;
        result.transversal = std::move(replacement);
        break;
      }
    }
  }
  return result;
}

struct CompressResult {
  std::optional<VertexSet> transversal;
  CompressionStats stats;
};

/// Shrinks a transversal s of size k+1 to size at most k if possible.
/// Tries every subset t of s (ascending bitmask over the sorted order) that
/// induces a bipartite graph: the vertices of s outside t are committed to
/// the answer and deleted, and a strictly smaller replacement for t disjoint
/// from it is searched in the remainder. Returns the first success; sets of
/// size at most k are returned as-is.
inline CompressResult compress(const Graph& g, const VertexSet& s, int k,
                               const SolveOptions& opts = {}) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = g.vertex_count();
  for (int v : s.members())
    if (v < 0 || v >= n)
      throw std::invalid_argument("s vertex out of range: " + std::to_string(v));
  if (!is_oct(g, s))
    throw std::invalid_argument("s is not an odd cycle transversal of g");

  CompressResult result;
  if (s.size() <= k) {
    result.transversal = s;
    return result;
  }
  if (s.size() != k + 1)
    throw std::invalid_argument("s must have at most k+1 vertices");
  if (s.size() > 63) throw std::invalid_argument("s too large to enumerate subsets");

  const auto& order = s.members();
  const int s_size = s.size();
  std::vector<std::uint8_t> drop(static_cast<std::size_t>(n), 0);

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s_size); ++mask) {
    std::vector<int> kept;  // the subset t of s that stays in the graph
    for (int i = 0; i < s_size; ++i)
      if ((mask >> i) & 1u) kept.push_back(order[i]);

    // a replacement keeps t intact, so t must not induce an odd cycle
    const VertexSet t_in_g{std::vector<int>(kept)};
    if (!is_bipartite(induced_subgraph(g, t_in_g).graph)) continue;
    ++result.stats.subsets_tried;

    for (int v : order) drop[v] = 1;
    for (int v : kept) drop[v] = 0;
    std::vector<int> keep_vertices;
    keep_vertices.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      if (!drop[v]) keep_vertices.push_back(v);
    for (int v : order) drop[v] = 0;

    const auto sub = induced_subgraph(g, VertexSet(std::move(keep_vertices)));
    std::vector<int> t_local;
    t_local.reserve(kept.size());
    for (int v : kept) t_local.push_back(sub.new_label[v]);

    auto dc = disjoint_compression(sub.graph, VertexSet(std::move(t_local)), opts);
    result.stats += dc.stats;
    if (dc.found()) {
      std::vector<int> answer;
      answer.reserve(static_cast<std::size_t>(k));
      for (int v : dc.transversal->members()) answer.push_back(sub.original_label[v]);
      for (int i = 0; i < s_size; ++i)
        if (!((mask >> i) & 1u)) answer.push_back(order[i]);
      VertexSet shrunk{std::move(answer)};
      if (shrunk.size() > k || !is_oct(g, shrunk))
        throw std::logic_error("compressed transversal failed verification");
      result.transversal = std::move(shrunk);
      return result;
    }
  }
  return result;
}

/// Aggregate counters across the compressions of one solve.
struct SolveStats {
  CompressionStats totals;
  std::uint64_t compress_calls = 0;
  std::uint64_t max_assignments_per_compress = 0;

  void absorb(const CompressionStats& call) {
    totals += call;
    ++compress_calls;
    if (call.assignments_enumerated > max_assignments_per_compress)
      max_assignments_per_compress = call.assignments_enumerated;
  }
};

struct SolveResult {
  std::optional<VertexSet> transversal;
  SolveStats stats;

  bool found() const { return transversal.has_value(); }
};

namespace detail {

inline Graph prefix_graph(const Graph& g, int last_vertex) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges())
    if (v <= last_vertex) edges.push_back({u, v});
  return Graph(last_vertex + 1, edges);
}

}  // namespace detail

/// Decides whether g has a transversal of size at most k and returns one if
/// so. Grows the graph one vertex at a time in ascending id order, keeping a
/// transversal of the current prefix of size at most k by compressing after
/// every addition; a prefix that cannot be compressed certifies that g
/// cannot be solved either, since transversals restrict to induced
/// subgraphs.
inline SolveResult solve_oct(const Graph& g, int k, const SolveOptions& opts = {}) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  SolveResult result;
  const int n = g.vertex_count();

  if (k == 0) {
    if (is_bipartite(g)) result.transversal = VertexSet{};
    return result;
  }
  if (n <= k + 1) {
    // deleting all but one vertex always suffices
    std::vector<int> witness(static_cast<std::size_t>(std::min(n, k)));
    std::iota(witness.begin(), witness.end(), 0);
    VertexSet w{std::move(witness)};
    if (!is_oct(g, w)) throw std::logic_error("trivial witness failed verification");
    result.transversal = std::move(w);
    return result;
  }
  if (k > 62) throw std::invalid_argument("k too large to enumerate subsets");

  std::vector<int> current(static_cast<std::size_t>(k) + 1);
  std::iota(current.begin(), current.end(), 0);  // transversal of the first k+2 vertices

  int i = k + 1;
  while (true) {
    const Graph prefix = detail::prefix_graph(g, i);
    auto cr = compress(prefix, VertexSet(std::move(current)), k, opts);
    result.stats.absorb(cr.stats);
    if (!cr.transversal) return result;  // this prefix already needs more than k
    current = cr.transversal->members();
    if (i == n - 1) break;
    ++i;
    current.push_back(i);  // ids are processed in ascending order, so this stays sorted
  }

  VertexSet answer{std::move(current)};
  if (answer.size() > k || !is_oct(g, answer))
    throw std::logic_error("final transversal failed verification");
  result.transversal = std::move(answer);
  return result;
}

/// Minimum transversal by solving k = 0, 1, 2, ... until success. Stats
/// aggregate over all attempted budgets.
inline SolveResult minimize_oct(const Graph& g, const SolveOptions& opts = {}) {
  SolveStats aggregate;
  for (int k = 0;; ++k) {
    auto attempt = solve_oct(g, k, opts);
    aggregate.totals += attempt.stats.totals;
    aggregate.compress_calls += attempt.stats.compress_calls;
    if (attempt.stats.max_assignments_per_compress > aggregate.max_assignments_per_compress)
      aggregate.max_assignments_per_compress = attempt.stats.max_assignments_per_compress;
    if (attempt.transversal) {
      attempt.stats = aggregate;
      return attempt;
    }
  }
}

}  // namespace oct
