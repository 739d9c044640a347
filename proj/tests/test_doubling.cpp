#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oct/doubling.hpp"
#include "oct/oracle.hpp"
#include "testutil.hpp"

using namespace oct;
using namespace testutil;

TEST_CASE("doubling a single vertex") {
  const auto dg = doubled_graph(Graph(1, {}));
  CHECK(dg.graph.vertex_count() == 2);
  CHECK(dg.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("doubling a triangle yields the prism") {
  const auto dg = doubled_graph(complete(3));
  CHECK(dg.graph.vertex_count() == 6);
  CHECK(dg.graph.edge_count() == 9);  // 2*3 copied + 3 pairing
  // two triangles {0,1,2} and {3,4,5} joined by rungs i -- i+3
  const std::vector<std::pair<int, int>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4},
                                                  {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  CHECK(dg.graph.edges() == expected);
  CHECK(brute_min_vc(dg.graph).members.size() == 4);
}

TEST_CASE("doubling a 4-cycle yields the cube") {
  const auto dg = doubled_graph(cycle(4));
  CHECK(dg.graph.vertex_count() == 8);
  CHECK(dg.graph.edge_count() == 12);  // 2*4 copied + 4 pairing
  CHECK(is_bipartite(dg.graph));
  for (int v = 0; v < 8; ++v) CHECK(dg.graph.neighbors(v).size() == 3);
  CHECK(brute_min_vc(dg.graph).members.size() == 4);
}

TEST_CASE("doubled graph invariants on random inputs") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph({2 + static_cast<int>(rng.next_below(8)), 0.4, {}, {}, rng.next()});
    const auto dg = doubled_graph(g);
    const int n = g.vertex_count();
    CHECK(dg.base_n == n);
    CHECK(dg.graph.vertex_count() == 2 * n);
    CHECK(dg.graph.edge_count() == 2 * g.edge_count() + n);
    for (const auto& [u, v] : g.edges()) {
      CHECK(dg.graph.has_edge(u, v));
      CHECK(dg.graph.has_edge(u + n, v + n));
    }
    // the pairing edges form a perfect matching
    for (int v = 0; v < n; ++v) {
      CHECK(dg.graph.has_edge(dg.first_copy(v), dg.second_copy(v)));
      CHECK(dg.base_vertex(dg.second_copy(v)) == v);
      CHECK(dg.is_second_copy(dg.second_copy(v)));
      CHECK_FALSE(dg.is_second_copy(dg.first_copy(v)));
    }
  }
}

TEST_CASE("cover from a known transversal of the 5-cycle") {
  const Graph c5 = cycle(5);
  const VertexSet s{{0}};
  const Bipartition pq{VertexSet{{1, 3}}, VertexSet{{2, 4}}};
  const auto cover = cover_from_oct(c5, s, pq);
  CHECK(cover.members.size() == 6);  // n + |s|
  const auto dg = doubled_graph(c5);
  CHECK(dg.graph.edge_count() == 15);
  CHECK(covers_all_edges(dg.graph, cover.members));

  const auto mirrored = cover_from_oct(c5, s, pq, CoverSide::left_second);
  CHECK(mirrored.members.size() == 6);
  CHECK(covers_all_edges(dg.graph, mirrored.members));
  CHECK_FALSE(mirrored.members == cover.members);
}

TEST_CASE("cover of a bipartite graph with empty transversal has size n") {
  const Graph c4 = cycle(4);
  const auto pq = bipartition_of(c4);
  REQUIRE(pq);
  const auto cover = cover_from_oct(c4, VertexSet{}, *pq);
  CHECK(cover.members.size() == 4);
  CHECK(covers_all_edges(doubled_graph(c4).graph, cover.members));
}

TEST_CASE("triangle cover matches the brute-force prism minimum") {
  const Graph k3 = complete(3);
  const auto cover = cover_from_oct(k3, VertexSet{{2}}, Bipartition{VertexSet{{0}}, VertexSet{{1}}});
  CHECK(cover.members.size() == 4);
  const auto dg = doubled_graph(k3);
  CHECK(covers_all_edges(dg.graph, cover.members));
  CHECK(cover.members.size() == brute_min_vc(dg.graph).members.size());
}

TEST_CASE("cover construction rejects a broken bipartition") {
  const Graph c5 = cycle(5);
  CHECK_THROWS_AS(cover_from_oct(c5, VertexSet{{0}}, Bipartition{VertexSet{{1, 2}}, VertexSet{{3, 4}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cover_from_oct(c5, VertexSet{{0}}, Bipartition{VertexSet{{1, 3}}, VertexSet{{2}}}),
                  std::invalid_argument);
}

TEST_CASE("transversal recovered from a cover") {
  const Graph c5 = cycle(5);
  const auto dg = doubled_graph(c5);
  const auto cover = cover_from_oct(c5, VertexSet{{0}}, Bipartition{VertexSet{{1, 3}}, VertexSet{{2, 4}}});
  const auto cert = oct_from_cover(dg, cover);
  CHECK(cert.transversal == VertexSet{{0}});
  CHECK(cert.sides.left == VertexSet{{1, 3}});
  CHECK(cert.sides.right == VertexSet{{2, 4}});

  // only pairing edges to cover
  const auto pair2 = doubled_graph(Graph(2, {}));
  const auto cert2 = oct_from_cover(pair2, VertexCover{VertexSet{{0, 3}}});
  CHECK(cert2.transversal == VertexSet{});
  CHECK(cert2.sides.left == VertexSet{{1}});
  CHECK(cert2.sides.right == VertexSet{{0}});

  // a full cover makes everything part of the transversal
  const auto k3d = doubled_graph(complete(3));
  const auto cert3 = oct_from_cover(k3d, VertexCover{VertexSet::full(6)});
  CHECK(cert3.transversal == VertexSet{{0, 1, 2}});
  CHECK(cert3.sides.left == VertexSet{});
  CHECK(cert3.sides.right == VertexSet{});

  CHECK_THROWS_AS(oct_from_cover(k3d, VertexCover{VertexSet{{0}}}), std::invalid_argument);
  CHECK_THROWS_AS(oct_from_cover(k3d, VertexCover{VertexSet{{9}}}), std::invalid_argument);
}

TEST_CASE("round trip through the doubled graph") {
  SplitMix64 rng(41);
  int done = 0;
  for (int attempt = 0; done < 60; ++attempt) {
    const Graph g = random_graph({3 + static_cast<int>(rng.next_below(6)), 0.45, {}, {}, rng.next()});
    const auto s = brute_oct(g, g.vertex_count());
    REQUIRE(s);
    const auto rest = induced_subgraph(g, complement_of(*s, g.vertex_count()));
    const auto local = bipartition_of(rest.graph);
    REQUIRE(local);
    std::vector<int> left;
    std::vector<int> right;
    for (int v : local->left.members()) left.push_back(rest.original_label[v]);
    for (int v : local->right.members()) right.push_back(rest.original_label[v]);
    const Bipartition pq{VertexSet{std::move(left)}, VertexSet{std::move(right)}};

    const auto dg = doubled_graph(g);
    for (const auto side : {CoverSide::left_first, CoverSide::left_second}) {
      const auto cover = cover_from_oct(g, *s, pq, side);
      CHECK(cover.members.size() == g.vertex_count() + s->size());
      CHECK(covers_all_edges(dg.graph, cover.members));
      CHECK(is_independent_set(dg.graph, complement_of(cover.members, 2 * g.vertex_count())));
      const auto cert = oct_from_cover(dg, cover);
      CHECK(cert.transversal == *s);
      if (side == CoverSide::left_first) {
        CHECK(cert.sides.left == pq.left);
        CHECK(cert.sides.right == pq.right);
      } else {
        CHECK(cert.sides.left == pq.right);
        CHECK(cert.sides.right == pq.left);
      }
      CHECK(is_bipartition_of_complement(g, cert.transversal, cert.sides));
    }
    ++done;
  }
}

TEST_CASE("minimum cover of the doubled graph is n plus the minimum transversal") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    const Graph g = random_graph({n, 0.2 + 0.2 * (trial % 3), {}, {}, rng.next()});
    const auto min_oct = brute_oct(g, n);
    REQUIRE(min_oct);
    const auto dg = doubled_graph(g);
    CHECK(brute_min_vc(dg.graph).members.size() == n + min_oct->size());
  }
}

TEST_CASE("every cover of a doubled graph pairs off") {
  // |x| >= base_n always, with equality only for bipartite sources hit once per pair
  SplitMix64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(6));
    const Graph g = random_graph({n, 0.4, {}, {}, rng.next()});
    const auto dg = doubled_graph(g);
    const auto x = brute_min_vc(dg.graph);
    CHECK(x.members.size() >= n);
    const bool once_per_pair = x.members.size() == n;
    CHECK(once_per_pair == is_bipartite(g));
    if (once_per_pair) {
      for (int v = 0; v < n; ++v)
        CHECK((x.members.contains(v) ^ x.members.contains(v + n)) == 1);
    }
  }
}
