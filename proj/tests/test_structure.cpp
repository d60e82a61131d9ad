#include <algorithm>
#include <set>

#include "doctest.h"
#include "oddchrome/multigraph.hpp"
#include "oddchrome/structure.hpp"

using namespace oddchrome;

namespace {

MultiGraph path(int n) {
  MultiGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

MultiGraph cycle(int n) {
  MultiGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

}  // namespace

TEST_CASE("connectivity and components") {
  CHECK(is_connected(MultiGraph(0)));
  CHECK(is_connected(MultiGraph(1)));
  CHECK_FALSE(is_connected(MultiGraph(2)));
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  Components c = components(g);
  CHECK(c.count == 2);
  CHECK(c.id[0] == 0);
  CHECK(c.id[1] == 0);
  CHECK(c.id[2] == 1);
  CHECK(c.id[3] == 1);
  g.add_edge(1, 2);
  CHECK(is_connected(g));
}

TEST_CASE("blocks of a path are its bridges") {
  MultiGraph g = path(4);
  BlockDecomposition bd = blocks(g);
  CHECK(bd.blocks.size() == 3);
  for (const EdgeSubset& b : bd.blocks) CHECK(b.count() == 1);
  CHECK(bd.cut_vertices == std::vector<VertexId>{1, 2});
  CHECK(bd.blocks_at[0].size() == 1);
  CHECK(bd.blocks_at[1].size() == 2);
  CHECK(bridges(g).size() == 3);
}

TEST_CASE("blocks of two triangles sharing a vertex") {
  MultiGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 2);
  BlockDecomposition bd = blocks(g);
  CHECK(bd.blocks.size() == 2);
  CHECK(bd.blocks[0].count() == 3);
  CHECK(bd.blocks[1].count() == 3);
  CHECK(bd.cut_vertices == std::vector<VertexId>{2});
  CHECK(bd.blocks_at[2].size() == 2);
  CHECK(bridges(g).empty());
}

TEST_CASE("loops and parallel edges in block decompositions") {
  MultiGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  BlockDecomposition bd = blocks(g);
  CHECK(bd.blocks.size() == 2);  // the digon and the loop
  CHECK(bd.blocks[0].count() == 2);
  CHECK(bd.blocks[1].count() == 1);
  CHECK(bd.blocks[1].contains(2));
  CHECK(bridges(g).empty());  // a loop is not a bridge
}

TEST_CASE("bipartiteness") {
  CHECK(is_bipartite(cycle(4)));
  CHECK_FALSE(is_bipartite(cycle(5)));
  MultiGraph loopy(1);
  loopy.add_edge(0, 0);
  CHECK_FALSE(is_bipartite(loopy));
  MultiGraph digon(2);
  digon.add_edge(0, 1);
  digon.add_edge(0, 1);
  auto side = bipartition(digon);
  REQUIRE(side.has_value());
  CHECK((*side)[0] != (*side)[1]);
  CHECK(is_bipartite(MultiGraph(3)));  // edgeless
}

TEST_CASE("two-connectivity") {
  CHECK(is_two_connected(cycle(3)));
  CHECK_FALSE(is_two_connected(path(3)));
  MultiGraph k2 = path(2);
  CHECK(is_two_connected(k2));
  CHECK(is_trivial_block(k2));
  CHECK_FALSE(is_trivial_block(cycle(3)));
  CHECK_FALSE(is_two_connected(MultiGraph(1)));
}

TEST_CASE("small edge cuts") {
  MultiGraph g = path(3);
  auto cut1 = edge_connectivity_at_most(g, 1);
  REQUIRE(cut1.has_value());
  CHECK(cut1->size() == 1);
  CHECK((*cut1)[0] == 0);  // lexicographically smallest bridge

  MultiGraph c4 = cycle(4);
  CHECK_FALSE(edge_connectivity_at_most(c4, 1).has_value());
  auto cut2 = edge_connectivity_at_most(c4, 2);
  REQUIRE(cut2.has_value());
  CHECK(cut2->size() == 2);

  // K4 and the triple edge are 3-edge-connected; no cut of size <= 2 exists.
  MultiGraph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  CHECK_FALSE(edge_connectivity_at_most(k4, 2).has_value());
  MultiGraph triple(2);
  for (int i = 0; i < 3; ++i) triple.add_edge(0, 1);
  CHECK_FALSE(edge_connectivity_at_most(triple, 2).has_value());

  // A theta graph is only 2-edge-connected: its degree-2 path vertices can
  // be isolated by removing their two edges.
  MultiGraph theta(5);
  theta.add_edge(0, 1);
  theta.add_edge(0, 2);
  theta.add_edge(2, 1);
  theta.add_edge(0, 3);
  theta.add_edge(3, 4);
  theta.add_edge(4, 1);
  auto theta_cut = edge_connectivity_at_most(theta, 2);
  REQUIRE(theta_cut.has_value());
  CHECK(theta_cut->size() == 2);
}

TEST_CASE("nontrivial 2-edge-cuts ignore cuts isolating one vertex") {
  // C4: every 2-edge-cut with both sides >= 2 splits into opposite edges.
  MultiGraph c4 = cycle(4);
  auto cut = nontrivial_two_edge_cut(c4);
  REQUIRE(cut.has_value());
  CHECK(cut->f1 == 0);
  CHECK(cut->f2 == 2);
  CHECK(cut->x.size() == 2);
  CHECK(cut->x_bar.size() == 2);

  // C3 has 2-edge-cuts but all isolate a single vertex.
  CHECK_FALSE(nontrivial_two_edge_cut(cycle(3)).has_value());
}

TEST_CASE("cycle_through finds required vertices and respects min_order") {
  MultiGraph g = cycle(5);
  auto c = cycle_through(g, {0, 2}, 3);
  REQUIRE(c.has_value());
  CHECK(c->order() == 5);
  CHECK(std::count(c->vertices.begin(), c->vertices.end(), 0) == 1);
  CHECK(std::count(c->vertices.begin(), c->vertices.end(), 2) == 1);

  CHECK_FALSE(cycle_through(path(4), {0}, 3).has_value());

  MultiGraph loopy(1);
  loopy.add_edge(0, 0);
  auto lc = cycle_through(loopy, {0}, 1);
  REQUIRE(lc.has_value());
  CHECK(lc->order() == 1);
  CHECK(lc->edges.size() == 1);

  MultiGraph digon(2);
  digon.add_edge(0, 1);
  digon.add_edge(0, 1);
  auto dc = cycle_through(digon, {}, 2);
  REQUIRE(dc.has_value());
  CHECK(dc->order() == 2);
  CHECK(dc->edges.size() == 2);
}

TEST_CASE("cycle_through prefers cycles with fewest vertices") {
  // Triangle 0-1-2 plus a 5-cycle 0-3-4-5-6 sharing vertex 0; the minimum
  // cycle through 0 is the triangle even though DFS may reach the long
  // cycle first.
  MultiGraph g(7);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  g.add_edge(6, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  auto c = cycle_through(g, {0}, 1);
  REQUIRE(c.has_value());
  CHECK(c->order() == 3);
}

TEST_CASE("cycle structure is consistent") {
  MultiGraph g = cycle(6);
  auto c = cycle_through(g, {1, 4}, 3);
  REQUIRE(c.has_value());
  int L = c->order();
  CHECK(static_cast<int>(c->edges.size()) == L);
  for (int i = 0; i < L; ++i) {
    const Edge& prev = g.edge(c->edges[(i + L - 1) % L]);
    const Edge& cur = g.edge(c->edges[i]);
    VertexId x = c->vertices[i];
    CHECK((prev.u == x || prev.v == x));
    CHECK((cur.u == x || cur.v == x));
  }
  std::set<VertexId> distinct(c->vertices.begin(), c->vertices.end());
  CHECK(static_cast<int>(distinct.size()) == L);
}

TEST_CASE("lobes at a cut vertex restore edges to it") {
  // bowtie: triangles {0,1,2} and {2,3,4} meeting at 2
  MultiGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 2);
  auto ls = lobes(g, 2);
  REQUIRE(ls.size() == 2);
  for (const Lobe& l : ls) {
    CHECK(l.graph.order() == 3);
    CHECK(l.graph.size() == 3);
    CHECK(is_connected(l.graph));
    // maps round-trip
    for (EdgeId e = 0; e < l.graph.size(); ++e) {
      const Edge& in = l.graph.edge(e);
      const Edge& out = g.edge(l.edge_to_old[e]);
      std::set<VertexId> a{l.vertex_to_old[in.u], l.vertex_to_old[in.v]};
      std::set<VertexId> b{out.u, out.v};
      CHECK(a == b);
    }
  }
}
