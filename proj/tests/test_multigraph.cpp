#include "doctest.h"
#include "oddchrome/multigraph.hpp"

using namespace oddchrome;

TEST_CASE("construction, degrees and incidence") {
  MultiGraph g(3);
  EdgeId ab = g.add_edge(0, 1);
  EdgeId ab2 = g.add_edge(0, 1);
  EdgeId loop = g.add_edge(2, 2);
  CHECK(g.order() == 3);
  CHECK(g.size() == 3);
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 2);  // a loop counts twice
  CHECK(g.edge(loop).is_loop());
  CHECK_FALSE(g.edge(ab).is_loop());
  CHECK(g.edge(ab).other(0) == 1);
  CHECK(g.edge(ab2).other(1) == 0);
  // loops appear once in the incidence list
  CHECK(g.incident(2).size() == 1);
  CHECK(g.incident(0).size() == 2);
  CHECK(g.has_loop_at(2));
  CHECK_FALSE(g.has_loop_at(0));
  CHECK_THROWS_AS(g.check_vertex(3), std::out_of_range);
  CHECK_THROWS_AS((void)g.edge(99), std::out_of_range);
}

TEST_CASE("add_vertex extends the vertex range") {
  MultiGraph g(1);
  VertexId v = g.add_vertex();
  CHECK(v == 1);
  CHECK(g.order() == 2);
  g.add_edge(0, 1);
  CHECK(g.degree(1) == 1);
}

TEST_CASE("edge subsets behave like sets with fixed host size") {
  EdgeSubset s(10);
  s.insert(3);
  s.insert(7);
  CHECK(s.count() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  s.erase(3);
  CHECK_FALSE(s.contains(3));
  s.toggle(3);
  CHECK(s.contains(3));
  EdgeSubset t(10);
  t.insert(3);
  t.insert(4);
  EdgeSubset sym = symmetric_difference(s, t);
  CHECK(sym.contains(7));
  CHECK(sym.contains(4));
  CHECK_FALSE(sym.contains(3));
  CHECK(sym.count() == 2);
  CHECK(EdgeSubset::full(10).count() == 10);
}

TEST_CASE("edge_complement flips membership over the host graph") {
  MultiGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  EdgeSubset h(3);
  h.insert(1);
  EdgeSubset c = edge_complement(g, h);
  CHECK(c.contains(0));
  CHECK_FALSE(c.contains(1));
  CHECK(c.contains(2));
}

TEST_CASE("bouquet collects all parallel edges between two vertices") {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(1, 2);
  Bouquet b = bouquet(g, 0, 1);
  CHECK(b.size() == 2);
  Bouquet e = bouquet(g, 0, 2);
  CHECK(e.size() == 0);
}

TEST_CASE("suppressing the middle of a path leaves a single edge") {
  MultiGraph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  SuppressResult r = suppress(p3, 1);
  CHECK(r.graph.order() == 2);
  CHECK(r.graph.size() == 1);
  CHECK(r.vertex_to_new[1] == -1);
  CHECK(r.edge_to_new[0] == -1);
  CHECK(r.new_edge == 0);
  const Edge& e = r.graph.edge(r.new_edge);
  CHECK(((e.u == r.vertex_to_new[0] && e.v == r.vertex_to_new[2]) ||
         (e.v == r.vertex_to_new[0] && e.u == r.vertex_to_new[2])));
}

TEST_CASE("suppress rejects the wrong vertices") {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  CHECK_THROWS_AS(suppress(MultiGraph(1), 0), std::invalid_argument);
  MultiGraph loopy(2);
  loopy.add_edge(0, 0);
  loopy.add_edge(0, 1);
  CHECK_THROWS_AS(suppress(loopy, 0), std::invalid_argument);  // degree 3
  MultiGraph pure_loop(1);
  pure_loop.add_edge(0, 0);
  CHECK_THROWS_AS(suppress(pure_loop, 0), std::invalid_argument);
}

TEST_CASE("suppressing a 2-vertex on a digon creates a loop") {
  MultiGraph digon(2);
  digon.add_edge(0, 1);
  digon.add_edge(0, 1);
  SuppressResult r = suppress(digon, 1);
  CHECK(r.graph.order() == 1);
  CHECK(r.graph.size() == 1);
  CHECK(r.graph.edge(r.new_edge).is_loop());
}

TEST_CASE("split partitions the edges at a vertex between old and new copy") {
  MultiGraph g(3);
  EdgeId e0 = g.add_edge(0, 1);
  EdgeId e1 = g.add_edge(0, 2);
  EdgeId e2 = g.add_edge(0, 2);
  MultiGraph s = split(g, 0, {e0}, {e1, e2});
  CHECK(s.order() == 4);
  CHECK(s.size() == 3);
  CHECK(s.degree(0) == 1);
  CHECK(s.degree(3) == 2);
  CHECK(s.edge(e0).other(1) == 0);
  CHECK(s.edge(e1).other(2) == 3);
  CHECK(s.edge(e2).other(2) == 3);
}

TEST_CASE("odd and even graph predicates") {
  MultiGraph k2(2);
  k2.add_edge(0, 1);
  CHECK(is_odd_graph(k2));
  CHECK_FALSE(is_even_graph(k2));
  MultiGraph c3(3);
  c3.add_edge(0, 1);
  c3.add_edge(1, 2);
  c3.add_edge(2, 0);
  CHECK_FALSE(is_odd_graph(c3));
  CHECK(is_even_graph(c3));
  MultiGraph isolated(1);
  CHECK_FALSE(is_odd_graph(isolated));  // a degree-0 vertex is even
  CHECK(is_even_graph(isolated));
  CHECK(is_odd_graph(MultiGraph(0)));  // vacuous
  CHECK(is_even_graph(MultiGraph(0)));
}

TEST_CASE("remove_vertex keeps consistent maps") {
  MultiGraph g(4);
  g.add_edge(0, 1);
  EdgeId e12 = g.add_edge(1, 2);
  EdgeId e23 = g.add_edge(2, 3);
  g.add_edge(3, 0);
  VertexDeletion d = remove_vertex(g, 0);
  CHECK(d.graph.order() == 3);
  CHECK(d.graph.size() == 2);
  CHECK(d.vertex_to_new[0] == -1);
  CHECK(d.edge_to_new[0] == -1);
  for (EdgeId e = 0; e < d.graph.size(); ++e)
    CHECK(d.edge_to_new[d.edge_to_old[e]] == e);
  EdgeId n12 = d.edge_to_new[e12];
  CHECK(d.graph.edge(n12).other(d.vertex_to_new[1]) == d.vertex_to_new[2]);
  EdgeId n23 = d.edge_to_new[e23];
  CHECK(d.graph.edge(n23).other(d.vertex_to_new[3]) == d.vertex_to_new[2]);
}

TEST_CASE("remove_edges renumbers but keeps endpoints") {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  EdgeDeletion d = remove_edges(g, {1});
  CHECK(d.graph.order() == 3);
  CHECK(d.graph.size() == 2);
  CHECK(d.edge_to_new[1] == -1);
  CHECK(d.edge_to_old.size() == 2);
  for (EdgeId e = 0; e < d.graph.size(); ++e) {
    CHECK(d.graph.edge(e).u == g.edge(d.edge_to_old[e]).u);
    CHECK(d.graph.edge(e).v == g.edge(d.edge_to_old[e]).v);
  }
}

TEST_CASE("edge_subgraph is spanning, induced_subgraph compresses") {
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  EdgeSubset keep(3);
  keep.insert(0);
  EdgeSlice s = edge_subgraph(g, keep);
  CHECK(s.graph.order() == 4);  // spanning: all vertices stay
  CHECK(s.graph.size() == 1);
  CHECK(s.edge_to_old[0] == 0);
  CHECK(s.edge_to_new[2] == -1);

  InducedSlice i = induced_subgraph(g, keep);
  CHECK(i.graph.order() == 2);  // only touched vertices
  CHECK(i.graph.size() == 1);
  CHECK(i.vertex_to_old[0] == 0);
  CHECK(i.vertex_to_old[1] == 1);
  CHECK(i.vertex_to_new[3] == -1);
  CHECK(i.edge_to_old[0] == 0);
}

TEST_CASE("subdivide_edge reuses the id slot and appends one fresh id") {
  MultiGraph g(2);
  g.add_edge(0, 1);
  MultiGraph s = subdivide_edge(g, 0);
  CHECK(s.order() == 3);
  CHECK(s.size() == 2);
  // slot 0 joins an old endpoint with the fresh vertex 2; edge 1 the other
  CHECK((s.edge(0).u == 2 || s.edge(0).v == 2));
  CHECK((s.edge(1).u == 2 || s.edge(1).v == 2));
  CHECK(s.degree(2) == 2);
  CHECK(s.degree(0) == 1);
  CHECK(s.degree(1) == 1);
}

TEST_CASE("subdividing a loop yields a doubled edge") {
  MultiGraph g(1);
  g.add_edge(0, 0);
  MultiGraph s = subdivide_edge(g, 0);
  CHECK(s.order() == 2);
  CHECK(s.size() == 2);
  CHECK(s.degree(0) == 2);
  CHECK(s.degree(1) == 2);
  CHECK_FALSE(s.edge(0).is_loop());
  CHECK_FALSE(s.edge(1).is_loop());
}
