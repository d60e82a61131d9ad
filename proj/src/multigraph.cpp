#include "oddchrome/multigraph.hpp"

#include <algorithm>

namespace oddchrome {

Bouquet bouquet(const MultiGraph& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw std::invalid_argument("bouquet: endpoints must differ");
  Bouquet b;
  b.u = u;
  b.v = v;
  for (EdgeId e : g.incident(u)) {
    const Edge& ed = g.edge(e);
    if (!ed.is_loop() && ed.other(u) == v) b.edges.push_back(e);
  }
  std::sort(b.edges.begin(), b.edges.end());
  return b;
}

SuppressResult suppress(const MultiGraph& g, VertexId v) {
  if (g.degree(v) != 2)
    throw std::invalid_argument("suppress: vertex " + std::to_string(v) +
                                " has degree " + std::to_string(g.degree(v)));
  if (g.has_loop_at(v))
    throw std::invalid_argument("suppress: vertex " + std::to_string(v) +
                                " is unsuppressible (degree 2 via a loop)");

  EdgeId e1 = -1, e2 = -1;
  for (EdgeId e : g.incident(v)) (e1 == -1 ? e1 : e2) = e;
  VertexId a = g.edge(e1).other(v);
  VertexId b = g.edge(e2).other(v);

  SuppressResult r;
  r.graph = MultiGraph(g.order() - 1);
  r.vertex_to_new.assign(g.order(), -1);
  for (VertexId w = 0, next = 0; w < g.order(); ++w)
    if (w != v) r.vertex_to_new[w] = next++;

  r.edge_to_new.assign(g.size(), -1);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (e == e1 || e == e2) continue;
    const Edge& ed = g.edge(e);
    r.edge_to_new[e] =
        r.graph.add_edge(r.vertex_to_new[ed.u], r.vertex_to_new[ed.v]);
  }
  r.new_edge = r.graph.add_edge(r.vertex_to_new[a], r.vertex_to_new[b]);
  return r;
}

MultiGraph split(const MultiGraph& g, VertexId v,
                 const std::vector<EdgeId>& side1,
                 const std::vector<EdgeId>& side2) {
  g.check_vertex(v);
  std::vector<int> where(g.size(), 0);
  for (EdgeId e : side1) {
    g.check_edge(e);
    if (where[e]) throw std::invalid_argument("split: duplicate edge in partition");
    where[e] = 1;
  }
  for (EdgeId e : side2) {
    g.check_edge(e);
    if (where[e]) throw std::invalid_argument("split: duplicate edge in partition");
    where[e] = 2;
  }
  for (EdgeId e : g.incident(v))
    if (!where[e])
      throw std::invalid_argument("split: partition does not cover E(v)");
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!where[e]) continue;
    const Edge& ed = g.edge(e);
    if (ed.u != v && ed.v != v)
      throw std::invalid_argument("split: edge " + std::to_string(e) +
                                  " is not incident to the split vertex");
  }

  MultiGraph out(g.order() + 1);
  VertexId vpp = g.order();
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    VertexId u = ed.u, w = ed.v;
    if (where[e] == 2) {
      if (u == v) u = vpp;
      if (w == v) w = vpp;
    }
    out.add_edge(u, w);
  }
  return out;
}

EdgeSubset edge_complement(const MultiGraph& g, const EdgeSubset& h) {
  if (h.host_size() != g.size())
    throw std::invalid_argument("edge_complement: subset host mismatch");
  return EdgeSubset::full(g.size()) ^ h;
}

EdgeSubset symmetric_difference(const EdgeSubset& a, const EdgeSubset& b) {
  return a ^ b;
}

bool is_odd_graph(const MultiGraph& g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 == 0) return false;
  return true;
}

bool is_even_graph(const MultiGraph& g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 == 1) return false;
  return true;
}

VertexDeletion remove_vertex(const MultiGraph& g, VertexId v) {
  g.check_vertex(v);
  VertexDeletion r;
  r.graph = MultiGraph(g.order() - 1);
  r.vertex_to_new.assign(g.order(), -1);
  for (VertexId w = 0, next = 0; w < g.order(); ++w)
    if (w != v) r.vertex_to_new[w] = next++;
  r.edge_to_new.assign(g.size(), -1);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == v || ed.v == v) continue;
    r.edge_to_new[e] = r.graph.add_edge(r.vertex_to_new[ed.u], r.vertex_to_new[ed.v]);
    r.edge_to_old.push_back(e);
  }
  return r;
}

EdgeDeletion remove_edges(const MultiGraph& g, const std::vector<EdgeId>& del) {
  std::vector<char> drop(g.size(), 0);
  for (EdgeId e : del) {
    g.check_edge(e);
    drop[e] = 1;
  }
  EdgeDeletion r;
  r.graph = MultiGraph(g.order());
  r.edge_to_new.assign(g.size(), -1);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (drop[e]) continue;
    r.edge_to_new[e] = r.graph.add_edge(g.edge(e).u, g.edge(e).v);
    r.edge_to_old.push_back(e);
  }
  return r;
}

EdgeSlice edge_subgraph(const MultiGraph& g, const EdgeSubset& keep) {
  if (keep.host_size() != g.size())
    throw std::invalid_argument("edge_subgraph: subset host mismatch");
  EdgeSlice r;
  r.graph = MultiGraph(g.order());
  r.edge_to_new.assign(g.size(), -1);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!keep.contains(e)) continue;
    r.edge_to_new[e] = r.graph.add_edge(g.edge(e).u, g.edge(e).v);
    r.edge_to_old.push_back(e);
  }
  return r;
}

InducedSlice induced_subgraph(const MultiGraph& g, const EdgeSubset& keep) {
  if (keep.host_size() != g.size())
    throw std::invalid_argument("induced_subgraph: subset host mismatch");
  InducedSlice r;
  r.vertex_to_new.assign(g.order(), -1);
  std::vector<VertexId> touched;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!keep.contains(e)) continue;
    for (VertexId w : {g.edge(e).u, g.edge(e).v})
      if (r.vertex_to_new[w] == -1) {
        r.vertex_to_new[w] = 0;  // mark
        touched.push_back(w);
      }
  }
  std::sort(touched.begin(), touched.end());
  r.graph = MultiGraph(static_cast<int>(touched.size()));
  for (size_t i = 0; i < touched.size(); ++i) r.vertex_to_new[touched[i]] = static_cast<int>(i);
  r.vertex_to_old = touched;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!keep.contains(e)) continue;
    r.graph.add_edge(r.vertex_to_new[g.edge(e).u], r.vertex_to_new[g.edge(e).v]);
    r.edge_to_old.push_back(e);
  }
  return r;
}

MultiGraph subdivide_edge(const MultiGraph& g, EdgeId e) {
  g.check_edge(e);
  MultiGraph out(g.order() + 1);
  VertexId x = g.order();
  for (EdgeId f = 0; f < g.size(); ++f) {
    if (f == e)
      out.add_edge(g.edge(f).u, x);
    else
      out.add_edge(g.edge(f).u, g.edge(f).v);
  }
  out.add_edge(x, g.edge(e).v);
  return out;
}

}  // namespace oddchrome
