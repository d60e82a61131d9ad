#include "oddchrome/sclass.hpp"

#include <algorithm>

#include "oddchrome/structure.hpp"

namespace oddchrome {

bool is_in_s(const MultiGraph& g) {
  for (VertexId v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d % 2 == 0 && d != 2) return false;  // covers isolated vertices
  }
  Components c = components(g);
  std::vector<char> has_branch(c.count, 0);
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 == 1) has_branch[c.id[v]] = 1;
  return std::all_of(has_branch.begin(), has_branch.end(),
                     [](char b) { return b != 0; });
}

bool is_in_s_by_suppression(const MultiGraph& g) {
  MultiGraph cur = g;
  for (;;) {
    VertexId pick = -1;
    for (VertexId v = 0; v < cur.order() && pick == -1; ++v)
      if (cur.degree(v) == 2 && !cur.has_loop_at(v)) pick = v;
    if (pick == -1) break;
    cur = suppress(cur, pick).graph;
  }
  return is_odd_graph(cur);
}

SubdivisionStructure subdivision_structure(const MultiGraph& g) {
  if (!is_in_s(g))
    throw std::invalid_argument("subdivision_structure: graph not in S");

  SubdivisionStructure s;
  s.g_to_base.assign(g.order(), -1);
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 == 1) {
      s.g_to_base[v] = static_cast<VertexId>(s.base_to_g.size());
      s.base_to_g.push_back(v);
    }

  s.base = MultiGraph(static_cast<int>(s.base_to_g.size()));
  s.thread_of_edge.assign(g.size(), -1);
  std::vector<char> seen(g.size(), 0);

  for (VertexId v : s.base_to_g) {
    for (EdgeId e : g.incident(v)) {
      if (seen[e]) continue;
      Thread t;
      t.a = v;
      VertexId cur_v = v;
      EdgeId cur_e = e;
      for (;;) {
        seen[cur_e] = 1;
        t.edges.push_back(cur_e);
        VertexId nxt = g.edge(cur_e).other(cur_v);
        if (s.g_to_base[nxt] != -1) {
          t.b = nxt;
          break;
        }
        t.inner.push_back(nxt);
        EdgeId next_e = -1;
        for (EdgeId f : g.incident(nxt))
          if (f != cur_e) next_e = f;
        if (next_e == -1)
          throw std::logic_error("subdivision_structure: dead-end thread");
        cur_v = nxt;
        cur_e = next_e;
      }
      int idx = static_cast<int>(s.threads.size());
      for (EdgeId f : t.edges) s.thread_of_edge[f] = idx;
      s.base.add_edge(s.g_to_base[t.a], s.g_to_base[t.b]);
      s.threads.push_back(std::move(t));
    }
  }

  for (EdgeId e = 0; e < g.size(); ++e)
    if (s.thread_of_edge[e] == -1)
      throw std::logic_error("subdivision_structure: unreached edge");
  if (!is_odd_graph(s.base))
    throw std::logic_error("subdivision_structure: base graph not odd");
  return s;
}

ParityQuotient parity_quotient(const SubdivisionStructure& s) {
  EdgeSubset keep(s.base.size());
  for (EdgeId e = 0; e < s.base.size(); ++e)
    if (s.threads[e].even_label()) keep.insert(e);
  EdgeSlice even_part = edge_subgraph(s.base, keep);
  Components c = components(even_part.graph);

  ParityQuotient q;
  q.component_of = c.id;
  q.h = MultiGraph(c.count);
  for (EdgeId e = 0; e < s.base.size(); ++e) {
    if (s.threads[e].even_label()) continue;
    const Edge& ed = s.base.edge(e);
    q.h.add_edge(c.id[ed.u], c.id[ed.v]);
    q.edge_origin.push_back(e);
  }
  return q;
}

bool chi_le_2(const MultiGraph& g) {
  if (!is_in_s(g)) throw std::invalid_argument("chi_le_2: graph not in S");
  SubdivisionStructure s = subdivision_structure(g);
  return is_bipartite(parity_quotient(s).h);
}

EdgeColoring color2(const MultiGraph& g) {
  if (!is_in_s(g)) throw std::invalid_argument("color2: graph not in S");
  bool has_two_vertex = false;
  for (VertexId v = 0; v < g.order(); ++v) has_two_vertex |= g.degree(v) == 2;
  if (!has_two_vertex)
    throw std::invalid_argument("color2: no 2-vertex (one color suffices)");

  SubdivisionStructure s = subdivision_structure(g);
  ParityQuotient q = parity_quotient(s);
  auto side = bipartition(q.h);
  if (!side) throw std::invalid_argument("color2: index exceeds 2");

  EdgeColoring col(g.size());
  for (const Thread& t : s.threads) {
    int start = (*side)[q.component_of[s.g_to_base[t.a]]] + 1;  // 1 or 2
    for (int j = 0; j < t.length(); ++j)
      col.color[t.edges[j]] = (j % 2 == 0) ? start : 3 - start;
  }

  VerifyResult check = verify_odd(g, col);
  if (!check.ok) throw std::logic_error("color2: construction failed");
  if (col.used_colors() != 2) throw std::logic_error("color2: color count off");
  return col;
}

}  // namespace oddchrome
