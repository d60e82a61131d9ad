#include "oddchrome/tjoin.hpp"

#include <algorithm>

#include "oddchrome/structure.hpp"

namespace oddchrome {

namespace {

void check_t(const MultiGraph& g, const std::vector<VertexId>& t) {
  std::vector<char> seen(g.order(), 0);
  for (VertexId v : t) {
    g.check_vertex(v);
    if (seen[v]) throw std::invalid_argument("T-join: repeated vertex in T");
    seen[v] = 1;
  }
}

// BFS path between two vertices as an edge list (smallest edge ids first in
// tie-breaks because incident lists ascend).
std::vector<EdgeId> find_path(const MultiGraph& g, VertexId a, VertexId b) {
  std::vector<EdgeId> via(g.order(), -1);
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexId> queue{a};
  seen[a] = 1;
  for (size_t qi = 0; qi < queue.size() && !seen[b]; ++qi) {
    VertexId v = queue[qi];
    for (EdgeId e : g.incident(v)) {
      if (g.edge(e).is_loop()) continue;
      VertexId w = g.edge(e).other(v);
      if (seen[w]) continue;
      seen[w] = 1;
      via[w] = e;
      queue.push_back(w);
    }
  }
  if (!seen[b]) throw std::logic_error("find_path: endpoints are disconnected");
  std::vector<EdgeId> path;
  for (VertexId v = b; v != a;) {
    EdgeId e = via[v];
    path.push_back(e);
    v = g.edge(e).other(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Removes every cycle from the subset (xor-ing a cycle contained in H out of
// H just deletes its edges).  Smallest reachable cycle first: scan vertices
// ascending, adjacency in edge-id order.
void drop_cycles(const MultiGraph& g, EdgeSubset& h) {
  for (;;) {
    std::vector<EdgeId> via(g.order(), -2);  // -2 unseen, -1 root
    bool found = false;
    std::vector<EdgeId> cyc;
    for (VertexId s = 0; s < g.order() && !found; ++s) {
      if (via[s] != -2) continue;
      via[s] = -1;
      std::vector<VertexId> stack{s};
      while (!stack.empty() && !found) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : h.to_vector()) {
          const Edge& ed = g.edge(e);
          if (ed.u != v && ed.v != v) continue;
          if (ed.is_loop()) {
            cyc = {e};
            found = true;
            break;
          }
          if (e == via[v]) continue;
          VertexId w = ed.other(v);
          if (via[w] == -2) {
            via[w] = e;
            stack.push_back(w);
          } else {
            // cycle: walk both endpoints up to their meeting point
            cyc.push_back(e);
            std::vector<char> on_v_path(g.order(), 0);
            std::vector<VertexId> vp;
            for (VertexId x = v;;) {
              on_v_path[x] = 1;
              vp.push_back(x);
              if (via[x] == -1) break;
              x = g.edge(via[x]).other(x);
            }
            VertexId meet = w;
            while (!on_v_path[meet]) {
              cyc.push_back(via[meet]);
              meet = g.edge(via[meet]).other(meet);
            }
            for (VertexId x : vp) {
              if (x == meet) break;
              cyc.push_back(via[x]);
            }
            found = true;
            break;
          }
        }
      }
    }
    if (!found) return;
    for (EdgeId e : cyc) h.erase(e);
  }
}

}  // namespace

bool t_join_exists(const MultiGraph& g, const std::vector<VertexId>& t) {
  check_t(g, t);
  Components c = components(g);
  std::vector<int> odd(c.count, 0);
  for (VertexId v : t) odd[c.id[v]] ^= 1;
  return std::none_of(odd.begin(), odd.end(), [](int x) { return x; });
}

EdgeSubset t_join_forest(const MultiGraph& g, const std::vector<VertexId>& t) {
  if (!t_join_exists(g, t))
    throw std::invalid_argument("t_join_forest: |T| odd in some component");
  Components c = components(g);
  std::vector<char> in_t(g.order(), 0);
  for (VertexId v : t) in_t[v] = 1;

  // Pair T-members by DFS discovery order (roots ascending, edges by id).
  std::vector<int> pre(g.order(), -1);
  int timer = 0;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (pre[s] != -1) continue;
    std::vector<std::pair<VertexId, size_t>> st{{s, 0}};
    pre[s] = timer++;
    while (!st.empty()) {
      auto& [v, idx] = st.back();
      if (idx < g.incident(v).size()) {
        EdgeId e = g.incident(v)[idx++];
        VertexId w = g.edge(e).other(v);
        if (pre[w] == -1) {
          pre[w] = timer++;
          st.push_back({w, 0});
        }
      } else {
        st.pop_back();
      }
    }
  }

  EdgeSubset h(g.size());
  std::vector<std::vector<VertexId>> per_comp(c.count);
  for (VertexId v : t) per_comp[c.id[v]].push_back(v);
  for (auto& members : per_comp) {
    std::sort(members.begin(), members.end(),
              [&](VertexId a, VertexId b) { return pre[a] < pre[b]; });
    for (size_t i = 0; i + 1 < members.size(); i += 2)
      for (EdgeId e : find_path(g, members[i], members[i + 1])) h.toggle(e);
  }

  drop_cycles(g, h);
  return h;
}

EdgeSubset t_join_coforest(const MultiGraph& g, const std::vector<VertexId>& t) {
  if (!t_join_exists(g, t))
    throw std::invalid_argument("t_join_coforest: |T| odd in some component");
  check_t(g, t);
  std::vector<char> in_t(g.order(), 0);
  for (VertexId v : t) in_t[v] = 1;

  // The complement F must be a forest with deg_F(v) = deg(v) - [v in T]
  // (mod 2); that is an S-join for S = parity mismatch set below.
  std::vector<VertexId> s;
  for (VertexId v = 0; v < g.order(); ++v)
    if ((g.degree(v) - (in_t[v] ? 1 : 0)) % 2 != 0) s.push_back(v);
  EdgeSubset forest = t_join_forest(g, s);
  return edge_complement(g, forest);
}

EdgeSubset spanning_odd_coforest(const MultiGraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("spanning_odd_coforest: graph is disconnected");
  if (g.order() % 2 != 0)
    throw std::invalid_argument("spanning_odd_coforest: order must be even");
  std::vector<VertexId> all(g.order());
  for (VertexId v = 0; v < g.order(); ++v) all[v] = v;
  return t_join_coforest(g, all);
}

EdgeSubset coforest_avoiding_vertex(const MultiGraph& g, VertexId v, EdgeId e,
                                    const std::vector<VertexId>& t) {
  g.check_vertex(v);
  g.check_edge(e);
  if (g.edge(e).u != v && g.edge(e).v != v)
    throw std::invalid_argument("coforest_avoiding_vertex: e not incident to v");
  for (EdgeId f = 0; f < g.size(); ++f)
    if (g.edge(f).is_loop())
      throw std::invalid_argument("coforest_avoiding_vertex: graph has loops");
  if (!is_connected(g))
    throw std::invalid_argument("coforest_avoiding_vertex: graph is disconnected");
  BlockDecomposition bd = blocks(g);
  if (std::find(bd.cut_vertices.begin(), bd.cut_vertices.end(), v) !=
      bd.cut_vertices.end())
    throw std::invalid_argument("coforest_avoiding_vertex: v is a cut vertex");
  if (!t_join_exists(g, t))
    throw std::invalid_argument("coforest_avoiding_vertex: |T| odd");

  // The complement forest F must avoid E(v) \ {e} entirely, so it is an
  // S-join forest of g minus those edges; v internal keeps that connected.
  std::vector<EdgeId> del;
  for (EdgeId f : g.incident(v))
    if (f != e) del.push_back(f);
  EdgeDeletion gp = remove_edges(g, del);

  std::vector<char> in_t(g.order(), 0);
  for (VertexId w : t) in_t[w] = 1;
  std::vector<VertexId> s;
  for (VertexId w = 0; w < g.order(); ++w)
    if ((g.degree(w) - (in_t[w] ? 1 : 0)) % 2 != 0) s.push_back(w);

  EdgeSubset forest_in_gp = t_join_forest(gp.graph, s);
  EdgeSubset forest(g.size());
  for (EdgeId f = 0; f < gp.graph.size(); ++f)
    if (forest_in_gp.contains(f)) forest.insert(gp.edge_to_old[f]);
  return edge_complement(g, forest);
}

}  // namespace oddchrome
