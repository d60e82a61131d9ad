#include "oddchrome/structure.hpp"

#include <algorithm>
#include <functional>

namespace oddchrome {

Components components(const MultiGraph& g) {
  Components c;
  c.id.assign(g.order(), -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (c.id[s] != -1) continue;
    int comp = c.count++;
    c.id[s] = comp;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.edge(e).other(v);
        if (c.id[w] == -1) {
          c.id[w] = comp;
          stack.push_back(w);
        }
      }
    }
  }
  return c;
}

bool is_connected(const MultiGraph& g) { return components(g).count <= 1; }

BlockDecomposition blocks(const MultiGraph& g) {
  BlockDecomposition out;
  int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> raw_blocks;
  int timer = 0;

  // Iterative DFS over non-loop edges; each loop becomes its own block below.
  struct Frame {
    VertexId v;
    EdgeId via;  // tree edge into v, -1 at roots
    size_t idx = 0;
  };

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> st;
    st.push_back({root, -1});
    disc[root] = low[root] = timer++;
    while (!st.empty()) {
      VertexId v = st.back().v;
      EdgeId via = st.back().via;
      const auto& inc = g.incident(v);
      if (st.back().idx < inc.size()) {
        EdgeId e = inc[st.back().idx++];
        if (e == via || g.edge(e).is_loop()) continue;
        VertexId w = g.edge(e).other(v);
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          st.push_back({w, e});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        st.pop_back();
        if (!st.empty()) {
          VertexId p = st.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            // p separates v's subtree: pop the block, tree edge inclusive.
            std::vector<EdgeId> blk;
            EdgeId e;
            do {
              e = edge_stack.back();
              edge_stack.pop_back();
              blk.push_back(e);
            } while (e != via);
            raw_blocks.push_back(std::move(blk));
          }
        }
      }
    }
  }

  // A vertex is a cut vertex iff removing it increases the component count.
  std::vector<char> is_cut(n, 0);
  int base = components(g).count;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    if (components(remove_vertex(g, v).graph).count > base) is_cut[v] = 1;
  }

  for (EdgeId e = 0; e < g.size(); ++e)
    if (g.edge(e).is_loop()) raw_blocks.push_back({e});

  std::sort(raw_blocks.begin(), raw_blocks.end(),
            [](const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
              return *std::min_element(a.begin(), a.end()) <
                     *std::min_element(b.begin(), b.end());
            });

  out.blocks_at.assign(n, {});
  for (auto& blk : raw_blocks) {
    EdgeSubset s(g.size());
    std::vector<char> seen(n, 0);
    for (EdgeId e : blk) {
      s.insert(e);
      for (VertexId w : {g.edge(e).u, g.edge(e).v})
        if (!seen[w]) {
          seen[w] = 1;
          out.blocks_at[w].push_back(static_cast<int>(out.blocks.size()));
        }
    }
    out.blocks.push_back(std::move(s));
  }
  for (VertexId v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

std::vector<EdgeId> bridges(const MultiGraph& g) {
  std::vector<EdgeId> out;
  for (const EdgeSubset& b : blocks(g).blocks) {
    if (b.count() != 1) continue;
    EdgeId e = b.to_vector()[0];
    if (!g.edge(e).is_loop()) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> bipartition(const MultiGraph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        if (g.edge(e).is_loop()) return std::nullopt;
        VertexId w = g.edge(e).other(v);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_bipartite(const MultiGraph& g) { return bipartition(g).has_value(); }

bool is_two_connected(const MultiGraph& g) {
  if (g.order() < 2 || g.size() < 1) return false;
  if (!is_connected(g)) return false;
  return blocks(g).cut_vertices.empty();
}

bool is_trivial_block(const MultiGraph& g) {
  return g.order() == 2 && g.size() == 1 && !g.edge(0).is_loop();
}

namespace {

// Component count after deleting a set of edges.
int components_without(const MultiGraph& g, std::initializer_list<EdgeId> del) {
  std::vector<char> drop(g.size(), 0);
  for (EdgeId e : del) drop[e] = 1;
  std::vector<int> id(g.order(), -1);
  int cnt = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (id[s] != -1) continue;
    ++cnt;
    id[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        if (drop[e]) continue;
        VertexId w = g.edge(e).other(v);
        if (id[w] == -1) {
          id[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return cnt;
}

}  // namespace

std::optional<std::vector<EdgeId>> edge_connectivity_at_most(const MultiGraph& g,
                                                             int k) {
  if (k != 1 && k != 2)
    throw std::invalid_argument("edge_connectivity_at_most: k must be 1 or 2");
  if (!is_connected(g))
    throw std::invalid_argument("edge_connectivity_at_most: graph is disconnected");
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (g.edge(e).is_loop()) continue;
    if (components_without(g, {e}) > 1) return std::vector<EdgeId>{e};
  }
  if (k == 1) return std::nullopt;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (g.edge(e).is_loop()) continue;
    for (EdgeId f = e + 1; f < g.size(); ++f) {
      if (g.edge(f).is_loop()) continue;
      if (components_without(g, {e, f}) > 1) return std::vector<EdgeId>{e, f};
    }
  }
  return std::nullopt;
}

std::optional<TwoEdgeCut> nontrivial_two_edge_cut(const MultiGraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("nontrivial_two_edge_cut: graph is disconnected");
  for (EdgeId f1 = 0; f1 < g.size(); ++f1) {
    if (g.edge(f1).is_loop()) continue;
    for (EdgeId f2 = f1 + 1; f2 < g.size(); ++f2) {
      if (g.edge(f2).is_loop()) continue;
      std::vector<char> drop(g.size(), 0);
      drop[f1] = drop[f2] = 1;
      std::vector<int> id(g.order(), -1);
      int cnt = 0;
      std::vector<VertexId> stack;
      for (VertexId s = 0; s < g.order(); ++s) {
        if (id[s] != -1) continue;
        ++cnt;
        if (cnt > 2) break;
        id[s] = cnt - 1;
        stack.push_back(s);
        while (!stack.empty()) {
          VertexId v = stack.back();
          stack.pop_back();
          for (EdgeId e : g.incident(v)) {
            if (drop[e]) continue;
            VertexId w = g.edge(e).other(v);
            if (id[w] == -1) {
              id[w] = cnt - 1;
              stack.push_back(w);
            }
          }
        }
      }
      if (cnt != 2) continue;
      // both edges must cross the split
      if (id[g.edge(f1).u] == id[g.edge(f1).v]) continue;
      if (id[g.edge(f2).u] == id[g.edge(f2).v]) continue;
      int side_x = id[std::min(g.edge(f1).u, g.edge(f1).v)];
      TwoEdgeCut cut;
      cut.f1 = f1;
      cut.f2 = f2;
      for (VertexId v = 0; v < g.order(); ++v)
        (id[v] == side_x ? cut.x : cut.x_bar).push_back(v);
      if (cut.x.size() >= 2 && cut.x_bar.size() >= 2) return cut;
    }
  }
  return std::nullopt;
}

namespace {

struct CycleSearch {
  const MultiGraph& g;
  int min_order;
  int max_order;  // do not grow the path beyond this many vertices
  VertexId start;
  std::optional<VertexId> must_visit;
  std::vector<char> on_path;
  std::vector<char> edge_used;
  std::vector<EdgeId> path_edges;
  std::vector<VertexId> path_vertices;  // starts with `start`

  explicit CycleSearch(const MultiGraph& g_) : g(g_) {}

  bool dfs(VertexId v) {
    for (EdgeId e : g.incident(v)) {
      if (edge_used[e]) continue;
      VertexId w = g.edge(e).is_loop() ? v : g.edge(e).other(v);
      if (w == start) {
        // closure: the path is simple and e is an unused edge, so any return
        // to the start yields a simple cycle (loop = length 1, parallel
        // pair = length 2)
        int order = static_cast<int>(path_vertices.size());
        bool visits = !must_visit || on_path[*must_visit];
        if (order >= min_order && visits) {
          path_edges.push_back(e);
          return true;
        }
        continue;
      }
      if (g.edge(e).is_loop() || on_path[w]) continue;
      if (static_cast<int>(path_vertices.size()) >= max_order) continue;
      edge_used[e] = 1;
      on_path[w] = 1;
      path_edges.push_back(e);
      path_vertices.push_back(w);
      if (dfs(w)) return true;
      path_vertices.pop_back();
      path_edges.pop_back();
      on_path[w] = 0;
      edge_used[e] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Cycle> cycle_through(const MultiGraph& g,
                                   const std::vector<VertexId>& required,
                                   int min_order) {
  if (required.size() > 2)
    throw std::invalid_argument("cycle_through: at most two required vertices");
  for (VertexId v : required) g.check_vertex(v);

  std::vector<VertexId> starts;
  if (!required.empty())
    starts.push_back(required[0]);
  else
    for (VertexId v = 0; v < g.order(); ++v) starts.push_back(v);

  // Iterative deepening on the cycle order: the bounded depth-first search is
  // exhaustive over simple paths, so the first cap that succeeds yields a
  // cycle of minimum qualifying order.  Callers that accept any cycle get the
  // shortest one, which keeps the rest of the graph available to them.
  for (int cap = std::max(min_order, 1); cap <= g.order(); ++cap) {
    for (VertexId s : starts) {
      CycleSearch cs(g);
      cs.min_order = std::max(min_order, 1);
      cs.max_order = cap;
      cs.start = s;
      if (required.size() == 2) cs.must_visit = required[1];
      if (required.size() == 2 && required[1] == s) cs.must_visit.reset();
      cs.on_path.assign(g.order(), 0);
      cs.edge_used.assign(g.size(), 0);
      cs.on_path[s] = 1;
      cs.path_vertices.push_back(s);
      if (cs.dfs(s)) {
        Cycle c;
        c.edges = cs.path_edges;
        c.vertices = cs.path_vertices;
        return c;
      }
    }
  }
  return std::nullopt;
}

std::vector<Lobe> lobes(const MultiGraph& g, VertexId v) {
  g.check_vertex(v);
  BlockDecomposition bd = blocks(g);
  if (std::find(bd.cut_vertices.begin(), bd.cut_vertices.end(), v) ==
      bd.cut_vertices.end())
    throw std::invalid_argument("lobes: vertex " + std::to_string(v) +
                                " is not a cut vertex");
  VertexDeletion del = remove_vertex(g, v);
  Components comp = components(del.graph);

  // Loops at v attach to no component; give each its own lobe at the end.
  std::vector<std::vector<EdgeId>> groups(comp.count);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop() && ed.u == v) continue;
    VertexId probe = (ed.u == v) ? ed.v : ed.u;
    groups[comp.id[del.vertex_to_new[probe]]].push_back(e);
  }

  std::vector<Lobe> out;
  for (auto& grp : groups) {
    if (grp.empty()) continue;
    EdgeSubset keep(g.size());
    for (EdgeId e : grp) keep.insert(e);
    InducedSlice slice = induced_subgraph(g, keep);
    out.push_back({std::move(slice.graph), std::move(slice.vertex_to_old),
                   std::move(slice.edge_to_old)});
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!(g.edge(e).is_loop() && g.edge(e).u == v)) continue;
    MultiGraph lg(1);
    lg.add_edge(0, 0);
    out.push_back({std::move(lg), {v}, {e}});
  }
  return out;
}

}  // namespace oddchrome
