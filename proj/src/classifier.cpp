#include "oddchrome/classifier.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "oddchrome/family.hpp"
#include "oddchrome/oracle.hpp"
#include "oddchrome/sclass.hpp"
#include "oddchrome/structure.hpp"
#include "oddchrome/tjoin.hpp"

namespace oddchrome {

namespace {

std::vector<VertexId> two_vertices(const MultiGraph& g) {
  std::vector<VertexId> out;
  for (VertexId x = 0; x < g.order(); ++x)
    if (g.degree(x) == 2) out.push_back(x);
  return out;
}

// Three-colors g from a connected even-degree subgraph H spanning an even
// number of vertices: H has a spanning odd-degree subgraph K (a T-join with
// every H-vertex in T), and K -> 1, H\K -> 2, rest -> 3 is odd everywhere:
// at an H-vertex the three class sizes are d_K (odd), d_H - d_K (even minus
// odd) and d_G - d_H (odd minus even); elsewhere everything is in class 3.
std::optional<EdgeColoring> color_from_even_subgraph(const MultiGraph& g,
                                                     const EdgeSubset& h) {
  InducedSlice slice = induced_subgraph(g, h);
  const MultiGraph& hg = slice.graph;
  if (hg.order() == 0 || hg.order() % 2 != 0) return std::nullopt;
  if (!is_connected(hg)) return std::nullopt;
  for (VertexId x = 0; x < hg.order(); ++x)
    if (hg.degree(x) % 2 != 0) return std::nullopt;
  std::vector<VertexId> t(hg.order());
  std::iota(t.begin(), t.end(), 0);
  if (!t_join_exists(hg, t)) return std::nullopt;
  EdgeSubset k = t_join_forest(hg, t);
  EdgeColoring col(g.size(), 3);
  for (EdgeId e = 0; e < hg.size(); ++e)
    col.color[slice.edge_to_old[e]] = k.contains(e) ? 1 : 2;
  if (!verify_odd(g, col).ok) return std::nullopt;
  return col;
}

// Escape hatch of the augmentation: a second cycle meeting the first in
// exactly one vertex other than the 2-vertex yields a connected even-degree
// subgraph of even order (the first cycle is odd, the second even, one shared
// vertex), which three-colors the whole graph directly.
std::optional<EdgeColoring> cycle_pair_escape(const MultiGraph& g, VertexId v,
                                              const Cycle& c) {
  std::vector<char> on_c(g.order(), 0);
  for (VertexId x : c.vertices) on_c[x] = 1;
  EdgeSubset c_edges(g.size());
  for (EdgeId e : c.edges) c_edges.insert(e);
  for (VertexId s : c.vertices) {
    if (s == v) continue;
    EdgeSubset keep(g.size());
    for (EdgeId e = 0; e < g.size(); ++e) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      bool ok_u = !on_c[ed.u] || ed.u == s;
      bool ok_w = !on_c[ed.v] || ed.v == s;
      if (ok_u && ok_w) keep.insert(e);
    }
    EdgeSlice sub = edge_subgraph(g, keep);
    std::optional<Cycle> c2 = cycle_through(sub.graph, {s}, 1);
    if (!c2) continue;
    EdgeSubset h = c_edges;
    for (EdgeId e : c2->edges) h.insert(sub.edge_to_old[e]);
    std::optional<EdgeColoring> col = color_from_even_subgraph(g, h);
    if (col) return col;
  }
  return std::nullopt;
}

// One absorbed unit of the augmentation: either the whole parallel bouquet
// between two adjacent path vertices, or a path leaving the head and
// returning to the cycle path further along.
struct AugStep {
  VertexId from = -1;
  VertexId to = -1;
  bool is_path = false;
  std::vector<EdgeId> edges;  // bouquet extras, or path edges ordered from
                              // `from` to `to`
};

struct Augmentation {
  const MultiGraph& g;
  std::vector<char> in_h_edge;
  std::vector<char> in_h_vertex;
  std::vector<char> in_stack;
  std::vector<int> dh;
  std::vector<int> pos;  // position along P, -1 off P
  std::vector<VertexId> p;

  explicit Augmentation(const MultiGraph& g_)
      : g(g_),
        in_h_edge(g_.size(), 0),
        in_h_vertex(g_.order(), 0),
        in_stack(g_.order(), 0),
        dh(g_.order(), 0),
        pos(g_.order(), -1) {}

  void absorb(EdgeId e) {
    in_h_edge[e] = 1;
    const Edge& ed = g.edge(e);
    ++dh[ed.u];
    ++dh[ed.v];
    in_h_vertex[ed.u] = 1;
    in_h_vertex[ed.v] = 1;
  }

  // Grows H from `head` toward the end of P indicated by dir (-1 toward
  // p.front(), +1 toward p.back()) until the head has no edges outside H.
  // Returns false when the graph's structure does not match the shape the
  // construction expects.
  bool run_side(VertexId head, int dir, std::vector<AugStep>& steps) {
    while (true) {
      int gap = g.degree(head) - dh[head];
      if (gap == 0) return true;
      if (gap < 0) return false;
      std::vector<EdgeId> rem;
      for (EdgeId e : g.incident(head))
        if (!in_h_edge[e]) rem.push_back(e);
      if (static_cast<int>(rem.size()) != gap) return false;
      if (gap > 1) {
        // All remaining edges must form the bouquet to the next path vertex
        // in the direction of travel.
        int hp = pos[head];
        if (hp < 0) return false;
        int yp = hp + dir;
        if (yp < 0 || yp >= static_cast<int>(p.size())) return false;
        VertexId y = p[yp];
        if (in_stack[y]) return false;
        for (EdgeId e : rem)
          if (g.edge(e).is_loop() || g.edge(e).other(head) != y) return false;
        for (EdgeId e : rem) absorb(e);
        steps.push_back({head, y, false, rem});
        in_stack[y] = 1;
        head = y;
      } else {
        EdgeId e0 = rem[0];
        if (g.edge(e0).is_loop()) return false;
        VertexId y0 = g.edge(e0).other(head);
        auto lands_ok = [&](VertexId t) {
          if (in_stack[t]) return false;
          return dir < 0 ? pos[t] < pos[head] : pos[t] > pos[head];
        };
        if (pos[y0] >= 0) {
          if (!lands_ok(y0)) return false;
          absorb(e0);
          steps.push_back({head, y0, true, {e0}});
          in_stack[y0] = 1;
          head = y0;
        } else {
          if (in_h_vertex[y0]) return false;
          // Walk through vertices off the cycle (and off H) until an edge
          // back to a usable path vertex appears; breadth-first for a short,
          // deterministic detour.
          std::vector<EdgeId> parent(g.order(), -1);
          std::vector<char> seen(g.order(), 0);
          std::queue<VertexId> bfs;
          seen[y0] = 1;
          bfs.push(y0);
          VertexId land = -1, exit_vertex = -1;
          EdgeId exit_edge = -1;
          while (!bfs.empty() && land < 0) {
            VertexId q = bfs.front();
            bfs.pop();
            for (EdgeId e : g.incident(q)) {
              if (in_h_edge[e] || g.edge(e).is_loop()) continue;
              VertexId r = g.edge(e).other(q);
              if (pos[r] >= 0) {
                if (lands_ok(r)) {
                  land = r;
                  exit_vertex = q;
                  exit_edge = e;
                  break;
                }
                continue;
              }
              if (seen[r] || in_h_vertex[r]) continue;
              seen[r] = 1;
              parent[r] = e;
              bfs.push(r);
            }
          }
          if (land < 0) return false;
          std::vector<EdgeId> path;
          for (VertexId q = exit_vertex; q != y0;) {
            EdgeId pe = parent[q];
            path.push_back(pe);
            q = g.edge(pe).other(q);
          }
          std::reverse(path.begin(), path.end());
          std::vector<EdgeId> edges;
          edges.push_back(e0);
          edges.insert(edges.end(), path.begin(), path.end());
          edges.push_back(exit_edge);
          for (EdgeId e : edges) absorb(e);
          steps.push_back({head, land, true, edges});
          in_stack[land] = 1;
          head = land;
        }
      }
    }
  }
};

EdgeColoring extend_loop_colors(const MultiGraph& g, EdgeColoring col,
                                int prefer_limit) {
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!g.edge(e).is_loop() || col.color[e] != 0) continue;
    VertexId x = g.edge(e).u;
    // Loops contribute an even amount to every class at x, so only the
    // non-loop edges decide which colors appear an odd number of times.
    std::vector<int> cnt;
    for (EdgeId f : g.incident(x)) {
      if (g.edge(f).is_loop()) continue;
      int c = col.color[f];
      if (c <= 0) continue;
      if (c >= static_cast<int>(cnt.size())) cnt.resize(c + 1, 0);
      ++cnt[c];
    }
    int pick = -1;
    for (int c = 1; c < static_cast<int>(cnt.size()); ++c)
      if (cnt[c] % 2 == 1 && c <= prefer_limit) {
        pick = c;
        break;
      }
    if (pick < 0)
      for (int c = 1; c < static_cast<int>(cnt.size()); ++c)
        if (cnt[c] % 2 == 1) {
          pick = c;
          break;
        }
    if (pick < 0)
      throw std::logic_error(
          "extend_loop_colors: no color of odd multiplicity at a loop vertex");
    col.color[e] = pick;
  }
  return col;
}

// Strips loops, three-colors the loopless core, then reuses colors of odd
// multiplicity for the loops.
EdgeColoring color_le3_with_loops(const MultiGraph& g) {
  EdgeSubset core_edges(g.size());
  bool any_loop = false;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (g.edge(e).is_loop())
      any_loop = true;
    else
      core_edges.insert(e);
  }
  if (!any_loop) return color3(g);
  EdgeSlice slice = edge_subgraph(g, core_edges);
  EdgeColoring sub = color3(slice.graph);
  EdgeColoring out(g.size());
  for (EdgeId e = 0; e < slice.graph.size(); ++e)
    out.color[slice.edge_to_old[e]] = sub.color[e];
  out = extend_loop_colors(g, std::move(out), 3);
  if (!verify_odd(g, out).ok)
    throw std::logic_error("color_le3_with_loops: extension failed to verify");
  return out;
}

int degree_in_subset(const MultiGraph& g, const EdgeSubset& edges,
                     VertexId v) {
  int d = 0;
  for (EdgeId e : g.incident(v))
    if (edges.contains(e)) d += g.edge(e).is_loop() ? 2 : 1;
  return d;
}

}  // namespace

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::kEmpty:
      return "empty";
    case CaseTag::kOdd:
      return "odd";
    case CaseTag::kQuotientBipartite:
      return "quotient-bipartite";
    case CaseTag::kFamilyF:
      return "family-F";
    case CaseTag::kOtherwise:
      return "otherwise";
  }
  return "unknown";
}

EdgeColoring color3_via_augmentation(const MultiGraph& g) {
  if (!is_connected(g) || !is_two_connected(g))
    throw std::invalid_argument(
        "color3_via_augmentation: graph must be 2-connected");
  if (!is_in_s(g))
    throw std::invalid_argument(
        "color3_via_augmentation: degrees must be odd or exactly two");
  std::vector<VertexId> twos = two_vertices(g);
  if (twos.size() != 1)
    throw std::invalid_argument(
        "color3_via_augmentation: need exactly one 2-vertex");
  if (nontrivial_two_edge_cut(g))
    throw std::invalid_argument(
        "color3_via_augmentation: graph must be essentially 3-edge-connected");
  VertexId v = twos[0];
  if (g.has_loop_at(v))
    throw std::invalid_argument(
        "color3_via_augmentation: the 2-vertex must not carry a loop");
  SuppressResult sup = suppress(g, v);
  if (!is_bipartite(sup.graph) || !is_two_connected(sup.graph) ||
      !is_odd_graph(sup.graph))
    throw std::invalid_argument(
        "color3_via_augmentation: suppression must be 2-connected, bipartite "
        "and of odd degrees");
  int max_deg = 0;
  for (VertexId x = 0; x < g.order(); ++x)
    max_deg = std::max(max_deg, g.degree(x));
  if (max_deg < 5 || g.order() < 5)
    throw std::invalid_argument(
        "color3_via_augmentation: need maximum degree >= 5 and order >= 5");

  std::vector<EdgeId> ev = g.incident(v);
  VertexId u0 = g.edge(ev[0]).other(v);
  VertexId w0 = g.edge(ev[1]).other(v);

  // A cycle through the 2-vertex and a vertex of degree >= 5.  Cycles through
  // the 2-vertex have odd order here, so requiring four distinct vertices on
  // the cycle already forces order >= 5.
  VertexId z0 = -1;
  for (VertexId x = 0; x < g.order(); ++x)
    if (g.degree(x) >= 5) {
      z0 = x;
      break;
    }
  std::optional<Cycle> cyc;
  if (z0 != u0 && z0 != w0) {
    cyc = cycle_through(g, {v, z0}, 5);
  } else {
    VertexId s = -1;
    for (VertexId x = 0; x < g.order(); ++x)
      if (x != u0 && x != v && x != w0) {
        s = x;
        break;
      }
    cyc = cycle_through(g, {v, s}, 5);
  }
  if (!cyc)
    throw ConstructionDivergence(
        "no cycle of order at least five through the 2-vertex");

  // Rotate so the cycle starts at v; then P = C - v runs u .. w.
  Cycle c = *cyc;
  {
    int L = static_cast<int>(c.vertices.size());
    int at = 0;
    while (c.vertices[at] != v) ++at;
    std::rotate(c.vertices.begin(), c.vertices.begin() + at, c.vertices.end());
    std::rotate(c.edges.begin(), c.edges.begin() + at, c.edges.end());
    (void)L;
  }
  int L = static_cast<int>(c.vertices.size());

  Augmentation aug(g);
  aug.p.assign(c.vertices.begin() + 1, c.vertices.end());
  int np = static_cast<int>(aug.p.size());
  for (int i = 0; i < np; ++i) aug.pos[aug.p[i]] = i;
  std::vector<EdgeId> pedge(c.edges.begin() + 1, c.edges.end() - 1);
  EdgeId e_uv = c.edges[0];
  EdgeId e_vw = c.edges[L - 1];

  auto escape_or_throw = [&](const char* msg) -> EdgeColoring {
    std::optional<EdgeColoring> esc = cycle_pair_escape(g, v, c);
    if (esc) return *esc;
    throw ConstructionDivergence(msg);
  };

  // An odd parallel bouquet of size >= 3 between adjacent interior vertices
  // of P seeds the even subgraph.
  int bq = -1;
  for (int i = 1; i + 1 <= np - 2; ++i) {
    Bouquet b = bouquet(g, aug.p[i], aug.p[i + 1]);
    if (b.size() >= 3 && b.size() % 2 == 1) {
      bq = i;
      break;
    }
  }
  if (bq < 0)
    return escape_or_throw(
        "no odd parallel bouquet of size >= 3 along the cycle");

  VertexId z = aug.p[bq];
  VertexId zb = aug.p[bq + 1];
  EdgeId e_zzb = pedge[bq];

  for (EdgeId e : c.edges) aug.absorb(e);
  Bouquet seed = bouquet(g, z, zb);
  std::vector<EdgeId> seed_extras;
  for (EdgeId e : seed.edges)
    if (e != e_zzb) {
      aug.absorb(e);
      seed_extras.push_back(e);
    }

  aug.in_stack[z] = 1;
  aug.in_stack[zb] = 1;
  std::vector<AugStep> steps_u, steps_w;
  if (!aug.run_side(z, -1, steps_u))
    return escape_or_throw("absorption toward the first path end failed");
  if (!aug.run_side(zb, +1, steps_w))
    return escape_or_throw("absorption toward the second path end failed");

  // Every H-vertex outside the stacks must be plain: degree exactly two.
  for (VertexId x = 0; x < g.order(); ++x) {
    if (!aug.in_h_vertex[x]) continue;
    if (aug.in_stack[x]) {
      if (aug.dh[x] != g.degree(x))
        return escape_or_throw("a stack vertex kept edges outside H");
    } else if (x != v && aug.dh[x] != 2) {
      return escape_or_throw("a non-stack vertex has degree above two in H");
    }
  }

  // ---- color H with {1,2,3} and the complement with 3 ----
  EdgeColoring col(g.size());
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!aug.in_h_edge[e]) col.color[e] = 3;
  col.color[e_uv] = 1;
  col.color[e_vw] = 2;
  col.color[e_zzb] = 3;

  // Walk P from each end toward the seed bouquet, flipping between 1 and 2
  // at plain vertices and repeating at stack vertices.
  int cur = 1;
  for (int i = 0; i < bq; ++i) {
    if (!aug.in_stack[aug.p[i]]) cur = 3 - cur;
    col.color[pedge[i]] = cur;
  }
  cur = 2;
  for (int i = np - 2; i >= bq + 1; --i) {
    if (!aug.in_stack[aug.p[i + 1]]) cur = 3 - cur;
    col.color[pedge[i]] = cur;
  }

  // The repeated color at each stack vertex.
  std::vector<int> c_at(g.order(), 0);
  for (VertexId x = 0; x < g.order(); ++x) {
    if (!aug.in_stack[x]) continue;
    int i = aug.pos[x];
    c_at[x] = i <= bq ? col.color[pedge[i < bq ? i : bq - 1]]
                      : col.color[pedge[i == bq + 1 ? bq + 1 : i - 1]];
  }

  // Seed bouquet extras: one edge of color 1, the rest color 2 (both class
  // contributions odd since the extras count is even).
  for (std::size_t j = 0; j < seed_extras.size(); ++j)
    col.color[seed_extras[j]] = j == 0 ? 1 : 2;

  for (const std::vector<AugStep>* side : {&steps_u, &steps_w}) {
    for (const AugStep& st : *side) {
      if (!st.is_path) {
        int pc = col.color[pedge[std::min(aug.pos[st.from], aug.pos[st.to])]];
        for (EdgeId e : st.edges) col.color[e] = pc;
      } else {
        int want = c_at[st.from];
        for (std::size_t j = 0; j < st.edges.size(); ++j) {
          col.color[st.edges[j]] = want;
          want = 3 - want;
        }
        if (col.color[st.edges.back()] != c_at[st.to])
          return escape_or_throw(
              "detour parity does not meet the landing vertex color");
      }
    }
  }

  if (!verify_odd(g, col).ok)
    return escape_or_throw("assembled coloring failed verification");
  return col;
}

EdgeColoring color3(const MultiGraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("color3: graph must be connected");
  for (EdgeId e = 0; e < g.size(); ++e)
    if (g.edge(e).is_loop())
      throw std::invalid_argument("color3: graph must be loopless");
  if (g.size() == 0) return EdgeColoring(0);

  if (g.order() % 2 == 0) return even_order_color3(g);

  // Odd order with a pendant vertex: color the even-order rest, then give
  // the pendant edge a color absent at its anchor (the anchor has even
  // degree in the rest, so it sees an even number of classes, at most two).
  for (VertexId x = 0; x < g.order(); ++x) {
    if (g.degree(x) != 1) continue;
    EdgeId f = g.incident(x)[0];
    VertexId w = g.edge(f).other(x);
    VertexDeletion del = remove_vertex(g, x);
    if (!is_connected(del.graph)) continue;
    EdgeColoring sub = even_order_color3(del.graph);
    EdgeColoring out(g.size());
    for (EdgeId e = 0; e < del.graph.size(); ++e)
      out.color[del.edge_to_old[e]] = sub.color[e];
    bool present[4] = {false, false, false, false};
    VertexId w2 = del.vertex_to_new[w];
    for (EdgeId e : del.graph.incident(w2)) {
      int cc = sub.color[e];
      if (cc >= 1 && cc <= 3) present[cc] = true;
    }
    int absent = 0;
    for (int cc = 1; cc <= 3; ++cc)
      if (!present[cc]) {
        absent = cc;
        break;
      }
    if (absent == 0)
      throw std::logic_error("color3: no free color at a pendant anchor");
    out.color[f] = absent;
    if (!verify_odd(g, out).ok)
      throw std::logic_error("color3: pendant reduction failed to verify");
    return out;
  }

  // The constructive route for essentially 3-edge-connected graphs with a
  // single 2-vertex and a bipartite odd suppression.
  std::vector<VertexId> twos = two_vertices(g);
  bool aug_shape = twos.size() == 1 && is_two_connected(g) &&
                   !nontrivial_two_edge_cut(g) && !g.has_loop_at(twos[0]);
  if (aug_shape) {
    SuppressResult sup = suppress(g, twos[0]);
    aug_shape = is_bipartite(sup.graph) && is_two_connected(sup.graph) &&
                is_odd_graph(sup.graph) && g.order() >= 5;
    int max_deg = 0;
    for (VertexId x = 0; x < g.order(); ++x)
      max_deg = std::max(max_deg, g.degree(x));
    aug_shape = aug_shape && max_deg >= 5;
  }
  if (aug_shape) {
    try {
      return color3_via_augmentation(g);
    } catch (const ConstructionDivergence& d) {
      std::cerr << "note: constructive 3-coloring diverged (" << d.what()
                << "); falling back to exact search\n";
    }
  }

  SearchOutcome out = search_k(g, 3);
  if (out.status == SearchStatus::found) return out.coloring;
  if (out.status == SearchStatus::absent)
    throw std::invalid_argument("color3: graph admits no odd 3-coloring");
  throw BudgetExceeded("color3: exact search exceeded its node budget");
}

SingletonColoring color4_singleton(const MultiGraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("color4_singleton: graph must be connected");
  std::vector<VertexId> twos = two_vertices(g);
  if (twos.empty())
    throw std::invalid_argument("color4_singleton: need a 2-vertex");
  if (g.order() % 2 == 0)
    throw std::invalid_argument("color4_singleton: order must be odd");
  VertexId v = -1;
  for (VertexId x : twos)
    if (!g.has_loop_at(x)) {
      v = x;
      break;
    }
  if (v < 0)
    throw std::invalid_argument(
        "color4_singleton: every 2-vertex carries a loop");

  std::vector<EdgeId> at_v = g.incident(v);
  EdgeId e = at_v[0];       // will be the singleton fourth class
  EdgeId f = at_v[1];
  VertexId w = g.edge(f).other(v);

  VertexDeletion del = remove_vertex(g, v);
  if (!is_connected(del.graph))
    throw std::invalid_argument(
        "color4_singleton: the 2-vertex must not be a cut vertex");
  EdgeColoring sub = even_order_color3(del.graph);

  SingletonColoring out;
  out.coloring = EdgeColoring(g.size());
  for (EdgeId ee = 0; ee < del.graph.size(); ++ee)
    out.coloring.color[del.edge_to_old[ee]] = sub.color[ee];

  bool present[4] = {false, false, false, false};
  VertexId w2 = del.vertex_to_new[w];
  for (EdgeId ee : del.graph.incident(w2)) {
    int cc = sub.color[ee];
    if (cc >= 1 && cc <= 3) present[cc] = true;
  }
  int absent = 0;
  for (int cc = 1; cc <= 3; ++cc)
    if (!present[cc]) {
      absent = cc;
      break;
    }
  if (absent == 0)
    throw std::logic_error(
        "color4_singleton: no free color at the 2-vertex's anchor");
  out.coloring.color[f] = absent;
  out.coloring.color[e] = 4;
  out.witness = e;

  if (!verify_odd(g, out.coloring).ok)
    throw std::logic_error("color4_singleton: coloring failed to verify");
  int fourth = 0;
  for (EdgeId ee = 0; ee < g.size(); ++ee)
    if (out.coloring.color[ee] == 4) ++fourth;
  if (fourth != 1)
    throw std::logic_error("color4_singleton: fourth class is not a singleton");
  return out;
}

ChiReport classify(const MultiGraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("classify: graph must be connected");
  ChiReport rep;
  rep.coloring = EdgeColoring(g.size());
  if (g.size() == 0) {
    rep.chi = 0;
    rep.tag = CaseTag::kEmpty;
    return rep;
  }
  if (!is_in_s(g))
    throw std::invalid_argument(
        "classify: every degree must be odd or exactly two, with some odd "
        "vertex per component");

  // Loops never change the answer: each adds two to one class at its vertex.
  // Classify the loopless core, then reuse odd-multiplicity colors for loops.
  EdgeSubset core_edges(g.size());
  bool any_loop = false;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (g.edge(e).is_loop())
      any_loop = true;
    else
      core_edges.insert(e);
  }
  EdgeSlice slice = edge_subgraph(g, core_edges);
  const MultiGraph& core = slice.graph;

  int chi = 0;
  CaseTag tag = CaseTag::kOtherwise;
  EdgeColoring core_col(core.size());
  std::optional<EdgeId> core_witness;

  if (is_odd_graph(core)) {
    chi = 1;
    tag = CaseTag::kOdd;
    core_col.color.assign(core.size(), 1);
  } else if (chi_le_2(core)) {
    chi = 2;
    tag = CaseTag::kQuotientBipartite;
    core_col = color2(core);
  } else {
    BlockDecomposition bd = blocks(core);
    bool four = true;
    for (const EdgeSubset& b : bd.blocks) {
      InducedSlice bs = induced_subgraph(core, b);
      if (!is_in_s(bs.graph) || !is_in_f(bs.graph)) {
        four = false;
        break;
      }
    }
    if (four) {
      for (VertexId cv : bd.cut_vertices) {
        int odd_blocks = 0;
        for (int bi : bd.blocks_at[cv])
          if (degree_in_subset(core, bd.blocks[bi], cv) % 2 == 1) ++odd_blocks;
        if (odd_blocks != 1) {
          four = false;
          break;
        }
      }
    }
    if (four) {
      chi = 4;
      tag = CaseTag::kFamilyF;
      // Structural consequences of needing four colors: 2-vertices are never
      // cut vertices and never adjacent to each other.
      for (VertexId x : two_vertices(core)) {
        if (std::find(bd.cut_vertices.begin(), bd.cut_vertices.end(), x) !=
            bd.cut_vertices.end())
          throw std::logic_error("classify: a 2-vertex is a cut vertex");
        for (EdgeId e : core.incident(x))
          if (core.degree(core.edge(e).other(x)) == 2)
            throw std::logic_error("classify: adjacent 2-vertices");
      }
      SingletonColoring sc = color4_singleton(core);
      core_col = sc.coloring;
      core_witness = sc.witness;
    } else {
      chi = 3;
      tag = CaseTag::kOtherwise;
      core_col = color3(core);
    }
  }

  EdgeColoring full(g.size());
  for (EdgeId e = 0; e < core.size(); ++e)
    full.color[slice.edge_to_old[e]] = core_col.color[e];
  if (any_loop) full = extend_loop_colors(g, std::move(full), 3);

  if (!verify_odd(g, full).ok)
    throw std::logic_error("classify: final coloring failed verification");
  if (full.used_colors() != chi)
    throw std::logic_error("classify: coloring does not use exactly chi colors");

  rep.chi = chi;
  rep.tag = tag;
  rep.coloring = std::move(full);
  if (core_witness) rep.witness_edge = slice.edge_to_old[*core_witness];
  return rep;
}

EdgeColoring color_optimal(const MultiGraph& g) { return classify(g).coloring; }

WitnessReport witness_edge(const MultiGraph& g) {
  ChiReport rep = classify(g);
  if (rep.chi != 4)
    throw std::invalid_argument(
        "witness_edge: the graph does not need four colors");
  EdgeId e = *rep.witness_edge;
  EdgeDeletion del = remove_edges(g, {e});
  EdgeColoring sub = color_le3_with_loops(del.graph);

  WitnessReport out;
  out.edge = e;
  out.coloring = EdgeColoring(g.size());
  for (EdgeId ee = 0; ee < del.graph.size(); ++ee)
    out.coloring.color[del.edge_to_old[ee]] = sub.color[ee];
  return out;
}

}  // namespace oddchrome
