#include "oddchrome/coloring.hpp"

#include <algorithm>

#include "oddchrome/structure.hpp"
#include "oddchrome/tjoin.hpp"

namespace oddchrome {

int EdgeColoring::used_colors() const {
  std::vector<int> seen;
  for (int c : color)
    if (c > 0 && std::find(seen.begin(), seen.end(), c) == seen.end())
      seen.push_back(c);
  return static_cast<int>(seen.size());
}

bool EdgeColoring::complete() const {
  return std::all_of(color.begin(), color.end(), [](int c) { return c >= 1; });
}

void EdgeColoring::normalize() {
  std::map<int, int> remap;
  int next = 1;
  for (int& c : color) {
    if (c <= 0) continue;
    auto it = remap.find(c);
    if (it == remap.end()) it = remap.emplace(c, next++).first;
    c = it->second;
  }
}

LocalParityProfile local_parity_profile(const MultiGraph& g,
                                        const EdgeColoring& c) {
  if (static_cast<int>(c.color.size()) != g.size())
    throw std::invalid_argument("local_parity_profile: coloring size mismatch");
  LocalParityProfile p;
  p.counts.resize(g.order());
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    p.counts[ed.u][c.color[e]] += ed.is_loop() ? 2 : 1;
    if (!ed.is_loop()) p.counts[ed.v][c.color[e]] += 1;
  }
  return p;
}

namespace {

VerifyResult verify_impl(const MultiGraph& g, const EdgeColoring& c,
                         std::optional<VertexId> exempt) {
  if (static_cast<int>(c.color.size()) != g.size())
    throw std::invalid_argument("verify_odd: coloring size mismatch");
  if (!c.complete())
    throw std::invalid_argument("verify_odd: coloring is partial");
  LocalParityProfile p = local_parity_profile(g, c);
  VerifyResult r;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (exempt && *exempt == v) continue;
    for (auto [color, count] : p.counts[v])
      if (count % 2 == 0) r.violations.push_back({v, color, count});
  }
  r.ok = r.violations.empty();
  return r;
}

}  // namespace

VerifyResult verify_odd(const MultiGraph& g, const EdgeColoring& c) {
  return verify_impl(g, c, std::nullopt);
}

VerifyResult verify_odd_away_from(const MultiGraph& g, const EdgeColoring& c,
                                  VertexId v) {
  g.check_vertex(v);
  return verify_impl(g, c, v);
}

EdgeColoring forest_color2(const MultiGraph& f, std::optional<VertexId> v,
                           const std::map<EdgeId, int>& seed) {
  Components comp = components(f);
  if (f.size() != f.order() - comp.count)
    throw std::invalid_argument("forest_color2: input is not acyclic");
  if (v) f.check_vertex(*v);
  if (!seed.empty() && !v)
    throw std::invalid_argument("forest_color2: seed requires a vertex");
  for (auto [e, c] : seed) {
    f.check_edge(e);
    if (c != 1 && c != 2)
      throw std::invalid_argument("forest_color2: seed colors must be 1 or 2");
    if (f.edge(e).u != *v && f.edge(e).v != *v)
      throw std::invalid_argument("forest_color2: seed edge not incident to v");
  }

  EdgeColoring col(f.size());

  // Pick one root per tree: v's tree is rooted at v, every other tree at its
  // smallest leaf.
  std::vector<VertexId> root_of_comp(comp.count, -1);
  if (v) root_of_comp[comp.id[*v]] = *v;
  for (VertexId w = 0; w < f.order(); ++w) {
    int c = comp.id[w];
    if (root_of_comp[c] == -1 && f.degree(w) <= 1) root_of_comp[c] = w;
  }

  struct Item {
    VertexId vertex;
    EdgeId parent_edge;  // -1 at root
    int parent_color;    // 0 at root
  };

  for (int c = 0; c < comp.count; ++c) {
    VertexId root = root_of_comp[c];
    if (root == -1) continue;  // empty tree cannot happen; single vertices skip below
    std::vector<Item> stack{{root, -1, 0}};
    while (!stack.empty()) {
      Item it = stack.back();
      stack.pop_back();
      std::vector<EdgeId> children;
      for (EdgeId e : f.incident(it.vertex))
        if (e != it.parent_edge) children.push_back(e);

      if (it.parent_edge == -1) {
        if (v && it.vertex == *v) {
          for (EdgeId e : children) {
            auto s = seed.find(e);
            col.color[e] = (s != seed.end()) ? s->second : 1;
          }
        } else {
          // leaf root: one child edge, colored 1 (odd count at the root);
          // defensively handle the k-even split for any rootless pick
          int k = static_cast<int>(children.size());
          for (int i = 0; i < k; ++i)
            col.color[children[i]] = (k % 2 == 0 && i == k - 1) ? 2 : 1;
        }
      } else {
        int k = static_cast<int>(children.size());
        int same = it.parent_color;
        int flip = (same == 1) ? 2 : 1;
        for (EdgeId e : children) col.color[e] = (k % 2 == 1) ? flip : same;
      }
      for (EdgeId e : children)
        stack.push_back({f.edge(e).other(it.vertex), e, col.color[e]});
    }
  }
  return col;
}

EdgeColoring around_vertex_color2(const MultiGraph& g, VertexId v) {
  g.check_vertex(v);
  for (EdgeId e = 0; e < g.size(); ++e)
    if (g.edge(e).is_loop())
      throw std::invalid_argument("around_vertex_color2: graph has loops");
  {
    VertexDeletion d = remove_vertex(g, v);
    Components c = components(d.graph);
    if (d.graph.size() != d.graph.order() - c.count)
      throw std::invalid_argument("around_vertex_color2: g - v is not a forest");
  }

  // Detach each edge at v onto its own pendant vertex; edge ids survive, so
  // a coloring of the forest is a coloring of g.
  MultiGraph f(g.order() + g.degree(v));
  int next_pendant = g.order();
  for (EdgeId e = 0; e < g.size(); ++e) {
    VertexId a = g.edge(e).u, b = g.edge(e).v;
    if (a == v) a = next_pendant++;
    if (b == v) b = next_pendant++;
    f.add_edge(a, b);
  }

  EdgeColoring col = forest_color2(f, std::nullopt, {});

  if (g.degree(v) % 2 == 1) {
    // Make color 1 odd at v: swapping colors inside one tree of f preserves
    // oddness everywhere and flips the count at v by that tree's share of
    // E(v); some tree has an odd share because degree(v) is odd.
    int count1 = 0;
    for (EdgeId e : g.incident(v))
      if (col.color[e] == 1) ++count1;
    if (count1 % 2 == 0) {
      Components fc = components(f);
      std::vector<int> share(fc.count, 0);
      for (EdgeId e : g.incident(v)) ++share[fc.id[f.edge(e).u]];
      int target = -1;
      for (int c = 0; c < fc.count && target == -1; ++c)
        if (share[c] % 2 == 1) target = c;
      if (target == -1)
        throw std::logic_error("around_vertex_color2: no odd-share tree");
      for (EdgeId e = 0; e < f.size(); ++e)
        if (fc.id[f.edge(e).u] == target) col.color[e] = 3 - col.color[e];
    }
  }
  return col;
}

namespace {

struct UnicyclicParts {
  Cycle cycle;
  std::vector<char> on_cycle;       // per vertex
  std::vector<char> cycle_edge;     // per edge
  std::vector<VertexId> two_on_c;   // 2-vertices on the cycle
  std::vector<VertexId> even_on_c;  // even degree >= 4 on the cycle
};

UnicyclicParts unicyclic_parts(const MultiGraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("unicyclic: graph is disconnected");
  if (g.size() != g.order())
    throw std::invalid_argument("unicyclic: edge count must equal order");
  for (VertexId v = 0; v < g.order(); ++v) {
    bool non_loop = false;
    for (EdgeId e : g.incident(v)) non_loop |= !g.edge(e).is_loop();
    if (g.degree(v) > 0 && !non_loop)
      throw std::invalid_argument("unicyclic: vertex incident only to loops");
  }
  UnicyclicParts p;
  auto cyc = cycle_through(g, {}, 1);
  if (!cyc) throw std::logic_error("unicyclic: no cycle found");
  p.cycle = *cyc;
  p.on_cycle.assign(g.order(), 0);
  p.cycle_edge.assign(g.size(), 0);
  for (VertexId v : p.cycle.vertices) p.on_cycle[v] = 1;
  for (EdgeId e : p.cycle.edges) p.cycle_edge[e] = 1;
  for (VertexId v : p.cycle.vertices) {
    if (g.degree(v) == 2) p.two_on_c.push_back(v);
    if (g.degree(v) % 2 == 0 && g.degree(v) >= 4) p.even_on_c.push_back(v);
  }
  return p;
}

}  // namespace

int unicyclic_chi(const MultiGraph& g) {
  UnicyclicParts p = unicyclic_parts(g);
  if (is_odd_graph(g))
    throw std::invalid_argument("unicyclic_chi: graph is odd (index 1)");
  return (p.two_on_c.size() % 2 == 1 && p.even_on_c.empty()) ? 3 : 2;
}

bool unicyclic_chi2_special(const MultiGraph& g) {
  UnicyclicParts p = unicyclic_parts(g);
  for (VertexId v : p.cycle.vertices)
    if (g.degree(v) % 2 == 1)
      throw std::invalid_argument(
          "unicyclic_chi2_special: odd-degree vertex on the cycle");
  bool odd_cycle = g.size() == static_cast<int>(p.cycle.edges.size()) &&
                   p.cycle.edges.size() % 2 == 1;
  return !odd_cycle;
}

EdgeColoring unicyclic_color(const MultiGraph& g) {
  UnicyclicParts p = unicyclic_parts(g);
  if (is_odd_graph(g))
    throw std::invalid_argument("unicyclic_color: graph is odd (index 1)");
  int chi = (p.two_on_c.size() % 2 == 1 && p.even_on_c.empty()) ? 3 : 2;

  const auto& ce = p.cycle.edges;
  const auto& cv = p.cycle.vertices;
  int len = static_cast<int>(ce.size());
  EdgeColoring col(g.size());

  // Color the cycle.  Constraint between consecutive edges at cv[i] (which
  // joins ce[i-1] and ce[i]): equal at odd-degree vertices, different at
  // 2-vertices, free at even degree >= 4.
  auto constraint = [&](VertexId v) -> int {  // 0 equal, 1 differ, 2 free
    if (g.degree(v) == 2) return 1;
    if (g.degree(v) % 2 == 1) return 0;
    return 2;
  };

  if (len == 1) {
    col.color[ce[0]] = 1;  // single loop
  } else if (chi == 3) {
    // proper coloring: 1,2 alternating, closing with 3 on odd length
    for (int i = 0; i < len; ++i) col.color[ce[i]] = (i % 2 == 0) ? 1 : 2;
    if (len % 2 == 1) col.color[ce[len - 1]] = 3;
  } else {
    int start = 0;
    for (int i = 0; i < len; ++i)
      if (constraint(cv[i]) == 2) start = i;  // break the chain at a free spot
    col.color[ce[start]] = 1;
    for (int step = 1; step < len; ++step) {
      int i = (start + step) % len;
      int prev = col.color[ce[(i - 1 + len) % len]];
      int cons = constraint(cv[i]);
      col.color[ce[i]] = (cons == 1) ? 3 - prev : (cons == 0 ? prev : 1);
    }
  }

  // Extend into the hanging trees: seed the edges at each cycle vertex so
  // its combined parity per color is odd, then push down with the standard
  // rule (odd child count flips the parent color, even keeps it).
  struct Item {
    VertexId vertex;
    EdgeId parent_edge;
    int parent_color;
  };
  std::vector<Item> stack;

  for (int i = 0; i < len; ++i) {
    VertexId r = cv[i];
    std::vector<EdgeId> children;
    for (EdgeId e : g.incident(r))
      if (!p.cycle_edge[e]) children.push_back(e);
    if (children.empty()) continue;
    int k = static_cast<int>(children.size());

    int c1, c2;  // colors of the two cycle edge-ends at r (loop: both ends)
    if (len == 1) {
      c1 = c2 = col.color[ce[0]];
    } else {
      c1 = col.color[ce[(i - 1 + len) % len]];
      c2 = col.color[ce[i]];
    }

    std::vector<int> assign(k);
    if (c1 == c2) {
      // monochromatic pair (count 2): one child keeps the color when k is
      // even, all keep it when k is odd
      int other = (c1 == 1) ? 2 : 1;
      for (int j = 0; j < k; ++j)
        assign[j] = (k % 2 == 1) ? c1 : (j == 0 ? c1 : other);
    } else if (g.degree(r) % 2 == 1) {
      // dichromatic at an odd vertex (3-color case): use the third color
      int third = 6 - c1 - c2;
      for (int j = 0; j < k; ++j) assign[j] = third;
    } else {
      // dichromatic at an even vertex: all children join one side
      for (int j = 0; j < k; ++j) assign[j] = c2;
    }
    for (int j = 0; j < k; ++j) {
      col.color[children[j]] = assign[j];
      stack.push_back({g.edge(children[j]).other(r), children[j], assign[j]});
    }
  }

  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    std::vector<EdgeId> children;
    for (EdgeId e : g.incident(it.vertex))
      if (e != it.parent_edge) children.push_back(e);
    int k = static_cast<int>(children.size());
    int same = it.parent_color;
    int flip = (same == 1) ? 2 : 1;
    for (EdgeId e : children) {
      col.color[e] = (k % 2 == 1) ? flip : same;
      stack.push_back({g.edge(e).other(it.vertex), e, col.color[e]});
    }
  }

  VerifyResult check = verify_odd(g, col);
  if (!check.ok) throw std::logic_error("unicyclic_color: construction failed");
  if (col.used_colors() > chi)
    throw std::logic_error("unicyclic_color: too many colors");
  return col;
}

EdgeColoring even_order_color3(const MultiGraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("even_order_color3: graph is disconnected");
  if (g.order() % 2 != 0)
    throw std::invalid_argument("even_order_color3: order must be even");
  for (EdgeId e = 0; e < g.size(); ++e)
    if (g.edge(e).is_loop())
      throw std::invalid_argument("even_order_color3: graph has loops");

  EdgeSubset h = spanning_odd_coforest(g);
  EdgeColoring col(g.size());
  for (EdgeId e = 0; e < g.size(); ++e)
    if (h.contains(e)) col.color[e] = 1;

  EdgeSlice forest = edge_subgraph(g, edge_complement(g, h));
  EdgeColoring fcol = forest_color2(forest.graph, std::nullopt, {});
  for (EdgeId e = 0; e < forest.graph.size(); ++e)
    col.color[forest.edge_to_old[e]] = fcol.color[e] + 1;  // {1,2} -> {2,3}

  VerifyResult check = verify_odd(g, col);
  if (!check.ok) throw std::logic_error("even_order_color3: construction failed");
  return col;
}

}  // namespace oddchrome
