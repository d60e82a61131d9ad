#include "oddchrome/family.hpp"

#include <algorithm>
#include <random>

#include "oddchrome/sclass.hpp"

namespace oddchrome {

namespace {

int max_degree(const MultiGraph& g) {
  int d = 0;
  for (VertexId v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::vector<VertexId> two_vertices(const MultiGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) == 2) out.push_back(v);
  return out;
}

}  // namespace

std::optional<ShannonType> shannon_type(const MultiGraph& g) {
  if (g.order() != 3) return std::nullopt;
  for (const Edge& e : g.edges())
    if (e.is_loop()) return std::nullopt;
  std::array<std::pair<int, int>, 3> ps;  // (parity, size) per vertex pair
  int i = 0;
  for (auto [u, v] : {std::pair<int, int>{0, 1}, {0, 2}, {1, 2}}) {
    int size = bouquet(g, u, v).size();
    if (size == 0) return std::nullopt;
    ps[i++] = {size % 2 == 0 ? 2 : 1, size};
  }
  std::sort(ps.begin(), ps.end(), std::greater<>());
  ShannonType t;
  for (int j = 0; j < 3; ++j) {
    t.parity[j] = ps[j].first;
    t.bouquet_size[j] = ps[j].second;
  }
  return t;
}

int shannon_chi(const ShannonType& t) {
  return t.parity[0] + t.parity[1] + t.parity[2];
}

bool is_shannon_211_min2(const MultiGraph& g) {
  auto t = shannon_type(g);
  if (!t || t->parity != std::array<int, 3>{2, 1, 1}) return false;
  int min_deg = g.degree(0);
  for (VertexId v = 1; v < g.order(); ++v)
    min_deg = std::min(min_deg, g.degree(v));
  return min_deg == 2;
}

bool is_subdivided_cubic_bipartite(const MultiGraph& g) {
  std::vector<VertexId> twos = two_vertices(g);
  if (twos.size() != 1 || g.has_loop_at(twos[0])) return false;
  MultiGraph sup = suppress(g, twos[0]).graph;
  if (!is_two_connected(sup) || !is_bipartite(sup)) return false;
  for (VertexId v = 0; v < sup.order(); ++v)
    if (sup.degree(v) != 3) return false;
  return true;
}

std::optional<GlueSplit> glue_split(const MultiGraph& g) {
  if (!is_two_connected(g))
    throw std::invalid_argument("glue_split: graph not 2-connected");
  std::vector<VertexId> twos = two_vertices(g);
  if (twos.size() != 1)
    throw std::invalid_argument("glue_split: expected exactly one 2-vertex");

  auto cut = nontrivial_two_edge_cut(g);
  if (!cut) return std::nullopt;

  GlueSplit out;
  out.cut = *cut;
  std::vector<char> in_x(g.order(), 0);
  for (VertexId v : cut->x) in_x[v] = 1;
  if (!in_x[twos[0]]) {  // keep the 2-vertex on the X side
    std::swap(out.cut.x, out.cut.x_bar);
    for (VertexId v = 0; v < g.order(); ++v) in_x[v] = !in_x[v];
  }

  auto build_side = [&](bool want_x) {
    std::vector<VertexId> to_new(g.order(), -1);
    MultiGraph side;
    for (VertexId v = 0; v < g.order(); ++v)
      if (in_x[v] == want_x) to_new[v] = side.add_vertex();
    for (EdgeId e = 0; e < g.size(); ++e) {
      const Edge& ed = g.edge(e);
      if (in_x[ed.u] == want_x && in_x[ed.v] == want_x)
        side.add_edge(to_new[ed.u], to_new[ed.v]);
    }
    return std::pair(side, to_new);
  };

  // cut-edge endpoints on each side
  const Edge& f1 = g.edge(out.cut.f1);
  const Edge& f2 = g.edge(out.cut.f2);
  VertexId x1 = in_x[f1.u] ? f1.u : f1.v, y1 = in_x[f1.u] ? f1.v : f1.u;
  VertexId x2 = in_x[f2.u] ? f2.u : f2.v, y2 = in_x[f2.u] ? f2.v : f2.u;

  auto [gp, xmap] = build_side(true);
  gp.add_edge(xmap[x1], xmap[x2]);
  out.g_prime = std::move(gp);

  auto [gpp, ymap] = build_side(false);
  VertexId z = gpp.add_vertex();
  gpp.add_edge(z, ymap[y1]);
  gpp.add_edge(z, ymap[y2]);
  out.g_dblprime = std::move(gpp);
  return out;
}

MultiGraph glue_compose(const MultiGraph& g1, const MultiGraph& g2,
                        EdgeId edge_of_g1, VertexId two_vertex_of_g2,
                        bool swap_ends) {
  g1.check_edge(edge_of_g1);
  g2.check_vertex(two_vertex_of_g2);
  if (g2.degree(two_vertex_of_g2) != 2 || g2.has_loop_at(two_vertex_of_g2))
    throw std::invalid_argument("glue_compose: vertex is not a plain 2-vertex");

  VertexId a = g1.edge(edge_of_g1).u, b = g1.edge(edge_of_g1).v;
  std::vector<EdgeId> zedges = g2.incident(two_vertex_of_g2);
  VertexId y1 = g2.edge(zedges[0]).other(two_vertex_of_g2);
  VertexId y2 = g2.edge(zedges[1]).other(two_vertex_of_g2);
  if (swap_ends) std::swap(y1, y2);

  MultiGraph out(g1.order() + g2.order() - 1);
  auto map2 = [&](VertexId v) {
    return g1.order() + v - (v > two_vertex_of_g2 ? 1 : 0);
  };
  for (EdgeId e = 0; e < g1.size(); ++e)
    if (e != edge_of_g1) out.add_edge(g1.edge(e).u, g1.edge(e).v);
  for (EdgeId e = 0; e < g2.size(); ++e) {
    const Edge& ed = g2.edge(e);
    if (ed.u == two_vertex_of_g2 || ed.v == two_vertex_of_g2) continue;
    out.add_edge(map2(ed.u), map2(ed.v));
  }
  out.add_edge(a, map2(y1));
  out.add_edge(b, map2(y2));
  return out;
}

bool is_in_f(const MultiGraph& g) {
  if (!is_two_connected(g))
    throw std::invalid_argument("is_in_f: graph not 2-connected");
  if (!is_in_s(g)) throw std::invalid_argument("is_in_f: graph not in S");

  std::vector<VertexId> twos = two_vertices(g);
  if (twos.size() != 1) return false;
  MultiGraph sup = suppress(g, twos[0]).graph;
  if (!is_two_connected(sup) || !is_bipartite(sup) || !is_odd_graph(sup))
    return false;

  if (auto split = glue_split(g))
    return is_in_f(split->g_prime) && is_in_f(split->g_dblprime);

  return max_degree(g) == 3 || g.order() == 3;
}

namespace {

// Deterministic across platforms (uniform_int_distribution is not).
int rand_below(std::mt19937_64& rng, int k) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(k));
}

MultiGraph shannon_211(int even_size) {
  MultiGraph g(3);
  for (int i = 0; i < even_size; ++i) g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  return g;
}

MultiGraph complete_bipartite(int a, int b) {
  MultiGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

MultiGraph prism(int k) {  // two k-cycles joined by rungs; bipartite iff k even
  MultiGraph g(2 * k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(k + i, k + (i + 1) % k);
    g.add_edge(i, k + i);
  }
  return g;
}

MultiGraph heawood() {  // 14-cycle plus chords i -- i+5 for even i
  MultiGraph g(14);
  for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
  return g;
}

}  // namespace

std::vector<MultiGraph> cubic_bipartite_catalog() {
  std::vector<MultiGraph> out;
  out.push_back(complete_bipartite(3, 3));
  out.push_back(prism(4));  // the cube
  out.push_back(prism(6));
  out.push_back(prism(8));
  out.push_back(heawood());
  return out;
}

namespace {

MultiGraph random_base(std::mt19937_64& rng, int edge_budget,
                       const std::vector<MultiGraph>& catalog) {
  // candidates: Shannon (2,1,1) with even bouquet 2/4/6 (m = 4/6/8) and
  // single-edge subdivisions of the catalog graphs (m = |E| + 1)
  std::vector<MultiGraph> fits;
  for (int s : {2, 4, 6})
    if (s + 2 <= edge_budget) fits.push_back(shannon_211(s));
  for (const MultiGraph& c : catalog)
    if (c.size() + 1 <= edge_budget) {
      MultiGraph g = subdivide_edge(c, rand_below(rng, c.size()));
      fits.push_back(std::move(g));
    }
  if (fits.empty()) return shannon_211(2);  // smallest member, m = 4
  return fits[rand_below(rng, static_cast<int>(fits.size()))];
}

}  // namespace

MultiGraph gen_f(std::uint64_t seed, int edge_budget) {
  std::mt19937_64 rng(seed);
  std::vector<MultiGraph> catalog = cubic_bipartite_catalog();
  MultiGraph cur = random_base(rng, edge_budget, catalog);
  for (;;) {
    // gluing merges an m1-graph and an m2-graph into m1 + m2 - 1 edges
    int room = edge_budget - cur.size() + 1;
    if (room < 4) break;
    if (rand_below(rng, 4) == 0) break;  // vary the size mix
    MultiGraph piece = random_base(rng, room, catalog);
    if (piece.size() > room) break;
    EdgeId at = rand_below(rng, cur.size());
    VertexId z = two_vertices(piece)[0];
    cur = glue_compose(cur, piece, at, z, rand_below(rng, 2) == 1);
  }
  return cur;
}

MultiGraph gen_s(std::uint64_t seed, int vertex_budget) {
  std::mt19937_64 rng(seed);
  // an all-odd-degree multigraph has even order
  int n0 = (vertex_budget >= 4 && rand_below(rng, 2) == 1) ? 4 : 2;

  MultiGraph g(n0);
  for (VertexId v = 1; v < n0; ++v) g.add_edge(v, rand_below(rng, v));

  std::vector<VertexId> wrong;  // even-degree vertices; n0 even keeps |wrong| even
  for (VertexId v = 0; v < n0; ++v)
    if (g.degree(v) % 2 == 0) wrong.push_back(v);
  for (int i = static_cast<int>(wrong.size()) - 1; i > 0; --i)
    std::swap(wrong[i], wrong[rand_below(rng, i + 1)]);
  for (size_t i = 0; i + 1 < wrong.size(); i += 2)
    g.add_edge(wrong[i], wrong[i + 1]);

  for (int extra = 0; extra < 2 && rand_below(rng, 2) == 0; ++extra) {
    VertexId u = rand_below(rng, n0);
    VertexId v = rand_below(rng, n0);
    if (u == v) v = (v + 1) % n0;
    g.add_edge(u, v);  // parallel pair keeps all parities
    g.add_edge(u, v);
  }
  if (rand_below(rng, 4) == 0) {  // occasional loop; degrees stay odd
    VertexId w = rand_below(rng, n0);
    g.add_edge(w, w);
  }

  int subdivisions = vertex_budget > n0 ? rand_below(rng, vertex_budget - n0 + 1) : 0;
  for (int i = 0; i < subdivisions; ++i)
    g = subdivide_edge(g, rand_below(rng, g.size()));
  return g;
}

}  // namespace oddchrome
