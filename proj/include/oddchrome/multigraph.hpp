#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddchrome {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = -1;
  VertexId v = -1;

  bool is_loop() const { return u == v; }

  VertexId other(VertexId w) const {
    if (w == u) return v;
    if (w == v) return u;
    throw std::invalid_argument("Edge::other: vertex not an endpoint");
  }
};

// Undirected multigraph with dense vertex ids 0..n-1 and positional edge ids
// 0..m-1 (the edge id is the insertion index).  Loops are allowed and count
// 2 toward the degree of their vertex.
class MultiGraph {
public:
  MultiGraph() = default;
  explicit MultiGraph(int n) : n_(n), incident_(n), degree_(n, 0) {
    if (n < 0) throw std::invalid_argument("MultiGraph: negative order");
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  EdgeId add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    EdgeId id = size();
    edges_.push_back({u, v});
    incident_[u].push_back(id);
    if (v != u) incident_[v].push_back(id);
    degree_[u] += (u == v) ? 2 : 1;
    if (v != u) degree_[v] += 1;
    return id;
  }

  VertexId add_vertex() {
    incident_.emplace_back();
    degree_.push_back(0);
    return n_++;
  }

  const Edge& edge(EdgeId e) const {
    check_edge(e);
    return edges_[e];
  }

  const std::vector<Edge>& edges() const { return edges_; }

  // Edge ids incident to v; a loop at v appears once in this list.
  const std::vector<EdgeId>& incident(VertexId v) const {
    check_vertex(v);
    return incident_[v];
  }

  // Loops count twice.
  int degree(VertexId v) const {
    check_vertex(v);
    return degree_[v];
  }

  bool has_loop_at(VertexId v) const {
    check_vertex(v);
    for (EdgeId e : incident_[v])
      if (edges_[e].is_loop()) return true;
    return false;
  }

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex id " + std::to_string(v) +
                              " out of range [0," + std::to_string(n_) + ")");
  }

  void check_edge(EdgeId e) const {
    if (e < 0 || e >= size())
      throw std::out_of_range("edge id " + std::to_string(e) +
                              " out of range [0," + std::to_string(size()) + ")");
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<int> degree_;
};

// Subset of the edge ids of a host graph, stored as a bitset.  Operations
// between subsets require equal host sizes.
class EdgeSubset {
public:
  EdgeSubset() = default;
  explicit EdgeSubset(int host_m) : m_(host_m), bits_((host_m + 63) / 64, 0) {
    if (host_m < 0) throw std::invalid_argument("EdgeSubset: negative host size");
  }

  static EdgeSubset full(int host_m) {
    EdgeSubset s(host_m);
    for (int e = 0; e < host_m; ++e) s.insert(e);
    return s;
  }

  int host_size() const { return m_; }

  bool contains(EdgeId e) const {
    check(e);
    return (bits_[e >> 6] >> (e & 63)) & 1;
  }

  void insert(EdgeId e) {
    check(e);
    bits_[e >> 6] |= uint64_t(1) << (e & 63);
  }

  void erase(EdgeId e) {
    check(e);
    bits_[e >> 6] &= ~(uint64_t(1) << (e & 63));
  }

  void toggle(EdgeId e) {
    check(e);
    bits_[e >> 6] ^= uint64_t(1) << (e & 63);
  }

  int count() const {
    int c = 0;
    for (uint64_t w : bits_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : bits_)
      if (w) return false;
    return true;
  }

  std::vector<EdgeId> to_vector() const {
    std::vector<EdgeId> out;
    for (int e = 0; e < m_; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  EdgeSubset operator^(const EdgeSubset& o) const {
    EdgeSubset r = combined(o);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] ^ o.bits_[i];
    return r;
  }

  EdgeSubset operator|(const EdgeSubset& o) const {
    EdgeSubset r = combined(o);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
  }

  EdgeSubset operator&(const EdgeSubset& o) const {
    EdgeSubset r = combined(o);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
  }

  bool operator==(const EdgeSubset& o) const {
    return m_ == o.m_ && bits_ == o.bits_;
  }

private:
  void check(EdgeId e) const {
    if (e < 0 || e >= m_)
      throw std::out_of_range("EdgeSubset: edge id out of range");
  }
  EdgeSubset combined(const EdgeSubset& o) const {
    if (m_ != o.m_)
      throw std::invalid_argument("EdgeSubset: host size mismatch (" +
                                  std::to_string(m_) + " vs " +
                                  std::to_string(o.m_) + ")");
    return EdgeSubset(m_);
  }

  int m_ = 0;
  std::vector<uint64_t> bits_;
};

// All edges between u and v (u != v).  `edges` ascends by id; `size` is the
// parity-relevant quantity (even/odd bouquet).
struct Bouquet {
  VertexId u = -1;
  VertexId v = -1;
  std::vector<EdgeId> edges;

  int size() const { return static_cast<int>(edges.size()); }
};

Bouquet bouquet(const MultiGraph& g, VertexId u, VertexId v);

// Result of suppressing a degree-2 vertex: the vertex disappears, its two
// edges are replaced by one edge joining its neighbours.  Maps use -1 for
// removed items; `new_edge` is the id of the replacement edge in `graph`.
struct SuppressResult {
  MultiGraph graph;
  std::vector<VertexId> vertex_to_new;
  std::vector<EdgeId> edge_to_new;
  EdgeId new_edge = -1;
};

SuppressResult suppress(const MultiGraph& g, VertexId v);

// Splits v into v' (keeps id v, receives `side1`) and v'' (new vertex id n,
// receives `side2`).  side1 and side2 must partition the edges at v; loops
// go whole to one side.  Edge ids are preserved.
MultiGraph split(const MultiGraph& g, VertexId v,
                 const std::vector<EdgeId>& side1,
                 const std::vector<EdgeId>& side2);

EdgeSubset edge_complement(const MultiGraph& g, const EdgeSubset& h);
EdgeSubset symmetric_difference(const EdgeSubset& a, const EdgeSubset& b);

// All degrees odd.  Isolated vertices (degree 0) make this false.
bool is_odd_graph(const MultiGraph& g);
// All degrees even; true for isolated vertices and the empty graph.
bool is_even_graph(const MultiGraph& g);

// ---- derived-graph helpers (positional edge identity is kept via maps) ----

struct VertexDeletion {
  MultiGraph graph;
  std::vector<VertexId> vertex_to_new;  // -1 for the removed vertex
  std::vector<EdgeId> edge_to_new;      // -1 for removed edges
  std::vector<EdgeId> edge_to_old;      // size graph.size()
};

VertexDeletion remove_vertex(const MultiGraph& g, VertexId v);

struct EdgeDeletion {
  MultiGraph graph;
  std::vector<EdgeId> edge_to_new;  // -1 for removed edges
  std::vector<EdgeId> edge_to_old;
};

EdgeDeletion remove_edges(const MultiGraph& g, const std::vector<EdgeId>& del);

// Spanning subgraph on the same vertex set restricted to `keep`.
struct EdgeSlice {
  MultiGraph graph;
  std::vector<EdgeId> edge_to_old;  // size graph.size()
  std::vector<EdgeId> edge_to_new;  // size g.size(), -1 if dropped
};

EdgeSlice edge_subgraph(const MultiGraph& g, const EdgeSubset& keep);

// Subgraph on `keep` with vertices compressed to the ones the kept edges
// touch (ascending original id order).
struct InducedSlice {
  MultiGraph graph;
  std::vector<VertexId> vertex_to_old;  // size graph.order()
  std::vector<VertexId> vertex_to_new;  // size g.order(), -1 if dropped
  std::vector<EdgeId> edge_to_old;      // size graph.size()
};

InducedSlice induced_subgraph(const MultiGraph& g, const EdgeSubset& keep);

// Replaces edge e=(u,w) by u-x-w through a fresh vertex x.  The two new
// edges reuse e's id slot and the next fresh id, in that order.
MultiGraph subdivide_edge(const MultiGraph& g, EdgeId e);

}  // namespace oddchrome
