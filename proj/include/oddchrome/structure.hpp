#pragma once

#include <optional>

#include "oddchrome/multigraph.hpp"

namespace oddchrome {

struct Components {
  int count = 0;
  std::vector<int> id;  // per vertex, 0..count-1 in order of smallest member
};

Components components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);  // true for n <= 1

// Blocks are the cycle-equivalence classes of edges (e ~ f iff some simple
// cycle contains both).  Every loop and every bridge is a singleton block;
// parallel edges share a block.  Blocks partition E(g).
struct BlockDecomposition {
  std::vector<EdgeSubset> blocks;        // sorted by smallest edge id
  std::vector<VertexId> cut_vertices;    // ascending
  std::vector<std::vector<int>> blocks_at;  // per vertex, indices into blocks
};

BlockDecomposition blocks(const MultiGraph& g);

// Bridges = singleton non-loop blocks.
std::vector<EdgeId> bridges(const MultiGraph& g);

// Proper 2-colorability of vertices; any loop or odd closed walk kills it.
// Returns the bipartition side (0/1) per vertex when bipartite.
std::optional<std::vector<int>> bipartition(const MultiGraph& g);
bool is_bipartite(const MultiGraph& g);

// Connected, no cut vertex, n >= 2, m >= 1.  K2 qualifies (the trivial
// block); use is_trivial_block to tell it apart.
bool is_two_connected(const MultiGraph& g);
bool is_trivial_block(const MultiGraph& g);  // K2 with a single edge

// Smallest (lexicographic) set of at most k non-loop edges whose removal
// disconnects g, if one exists.  k must be 1 or 2; g must be connected.
std::optional<std::vector<EdgeId>> edge_connectivity_at_most(const MultiGraph& g, int k);

// A 2-edge-cut {f1,f2} = boundary of X: removing both edges leaves exactly
// the components X and its complement, and both edges cross the split.
// Nontrivial: both sides have >= 2 vertices.
struct TwoEdgeCut {
  EdgeId f1 = -1, f2 = -1;     // f1 < f2
  std::vector<VertexId> x;     // side containing f1's smaller endpoint
  std::vector<VertexId> x_bar;
};

// First nontrivial cut in lexicographic (f1,f2) order, if any.  g must be
// connected.  x is the side containing f1's smaller endpoint.
std::optional<TwoEdgeCut> nontrivial_two_edge_cut(const MultiGraph& g);

// A simple cycle as an edge sequence; vertices(i) is the common endpoint of
// edges i-1 and i.  A loop is a cycle of length 1, parallel edges one of
// length 2.
struct Cycle {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;  // same length as edges
  int order() const { return static_cast<int>(vertices.size()); }
};

// Simple cycle through all of `required` (at most 2 vertices) with at least
// min_order distinct vertices, if one exists.  Deterministic (DFS by edge id).
std::optional<Cycle> cycle_through(const MultiGraph& g,
                                   const std::vector<VertexId>& required,
                                   int min_order);

// Maximal subgraphs sharing only the cut vertex v: one per component of
// g - v, each with its edges to v restored.  v must be a cut vertex.
struct Lobe {
  MultiGraph graph;
  std::vector<VertexId> vertex_to_old;
  std::vector<EdgeId> edge_to_old;
};

std::vector<Lobe> lobes(const MultiGraph& g, VertexId v);

}  // namespace oddchrome
