#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "oddchrome/multigraph.hpp"
#include "oddchrome/structure.hpp"

namespace oddchrome {

// A Shannon triangle is a loopless multigraph on three pairwise adjacent
// vertices.  Its type lists the bouquet parities (2 = even size, 1 = odd)
// in non-increasing order; the odd chromatic index equals their sum.
struct ShannonType {
  std::array<int, 3> parity;        // non-increasing, each 1 or 2
  std::array<int, 3> bouquet_size;  // aligned with parity
};

std::optional<ShannonType> shannon_type(const MultiGraph& g);
int shannon_chi(const ShannonType& t);

// Type (2,1,1) with minimum degree 2, i.e. both odd bouquets are single
// edges.  These are the three-vertex members of the index-4 family.
bool is_shannon_211_min2(const MultiGraph& g);

// Exactly one 2-vertex, and suppressing it yields a 2-connected bipartite
// cubic multigraph.
bool is_subdivided_cubic_bipartite(const MultiGraph& g);

// Decomposition of g along a nontrivial 2-edge-cut.  X is the side holding
// the unique 2-vertex; g_prime is g[X] plus an edge joining the two cut-edge
// endpoints in X (added last); g_dblprime is g[X-bar] plus a new 2-vertex
// (the last vertex id) joined to the two cut-edge endpoints in X-bar (the
// two new edges come last, in cut order).
struct GlueSplit {
  TwoEdgeCut cut;
  MultiGraph g_prime;
  MultiGraph g_dblprime;
};

// Splits a 2-connected graph with exactly one 2-vertex along its first
// nontrivial 2-edge-cut; absent when the graph is essentially 3-edge-
// connected.
std::optional<GlueSplit> glue_split(const MultiGraph& g);

// Inverse of glue_split: breaks `edge_of_g1` into two half-edges, deletes
// degree-2 vertex `two_vertex_of_g2` from g2, and joins the four loose ends
// into two new edges.  `swap_ends` selects between the two possible
// pairings.  Edge order: g1 edges except the broken one, then g2 edges
// except the two removed ones, then the two new edges.
MultiGraph glue_compose(const MultiGraph& g1, const MultiGraph& g2,
                        EdgeId edge_of_g1, VertexId two_vertex_of_g2,
                        bool swap_ends = false);

// Membership in the index-4 family of 2-connected S-members: exactly one
// 2-vertex whose suppression is 2-connected, bipartite and odd; recursion
// through nontrivial 2-edge-cuts; essentially 3-edge-connected cores accept
// exactly the cubic (max degree 3) and the three-vertex forms.
bool is_in_f(const MultiGraph& g);

// Seeded random member of the index-4 family: base cases (Shannon (2,1,1)
// triangles with min degree 2; single-edge subdivisions of catalog bipartite
// cubic graphs) composed by gluing while the edge budget allows.
MultiGraph gen_f(std::uint64_t seed, int edge_budget);

// Seeded random connected S-member: a small random odd multigraph with
// random edges subdivided until the vertex budget is reached.
MultiGraph gen_s(std::uint64_t seed, int vertex_budget);

// Fixed catalog of 2-connected bipartite cubic base graphs used by gen_f.
std::vector<MultiGraph> cubic_bipartite_catalog();

}  // namespace oddchrome
