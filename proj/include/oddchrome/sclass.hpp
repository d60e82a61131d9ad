#pragma once

#include "oddchrome/coloring.hpp"
#include "oddchrome/multigraph.hpp"

namespace oddchrome {

// A graph belongs to class S when every vertex has odd degree or degree
// exactly 2 and every component contains an odd-degree vertex (so no
// component is a bare cycle and none is an isolated vertex).  Equivalently:
// suppressing 2-vertices to a fixpoint leaves a graph with all degrees odd.
bool is_in_s(const MultiGraph& g);
bool is_in_s_by_suppression(const MultiGraph& g);

// A maximal path (or closed walk) whose interior vertices all have degree 2
// and whose endpoints are odd-degree branch vertices.  a == b for closed
// threads.  A thread of even length is labeled odd ("odd thread") and vice
// versa: the label tracks the parity of the interior vertex count.
struct Thread {
  VertexId a = -1, b = -1;      // branch endpoints in the subdivided graph
  std::vector<EdgeId> edges;    // consecutive edges from a to b
  std::vector<VertexId> inner;  // interior 2-vertices, in walk order

  int length() const { return static_cast<int>(edges.size()); }
  bool even_label() const { return length() % 2 == 1; }
};

// The branch skeleton of an S-member: contracting every thread to a single
// edge yields the underlying graph with all degrees odd.  Thread i realizes
// base edge i.
struct SubdivisionStructure {
  MultiGraph base;                  // degrees all odd
  std::vector<VertexId> base_to_g;  // base vertex -> branch vertex of g
  std::vector<VertexId> g_to_base;  // g vertex -> base vertex, -1 for interior
  std::vector<Thread> threads;      // indexed by base edge id
  std::vector<int> thread_of_edge;  // g edge -> thread index
};

SubdivisionStructure subdivision_structure(const MultiGraph& g);

// Contract the even-labeled threads of the base graph; every odd-labeled
// thread becomes an edge of h (a loop when both endpoints collapse
// together).  Bipartiteness of h decides 2-colorability.
struct ParityQuotient {
  MultiGraph h;
  std::vector<int> component_of;    // base vertex -> h vertex
  std::vector<EdgeId> edge_origin;  // h edge -> base edge (= thread index)
};

ParityQuotient parity_quotient(const SubdivisionStructure& s);

// True iff g admits an odd 2-edge-coloring (g must be in S).
bool chi_le_2(const MultiGraph& g);

// Constructive odd 2-coloring: branch vertices are monochromatic in their
// quotient side's color, threads alternate between their ends.  Requires
// chi_le_2(g) and at least one 2-vertex (otherwise one color suffices).
EdgeColoring color2(const MultiGraph& g);

}  // namespace oddchrome
