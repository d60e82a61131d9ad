#pragma once

#include "oddchrome/multigraph.hpp"

namespace oddchrome {

// T-joins: edge sets H with deg_H(v) odd exactly for v in T.  Existence
// requires |T ∩ C| even for every component C.

bool t_join_exists(const MultiGraph& g, const std::vector<VertexId>& t);

// Acyclic T-join (a forest).  Deterministic: T is paired greedily along a
// DFS order per component and connecting paths are xor-ed; any cycles left
// by the xor are removed smallest-first.
EdgeSubset t_join_forest(const MultiGraph& g, const std::vector<VertexId>& t);

// T-join whose complement is a forest.  Loops always land in the join (they
// never affect parity and may not stay in the complement forest).
EdgeSubset t_join_coforest(const MultiGraph& g, const std::vector<VertexId>& t);

// Spanning subgraph with all degrees odd and acyclic complement.  Requires
// g connected with even order.
EdgeSubset spanning_odd_coforest(const MultiGraph& g);

// T-join H whose complement is a forest touching v by at most the single
// edge e.  Requires: g connected and loopless, v not a cut vertex, e
// incident to v, T-join existence.
EdgeSubset coforest_avoiding_vertex(const MultiGraph& g, VertexId v, EdgeId e,
                                    const std::vector<VertexId>& t);

}  // namespace oddchrome
