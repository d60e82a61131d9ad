#pragma once

#include <map>
#include <optional>

#include "oddchrome/multigraph.hpp"

namespace oddchrome {

// Edge coloring with colors 1..k; 0 marks an uncolored edge (only legal
// while a coloring is under construction).
struct EdgeColoring {
  std::vector<int> color;  // indexed by edge id

  EdgeColoring() = default;
  explicit EdgeColoring(int m, int c = 0) : color(m, c) {}

  int used_colors() const;         // number of distinct nonzero colors
  bool complete() const;           // no zero entries
  void normalize();                // remap used colors to 1..k by first appearance
};

// Per-vertex, per-color incidence counts; loops count twice.
struct LocalParityProfile {
  // counts[v] maps color -> count at v (only nonzero counts present)
  std::vector<std::map<int, int>> counts;
};

LocalParityProfile local_parity_profile(const MultiGraph& g, const EdgeColoring& c);

struct ParityViolation {
  VertexId vertex;
  int color;
  int count;
};

struct VerifyResult {
  bool ok = false;
  std::vector<ParityViolation> violations;
};

// A coloring is odd iff at every vertex each color that appears does so an
// odd number of times.  Partial colorings are rejected.
VerifyResult verify_odd(const MultiGraph& g, const EdgeColoring& c);
// Same, but vertex v is exempt from the parity requirement.
VerifyResult verify_odd_away_from(const MultiGraph& g, const EdgeColoring& c,
                                  VertexId v);

// 2-colors an acyclic graph so that parity is odd at every vertex except
// possibly v; trees not containing v come out odd everywhere.  `seed`
// pre-colors a subset of E(v) with colors from {1,2} and is preserved.
EdgeColoring forest_color2(const MultiGraph& f, std::optional<VertexId> v,
                           const std::map<EdgeId, int>& seed);

// 2-colors g odd away from v, where g - v is a forest and g is loopless.
// When degree(v) is odd, additionally color 1 appears an odd and color 2 an
// even number of times at v.
EdgeColoring around_vertex_color2(const MultiGraph& g, VertexId v);

// g connected with exactly one cycle C and not an odd graph.  The index is
// 3 iff the number of 2-vertices on C is odd and no cycle vertex has even
// degree >= 4; else 2.
int unicyclic_chi(const MultiGraph& g);
EdgeColoring unicyclic_color(const MultiGraph& g);

// Specialization: no odd-degree vertex on the cycle.  2 colors suffice
// unless g is an odd cycle.
bool unicyclic_chi2_special(const MultiGraph& g);

// Odd 3-coloring of a connected loopless graph of even order: a spanning
// odd coforest gets color 1, its complement forest colors 2/3.
EdgeColoring even_order_color3(const MultiGraph& g);

}  // namespace oddchrome
