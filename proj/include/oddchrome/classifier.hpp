#ifndef ODDCHROME_CLASSIFIER_HPP
#define ODDCHROME_CLASSIFIER_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "oddchrome/coloring.hpp"
#include "oddchrome/multigraph.hpp"

namespace oddchrome {

// Thrown by the constructive 3-coloring when the input exhibits structure the
// construction does not cover.  Callers that must always succeed catch it and
// fall back to exact search.
class ConstructionDivergence : public std::runtime_error {
 public:
  explicit ConstructionDivergence(const std::string& what)
      : std::runtime_error(what) {}
};

// Which rung of the decision ladder produced the answer.
enum class CaseTag {
  kEmpty,             // no edges
  kOdd,               // every degree odd: one color suffices
  kQuotientBipartite, // has 2-vertices and the parity quotient is bipartite
  kFamilyF,           // every block is in family F and each cut vertex has a
                      // unique block of odd local degree: four colors needed
  kOtherwise,         // everything else: exactly three colors
};

const char* case_tag_name(CaseTag tag);

struct ChiReport {
  int chi = 0;
  CaseTag tag = CaseTag::kEmpty;
  EdgeColoring coloring;                 // optimal, verified
  std::optional<EdgeId> witness_edge;    // set iff chi == 4: an edge e with
                                         // g - e three-colorable
};

// Decides the odd chromatic index of a connected member of class S (every
// degree odd or exactly two, and some vertex of odd degree unless the graph
// is trivial) and returns an optimal odd edge-coloring plus, in the
// four-color case, a witness edge whose removal admits three colors.
ChiReport classify(const MultiGraph& g);

// Convenience: the verified optimal coloring alone.
EdgeColoring color_optimal(const MultiGraph& g);

// Produces a verified odd 3-coloring of a connected loopless graph that
// admits one.  Strategy ladder: even order directly, pendant reduction,
// the cycle-augmentation construction, exact search as a last resort.
EdgeColoring color3(const MultiGraph& g);

// The constructive 3-coloring for essentially 3-edge-connected graphs with a
// single 2-vertex whose suppression is 2-connected, bipartite and of odd
// degrees, with maximum degree at least 5 and order at least 5.  Grows an
// even subgraph from a cycle through the 2-vertex by absorbing parallel
// bouquets and escape paths, then colors it with two colors plus a third for
// the complement.  Throws ConstructionDivergence when the input's structure
// falls outside the construction.
EdgeColoring color3_via_augmentation(const MultiGraph& g);

struct SingletonColoring {
  EdgeColoring coloring;  // verified, exactly four colors, |color-4 class| == 1
  EdgeId witness = -1;    // the unique edge of color 4
};

// For a graph needing four colors: a coloring whose fourth class is a single
// edge incident with a 2-vertex.  Linear-time apart from verification.
SingletonColoring color4_singleton(const MultiGraph& g);

struct WitnessReport {
  EdgeId edge = -1;
  EdgeColoring coloring;  // verified odd 3-coloring of g - edge, indexed by
                          // g's edge ids with coloring.color[edge] == 0
};

// For a graph needing four colors: an edge whose removal leaves a graph that
// admits three colors, together with such a coloring.
WitnessReport witness_edge(const MultiGraph& g);

}  // namespace oddchrome

#endif  // ODDCHROME_CLASSIFIER_HPP
