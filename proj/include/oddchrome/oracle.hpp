#pragma once

#include <cstdint>

#include "oddchrome/coloring.hpp"
#include "oddchrome/multigraph.hpp"

namespace oddchrome {

// Raised when an operation refuses to start (bounds too large) or an
// exhaustive search would have to give up; callers map this to a dedicated
// exit code.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SearchStatus { found, absent, inconclusive };

struct SearchConfig {
  int max_k = 6;                        // no connected graph needs more
  long long node_budget = 100000000;    // assignment attempts before giving up
  int small_class_cap = -1;             // >= 0: require some class this small
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::absent;
  EdgeColoring coloring;  // meaningful when status == found
  long long nodes = 0;
};

// Exhaustive backtracking for an odd k-edge-coloring.  Edges are ordered so
// every prefix stays attached to already-colored vertices; pruning tracks
// per-vertex class parities (a vertex with more even nonempty classes than
// uncolored edge slots cannot be repaired).  Symmetry cuts: colors are
// introduced in increasing order, and parallel edges receive non-decreasing
// colors.  `absent` is definitive; budget exhaustion yields `inconclusive`.
SearchOutcome search_k(const MultiGraph& g, int k, const SearchConfig& cfg = {});

struct OracleOutcome {
  SearchStatus status = SearchStatus::inconclusive;
  int chi = -1;  // when found; -1 with status absent means chi > max_k
  EdgeColoring coloring;
  long long nodes = 0;  // summed over all k tried
};

// Exact odd chromatic index by trying k = 1, 2, ... max_k.  The empty graph
// reports 0.  Throws std::invalid_argument when some vertex meets only
// loops (no odd coloring exists at such a vertex).
OracleOutcome oracle_chi(const MultiGraph& g, const SearchConfig& cfg = {});

// Exact isomorphism for small multigraphs (backtracking with degree and
// multiplicity pruning) and a relabeling-invariant hash used to bucket
// candidates before the exact test.
bool is_isomorphic(const MultiGraph& a, const MultiGraph& b);
std::uint64_t iso_invariant(const MultiGraph& g);

// All connected S-members with order <= max_n and size <= max_m, one per
// isomorphism class: every connected all-odd-degree base multigraph is
// enumerated and its edges subdivided in all ways within the bounds.
// Refuses bounds beyond desk scale (max_m > 10).
std::vector<MultiGraph> enumerate_s(int max_n, int max_m);

}  // namespace oddchrome
