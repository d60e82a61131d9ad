#ifndef ODDCHROME_CENSUS_HPP
#define ODDCHROME_CENSUS_HPP

#include <string>
#include <vector>

namespace oddchrome {

struct CensusRow {
  int n = 0;
  int m = 0;
  int chi = 0;
  int count = 0;
};

struct CensusResult {
  std::vector<CensusRow> rows;  // ascending by (n, m, chi)
  int total = 0;
  int disagreements = 0;        // structural decision vs exact search
  int witness_failures = 0;     // four-color graphs without a verified witness
  std::vector<std::string> notes;  // one line per failed graph, input order

  bool ok() const { return disagreements == 0 && witness_failures == 0; }
};

// Enumerates every connected graph with all degrees odd or exactly two (and
// some odd vertex) up to `max_m` edges, one representative per isomorphism
// class, and checks the structural classification against the exact search,
// plus the removable-edge witness on every four-color graph.  The parallel
// runner distributes graphs across `threads` workers; results are merged in
// enumeration order, so the outcome is independent of the thread count.
CensusResult run_census(int max_m, int threads);

// Plain sequential implementation kept as the reference for the parallel
// runner; produces identical results.
CensusResult run_census_serial(int max_m);

// Worker count from ODDCHROME_THREADS, falling back to the hardware default.
int census_threads_from_env();

}  // namespace oddchrome

#endif  // ODDCHROME_CENSUS_HPP
