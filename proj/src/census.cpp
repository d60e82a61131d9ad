#include "oddchrome/census.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "oddchrome/classifier.hpp"
#include "oddchrome/coloring.hpp"
#include "oddchrome/multigraph.hpp"
#include "oddchrome/oracle.hpp"

namespace oddchrome {

namespace {

struct GraphOutcome {
  int n = 0;
  int m = 0;
  int chi = -1;
  bool disagreement = false;
  bool witness_failure = false;
  std::string note;
};

GraphOutcome check_graph(const MultiGraph& g, int index) {
  GraphOutcome out;
  out.n = g.order();
  out.m = g.size();
  std::ostringstream where;
  where << "graph " << index << " (n=" << out.n << " m=" << out.m << "): ";
  try {
    ChiReport rep = classify(g);
    out.chi = rep.chi;
    OracleOutcome ora = oracle_chi(g);
    if (ora.status == SearchStatus::inconclusive) {
      out.disagreement = true;
      out.note = where.str() + "exact search ran out of budget";
      return out;
    }
    if (ora.status == SearchStatus::absent) {
      out.disagreement = true;
      out.note = where.str() + "exact search found no coloring within 6 colors";
      return out;
    }
    if (ora.chi != rep.chi) {
      out.disagreement = true;
      std::ostringstream msg;
      msg << where.str() << "structural chi=" << rep.chi
          << " but exact search chi=" << ora.chi;
      out.note = msg.str();
      return out;
    }
    if (rep.chi == 4) {
      WitnessReport w = witness_edge(g);
      EdgeDeletion del = remove_edges(g, {w.edge});
      EdgeColoring sub(del.graph.size());
      for (EdgeId e = 0; e < del.graph.size(); ++e)
        sub.color[e] = w.coloring.color[del.edge_to_old[e]];
      bool good = w.coloring.color[w.edge] == 0 && sub.complete() &&
                  sub.used_colors() <= 3 && verify_odd(del.graph, sub).ok;
      if (!good) {
        out.witness_failure = true;
        out.note = where.str() + "witness edge has no verified 3-coloring";
      }
    }
  } catch (const std::exception& ex) {
    out.disagreement = true;
    out.note = where.str() + "exception: " + ex.what();
  }
  return out;
}

CensusResult merge(const std::vector<GraphOutcome>& outcomes) {
  CensusResult res;
  std::map<std::tuple<int, int, int>, int> tally;
  for (const GraphOutcome& o : outcomes) {
    ++res.total;
    if (o.chi >= 0) ++tally[{o.n, o.m, o.chi}];
    if (o.disagreement) ++res.disagreements;
    if (o.witness_failure) ++res.witness_failures;
    if (!o.note.empty()) res.notes.push_back(o.note);
  }
  for (const auto& [key, count] : tally)
    res.rows.push_back(
        {std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
  return res;
}

}  // namespace

CensusResult run_census_serial(int max_m) {
  std::vector<MultiGraph> graphs = enumerate_s(max_m + 1, max_m);
  std::vector<GraphOutcome> outcomes(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i)
    outcomes[i] = check_graph(graphs[i], static_cast<int>(i));
  return merge(outcomes);
}

CensusResult run_census(int max_m, int threads) {
  if (threads < 1) threads = 1;
  std::vector<MultiGraph> graphs = enumerate_s(max_m + 1, max_m);
  std::vector<GraphOutcome> outcomes(graphs.size());
  const int count = static_cast<int>(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < count; ++i) outcomes[i] = check_graph(graphs[i], i);
#else
  for (int i = 0; i < count; ++i) outcomes[i] = check_graph(graphs[i], i);
#endif
  return merge(outcomes);
}

int census_threads_from_env() {
  if (const char* env = std::getenv("ODDCHROME_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace oddchrome
