#include <chrono>
#include <cstring>
#include <iostream>
#include <string>

#include "oddchrome/census.hpp"

namespace {

bool same_results(const oddchrome::CensusResult& a,
                  const oddchrome::CensusResult& b) {
  if (a.total != b.total || a.disagreements != b.disagreements ||
      a.witness_failures != b.witness_failures ||
      a.rows.size() != b.rows.size())
    return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const oddchrome::CensusRow& x = a.rows[i];
    const oddchrome::CensusRow& y = b.rows[i];
    if (x.n != y.n || x.m != y.m || x.chi != y.chi || x.count != y.count)
      return false;
  }
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_m = 8;
  int threads = oddchrome::census_threads_from_env();
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--max-m") == 0 && i + 1 < argc)
      max_m = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
      threads = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: bench_census [--max-m M] [--threads T]\n";
      return 2;
    }
  }

  auto t0 = std::chrono::steady_clock::now();
  oddchrome::CensusResult serial = oddchrome::run_census_serial(max_m);
  double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  oddchrome::CensusResult parallel = oddchrome::run_census(max_m, threads);
  double parallel_s = seconds_since(t0);

  std::cout << "graphs " << serial.total << "\n";
  std::cout << "serial_seconds " << serial_s << "\n";
  std::cout << "parallel_seconds " << parallel_s << " (threads=" << threads
            << ")\n";
  if (parallel_s > 0)
    std::cout << "speedup " << serial_s / parallel_s << "\n";
  if (!same_results(serial, parallel)) {
    std::cerr << "error: serial and parallel census results differ\n";
    return 1;
  }
  if (!serial.ok()) {
    std::cerr << "error: census found disagreements\n";
    return 1;
  }
  std::cout << "results identical\n";
  return 0;
}
