#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oddchrome/census.hpp"
#include "oddchrome/classifier.hpp"
#include "oddchrome/coloring.hpp"
#include "oddchrome/family.hpp"
#include "oddchrome/io.hpp"
#include "oddchrome/multigraph.hpp"
#include "oddchrome/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

oddchrome::MultiGraph load_graph(const std::string& path, bool graph6) {
  std::string text = read_file(path);
  return graph6 ? oddchrome::parse_graph6(text) : oddchrome::parse_mel(text);
}

void print_coloring_lines(const oddchrome::MultiGraph& g,
                          const oddchrome::EdgeColoring& col,
                          std::optional<oddchrome::EdgeId> skip = std::nullopt) {
  for (oddchrome::EdgeId e = 0; e < g.size(); ++e) {
    if (skip && e == *skip) continue;
    std::cout << e << " " << g.edge(e).u << " " << g.edge(e).v << " "
              << col.color[e] << "\n";
  }
}

int cmd_classify(const std::string& path, bool graph6) {
  oddchrome::MultiGraph g = load_graph(path, graph6);
  oddchrome::ChiReport rep = oddchrome::classify(g);
  std::cout << "chi=" << rep.chi << " case=" << case_tag_name(rep.tag) << "\n";
  return kExitOk;
}

int cmd_color(const std::string& path, bool graph6, const std::string& dot) {
  oddchrome::MultiGraph g = load_graph(path, graph6);
  oddchrome::ChiReport rep = oddchrome::classify(g);
  if (!oddchrome::verify_odd(g, rep.coloring).ok) {
    std::cerr << "error: produced coloring failed verification\n";
    return kExitCheckFailed;
  }
  print_coloring_lines(g, rep.coloring);
  if (!dot.empty()) {
    std::ofstream out(dot, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open file: " + dot);
    out << oddchrome::emit_dot(g, rep.coloring);
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, bool graph6,
               const std::string& colors_path) {
  oddchrome::MultiGraph g = load_graph(path, graph6);
  std::istringstream in(read_file(colors_path));
  oddchrome::EdgeColoring col(g.size());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long e = -1, c = -1;
    if (!(ls >> e >> c) || e < 0 || e >= g.size() || c < 0)
      throw oddchrome::ParseError(line_no, "expected '<edge_id> <color>'");
    std::string rest;
    if (ls >> rest)
      throw oddchrome::ParseError(line_no, "expected '<edge_id> <color>'");
    col.color[static_cast<int>(e)] = static_cast<int>(c);
  }
  bool ok = col.complete() && oddchrome::verify_odd(g, col).ok;
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_oracle(const std::string& path, bool graph6, int max_k,
               long long budget) {
  oddchrome::MultiGraph g = load_graph(path, graph6);
  oddchrome::SearchConfig cfg;
  cfg.max_k = max_k;
  cfg.node_budget = budget;
  oddchrome::OracleOutcome out = oddchrome::oracle_chi(g, cfg);
  if (out.status == oddchrome::SearchStatus::inconclusive) {
    std::cout << "inconclusive\n";
    return kExitBudget;
  }
  if (out.status == oddchrome::SearchStatus::absent) {
    // Every k up to max_k was ruled out definitively.
    std::cout << "chi>" << max_k << "\n";
    return kExitOk;
  }
  std::cout << "chi=" << out.chi << "\n";
  return kExitOk;
}

int cmd_witness(const std::string& path, bool graph6) {
  oddchrome::MultiGraph g = load_graph(path, graph6);
  oddchrome::WitnessReport rep = oddchrome::witness_edge(g);
  std::cout << "edge=" << rep.edge << "\n";
  print_coloring_lines(g, rep.coloring, rep.edge);
  return kExitOk;
}

int cmd_census(int max_m) {
  oddchrome::CensusResult res =
      oddchrome::run_census(max_m, oddchrome::census_threads_from_env());
  std::cout << "n m chi count\n";
  for (const oddchrome::CensusRow& row : res.rows)
    std::cout << row.n << " " << row.m << " " << row.chi << " " << row.count
              << "\n";
  std::cout << "total " << res.total << "\n";
  std::cout << "disagreements " << res.disagreements << "\n";
  std::cout << "witness-failures " << res.witness_failures << "\n";
  for (const std::string& note : res.notes) std::cerr << note << "\n";
  return res.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odd edge-coloring toolkit for subdivisions of odd-degree "
               "multigraphs"};
  app.require_subcommand(1);

  std::string path, colors_path, dot_path;
  bool graph6 = false;
  int max_k = 6;
  long long budget = 100000000;
  int max_m = 9;
  int gen_a = 1, gen_b = 1, gen_c = 1;
  unsigned long long seed = 1;
  int gen_budget = 30;
  int gen_n = 7;

  CLI::App* classify = app.add_subcommand("classify", "decide the odd chromatic index");
  classify->add_option("file", path)->required();
  classify->add_flag("--g6", graph6, "input is graph6");

  CLI::App* color = app.add_subcommand("color", "emit a verified optimal coloring");
  color->add_option("file", path)->required();
  color->add_flag("--g6", graph6, "input is graph6");
  color->add_option("--dot", dot_path, "also write DOT with the coloring");

  CLI::App* verify = app.add_subcommand("verify", "check a coloring file");
  verify->add_option("file", path)->required();
  verify->add_flag("--g6", graph6, "input is graph6");
  verify->add_option("--colors", colors_path)->required();

  CLI::App* oracle = app.add_subcommand("oracle", "exact search for the odd chromatic index");
  oracle->add_option("file", path)->required();
  oracle->add_flag("--g6", graph6, "input is graph6");
  oracle->add_option("--max-k", max_k);
  oracle->add_option("--budget", budget);

  CLI::App* witness = app.add_subcommand("witness", "edge whose removal drops the index to three");
  witness->add_option("file", path)->required();
  witness->add_flag("--g6", graph6, "input is graph6");

  CLI::App* gen = app.add_subcommand("gen", "emit generated graphs as edge-list text");
  gen->require_subcommand(1);
  CLI::App* gen_shannon = gen->add_subcommand("shannon", "triangle of parallel bouquets");
  gen_shannon->add_option("a", gen_a)->required();
  gen_shannon->add_option("b", gen_b)->required();
  gen_shannon->add_option("c", gen_c)->required();
  CLI::App* gen_f = gen->add_subcommand("f", "random member of the four-color family");
  gen_f->add_option("--seed", seed)->required();
  gen_f->add_option("--budget", gen_budget);
  CLI::App* gen_s = gen->add_subcommand("s", "random subdivision of an odd-degree multigraph");
  gen_s->add_option("--seed", seed)->required();
  gen_s->add_option("--n", gen_n);

  CLI::App* census = app.add_subcommand("census", "exhaustive check up to an edge budget");
  census->add_option("--max-m", max_m)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(path, graph6);
    if (color->parsed()) return cmd_color(path, graph6, dot_path);
    if (verify->parsed()) return cmd_verify(path, graph6, colors_path);
    if (oracle->parsed()) return cmd_oracle(path, graph6, max_k, budget);
    if (witness->parsed()) return cmd_witness(path, graph6);
    if (gen->parsed()) {
      if (gen_shannon->parsed()) {
        if (gen_a < 1 || gen_b < 1 || gen_c < 1)
          throw std::invalid_argument("bouquet sizes must be at least 1");
        oddchrome::MultiGraph g(3);
        for (int i = 0; i < gen_a; ++i) g.add_edge(0, 1);
        for (int i = 0; i < gen_b; ++i) g.add_edge(1, 2);
        for (int i = 0; i < gen_c; ++i) g.add_edge(0, 2);
        std::cout << oddchrome::serialize_mel(g);
      } else if (gen_f->parsed()) {
        std::cout << oddchrome::serialize_mel(
            oddchrome::gen_f(seed, gen_budget));
      } else {
        std::cout << oddchrome::serialize_mel(oddchrome::gen_s(seed, gen_n));
      }
      return kExitOk;
    }
    if (census->parsed()) return cmd_census(max_m);
  } catch (const oddchrome::BudgetExceeded& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const oddchrome::ParseError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitBadInput;
}
