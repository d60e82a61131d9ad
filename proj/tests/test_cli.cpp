#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oddchrome/coloring.hpp"
#include "oddchrome/family.hpp"
#include "oddchrome/io.hpp"
#include "oddchrome/multigraph.hpp"
#include "oddchrome/sclass.hpp"
#include "oddchrome/structure.hpp"

using namespace oddchrome;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string("'") + ODDCHROME_CLI_PATH + "' " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string& temp_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/oddchrome_cli_XXXXXX";
    char* d = mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return std::string(d);
  }();
  return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = temp_dir() + "/" + name;
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
  return path;
}

MultiGraph k33_subdivided() {
  MultiGraph g(6);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) g.add_edge(u, v);
  return subdivide_edge(g, 0);
}

MultiGraph w4() {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  return g;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("classify prints the index and the decision case") {
  std::string k33s = write_temp("k33s.mel", serialize_mel(k33_subdivided()));
  RunResult r = run_cli("classify " + k33s);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "chi=4 case=family-F\n");

  std::string p3 = write_temp("p3.mel", "n 3\ne 0 1\ne 1 2\n");
  r = run_cli("classify " + p3);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "chi=2 case=quotient-bipartite\n");

  std::string k2 = write_temp("k2.mel", "n 2\ne 0 1\n");
  r = run_cli("classify " + k2);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "chi=1 case=odd\n");
}

TEST_CASE("classify rejects graphs outside the decidable class") {
  std::string c4 = write_temp("c4.mel", "n 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
  RunResult r = run_cli("classify " + c4, true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("error:") != std::string::npos);

  std::string split = write_temp("split.mel", "n 4\ne 0 1\ne 2 3\n");
  r = run_cli("classify " + split, true);
  CHECK(r.exit_code == 2);
}

TEST_CASE("graph6 input flag") {
  std::string k4 = write_temp("k4.g6", "C~\n");
  RunResult r = run_cli("classify --g6 " + k4);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "chi=1 case=odd\n");
}

TEST_CASE("color emits verified edge lines and optional DOT") {
  MultiGraph balloon(3);
  balloon.add_edge(0, 1);
  balloon.add_edge(0, 1);
  balloon.add_edge(1, 2);
  std::string path = write_temp("balloon.mel", serialize_mel(balloon));
  std::string dot_path = temp_dir() + "/balloon.dot";
  RunResult r = run_cli("color " + path + " --dot " + dot_path);
  REQUIRE(r.exit_code == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  EdgeColoring col(3);
  for (int i = 0; i < 3; ++i) {
    std::istringstream ls(lines[i]);
    int e, u, v, c;
    REQUIRE((ls >> e >> u >> v >> c));
    CHECK(e == i);
    CHECK(u == balloon.edge(e).u);
    CHECK(v == balloon.edge(e).v);
    col.color[e] = c;
  }
  CHECK(col.complete());
  CHECK(verify_odd(balloon, col).ok);
  CHECK(col.used_colors() == 3);

  std::ifstream dot(dot_path);
  REQUIRE(dot.good());
  std::ostringstream buf;
  buf << dot.rdbuf();
  CHECK(buf.str().rfind("graph oddchrome {", 0) == 0);
  CHECK(buf.str().find("color=") != std::string::npos);
}

TEST_CASE("verify accepts the emitted coloring and rejects tampering") {
  MultiGraph balloon(3);
  balloon.add_edge(0, 1);
  balloon.add_edge(0, 1);
  balloon.add_edge(1, 2);
  std::string path = write_temp("balloon2.mel", serialize_mel(balloon));
  RunResult colored = run_cli("color " + path);
  REQUIRE(colored.exit_code == 0);
  std::ostringstream colors;
  for (const std::string& line : lines_of(colored.out)) {
    std::istringstream ls(line);
    int e, u, v, c;
    REQUIRE((ls >> e >> u >> v >> c));
    colors << e << " " << c << "\n";
  }
  std::string good = write_temp("balloon_good.colors", colors.str());
  CHECK(run_cli("verify " + path + " --colors " + good).exit_code == 0);

  std::string bad = write_temp("balloon_bad.colors", "0 1\n1 1\n2 1\n");
  CHECK(run_cli("verify " + path + " --colors " + bad).exit_code == 1);

  std::string partial = write_temp("balloon_partial.colors", "0 1\n");
  CHECK(run_cli("verify " + path + " --colors " + partial).exit_code == 1);
}

TEST_CASE("oracle prints the exact index or gives up loudly") {
  std::string w = write_temp("w4.mel", serialize_mel(w4()));
  RunResult r = run_cli("oracle " + w);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "chi=4\n");

  MultiGraph balloon(3);
  balloon.add_edge(0, 1);
  balloon.add_edge(0, 1);
  balloon.add_edge(1, 2);
  std::string b = write_temp("balloon3.mel", serialize_mel(balloon));
  r = run_cli("oracle " + b + " --max-k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "chi>2\n");

  std::string k33s = write_temp("k33s2.mel", serialize_mel(k33_subdivided()));
  r = run_cli("oracle " + k33s + " --budget 1");
  CHECK(r.exit_code == 3);
  CHECK(r.out == "inconclusive\n");
}

TEST_CASE("witness prints the removable edge and the reduced coloring") {
  std::string w = write_temp("w4b.mel", serialize_mel(w4()));
  RunResult r = run_cli("witness " + w);
  REQUIRE(r.exit_code == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);  // edge line + three remaining edges
  REQUIRE(lines[0].rfind("edge=", 0) == 0);
  int witness = std::stoi(lines[0].substr(5));
  CHECK(witness >= 0);
  CHECK(witness < 4);
  MultiGraph g = w4();
  EdgeColoring col(4);
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    int e, u, v, c;
    REQUIRE((ls >> e >> u >> v >> c));
    CHECK(e != witness);
    col.color[e] = c;
  }
  CHECK(col.color[witness] == 0);
  EdgeDeletion del = remove_edges(g, {witness});
  EdgeColoring sub(del.graph.size());
  for (EdgeId e = 0; e < del.graph.size(); ++e)
    sub.color[e] = col.color[del.edge_to_old[e]];
  CHECK(sub.complete());
  CHECK(sub.used_colors() <= 3);
  CHECK(verify_odd(del.graph, sub).ok);
}

TEST_CASE("generators emit edge-list text") {
  RunResult r = run_cli("gen shannon 2 1 1");
  REQUIRE(r.exit_code == 0);
  MultiGraph t = parse_mel(r.out);
  CHECK(t.order() == 3);
  CHECK(t.size() == 4);
  auto type = shannon_type(t);
  REQUIRE(type.has_value());
  CHECK(shannon_chi(*type) == 4);

  RunResult f1 = run_cli("gen f --seed 5 --budget 20");
  RunResult f2 = run_cli("gen f --seed 5 --budget 20");
  REQUIRE(f1.exit_code == 0);
  CHECK(f1.out == f2.out);
  MultiGraph fg = parse_mel(f1.out);
  CHECK(is_in_s(fg));
  std::string fpath = write_temp("genf.mel", f1.out);
  RunResult fc = run_cli("classify " + fpath);
  CHECK(fc.exit_code == 0);
  CHECK(fc.out == "chi=4 case=family-F\n");

  RunResult s1 = run_cli("gen s --seed 3 --n 7");
  REQUIRE(s1.exit_code == 0);
  MultiGraph sg = parse_mel(s1.out);
  CHECK(is_in_s(sg));
  CHECK(is_connected(sg));
}

TEST_CASE("census prints the frozen small table and agreement counters") {
  RunResult r = run_cli("census --max-m 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n m chi count\n"
        "2 1 1 1\n"
        "2 2 1 1\n"
        "2 3 1 3\n"
        "3 2 2 1\n"
        "3 3 2 1\n"
        "3 3 3 1\n"
        "4 3 1 1\n"
        "4 3 2 1\n"
        "total 10\n"
        "disagreements 0\n"
        "witness-failures 0\n");
}

TEST_CASE("missing input files exit with the input-error code") {
  RunResult r = run_cli("classify " + temp_dir() + "/does_not_exist.mel", true);
  CHECK(r.exit_code == 2);
}
