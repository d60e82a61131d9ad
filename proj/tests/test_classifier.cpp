#include <string>

#include "doctest.h"
#include "oddchrome/classifier.hpp"
#include "oddchrome/coloring.hpp"
#include "oddchrome/family.hpp"
#include "oddchrome/multigraph.hpp"
#include "oddchrome/oracle.hpp"
#include "oddchrome/sclass.hpp"
#include "oddchrome/structure.hpp"

using namespace oddchrome;

namespace {

MultiGraph path(int n) {
  MultiGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

MultiGraph triangle(int a, int b, int c) {
  MultiGraph g(3);
  for (int i = 0; i < a; ++i) g.add_edge(0, 1);
  for (int i = 0; i < b; ++i) g.add_edge(1, 2);
  for (int i = 0; i < c; ++i) g.add_edge(0, 2);
  return g;
}

MultiGraph balloon() {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

MultiGraph complete_bipartite(int a, int b) {
  MultiGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

ChiReport checked_classify(const MultiGraph& g) {
  ChiReport r = classify(g);
  CHECK(r.coloring.complete());
  CHECK(verify_odd(g, r.coloring).ok);
  CHECK(r.coloring.used_colors() == r.chi);
  CHECK((r.chi == 4) == r.witness_edge.has_value());
  return r;
}

// The two hand-built inputs for the augmentation construction.
MultiGraph aug_instance_bouquets() {
  // 5-cycle 0-1-2-3-4 with fattened bouquets: (1,2) doubled, (2,3) tripled,
  // (3,4) doubled; vertex 0 is the unique 2-vertex.
  MultiGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(2, 3);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(3, 4);
  g.add_edge(4, 0);
  return g;
}

MultiGraph aug_instance_detours() {
  // 7-cycle with a tripled bouquet plus chords and a two-edge detour, so the
  // absorption walk must leave the cycle and come back.
  MultiGraph g(9);
  g.add_edge(0, 1);  // e0
  g.add_edge(1, 2);  // e1
  g.add_edge(2, 3);  // e2
  g.add_edge(3, 4);  // e3
  g.add_edge(4, 5);  // e4
  g.add_edge(5, 6);  // e5
  g.add_edge(6, 0);  // e6
  g.add_edge(4, 5);  // e7
  g.add_edge(4, 5);  // e8
  g.add_edge(4, 7);  // e9
  g.add_edge(7, 8);  // e10
  g.add_edge(8, 3);  // e11
  g.add_edge(2, 7);  // e12
  g.add_edge(5, 6);  // e13
  g.add_edge(1, 8);  // e14
  return g;
}

}  // namespace

TEST_CASE("case tag names") {
  CHECK(std::string(case_tag_name(CaseTag::kEmpty)) == "empty");
  CHECK(std::string(case_tag_name(CaseTag::kOdd)) == "odd");
  CHECK(std::string(case_tag_name(CaseTag::kQuotientBipartite)) ==
        "quotient-bipartite");
  CHECK(std::string(case_tag_name(CaseTag::kFamilyF)) == "family-F");
  CHECK(std::string(case_tag_name(CaseTag::kOtherwise)) == "otherwise");
}

TEST_CASE("classify: trivial and one-color cases") {
  ChiReport r = checked_classify(MultiGraph(0));
  CHECK(r.chi == 0);
  CHECK(r.tag == CaseTag::kEmpty);

  r = checked_classify(MultiGraph(1));
  CHECK(r.chi == 0);
  CHECK(r.tag == CaseTag::kEmpty);

  r = checked_classify(path(2));
  CHECK(r.chi == 1);
  CHECK(r.tag == CaseTag::kOdd);

  MultiGraph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  r = checked_classify(star);
  CHECK(r.chi == 1);
  CHECK(r.tag == CaseTag::kOdd);

  MultiGraph dumbbell(2);
  dumbbell.add_edge(0, 0);
  dumbbell.add_edge(0, 1);
  dumbbell.add_edge(1, 1);
  r = checked_classify(dumbbell);
  CHECK(r.chi == 1);
  CHECK(r.tag == CaseTag::kOdd);
}

TEST_CASE("classify: two-color cases") {
  ChiReport r = checked_classify(path(3));
  CHECK(r.chi == 2);
  CHECK(r.tag == CaseTag::kQuotientBipartite);

  r = checked_classify(path(4));
  CHECK(r.chi == 2);

  // loop at the end of a path: the loop rides along
  MultiGraph loop_path(3);
  loop_path.add_edge(0, 0);
  loop_path.add_edge(0, 1);
  loop_path.add_edge(1, 2);
  r = checked_classify(loop_path);
  CHECK(r.chi == 2);
  CHECK(r.tag == CaseTag::kQuotientBipartite);
}

TEST_CASE("classify: three-color cases") {
  ChiReport r = checked_classify(balloon());
  CHECK(r.chi == 3);
  CHECK(r.tag == CaseTag::kOtherwise);

  // subdivided K_{3,5}
  MultiGraph k35s = subdivide_edge(complete_bipartite(3, 5), 0);
  r = checked_classify(k35s);
  CHECK(r.chi == 3);
  CHECK(r.tag == CaseTag::kOtherwise);

  // K4 with one edge subdivided: quotient has a loop, not in family F
  MultiGraph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  r = checked_classify(subdivide_edge(k4, 0));
  CHECK(r.chi == 3);
  CHECK(r.tag == CaseTag::kOtherwise);
}

TEST_CASE("classify: four-color cases carry a witness") {
  ChiReport r = checked_classify(triangle(2, 1, 1));
  CHECK(r.chi == 4);
  CHECK(r.tag == CaseTag::kFamilyF);
  REQUIRE(r.witness_edge.has_value());

  MultiGraph k33s = subdivide_edge(complete_bipartite(3, 3), 0);
  r = checked_classify(k33s);
  CHECK(r.chi == 4);
  CHECK(r.tag == CaseTag::kFamilyF);
  REQUIRE(r.witness_edge.has_value());

  // 2-connected composition of two minimal (2,1,1) triangles
  MultiGraph glued = glue_compose(triangle(2, 1, 1), triangle(2, 1, 1), 0, 2);
  r = checked_classify(glued);
  CHECK(r.chi == 4);
  CHECK(r.tag == CaseTag::kFamilyF);

  // two blocks meeting at a cut vertex: one odd local degree, one even
  MultiGraph two_blocks(5);
  two_blocks.add_edge(0, 1);
  two_blocks.add_edge(0, 1);
  two_blocks.add_edge(1, 2);
  two_blocks.add_edge(0, 2);
  two_blocks.add_edge(3, 4);
  two_blocks.add_edge(3, 4);
  two_blocks.add_edge(3, 0);
  two_blocks.add_edge(4, 0);
  r = checked_classify(two_blocks);
  CHECK(r.chi == 4);
  CHECK(r.tag == CaseTag::kFamilyF);
  OracleOutcome o = oracle_chi(two_blocks);
  REQUIRE(o.status == SearchStatus::found);
  CHECK(o.chi == 4);
}

TEST_CASE("a cut vertex with several odd blocks drops to three colors") {
  // three minimal (2,1,1) triangles all sharing a degree-3 vertex: every
  // block is in the family, but the shared vertex sees three odd blocks
  MultiGraph g(7);
  for (int i = 0; i < 3; ++i) {
    VertexId y = 1 + 2 * i, z = 2 + 2 * i;
    g.add_edge(0, y);
    g.add_edge(0, y);
    g.add_edge(y, z);
    g.add_edge(z, 0);
  }
  ChiReport r = classify(g);
  CHECK(r.chi == 3);
  CHECK(r.tag == CaseTag::kOtherwise);
  CHECK(verify_odd(g, r.coloring).ok);
}

TEST_CASE("classify rejects graphs outside its domain") {
  MultiGraph c4(4);
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  CHECK_THROWS_AS(classify(c4), std::invalid_argument);  // no odd vertex

  MultiGraph deg4(5);
  for (int v = 1; v <= 4; ++v) deg4.add_edge(0, v);
  CHECK_THROWS_AS(classify(deg4), std::invalid_argument);  // even degree 4

  MultiGraph disconnected(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  CHECK_THROWS_AS(classify(disconnected), std::invalid_argument);
}

TEST_CASE("color_optimal returns the classify coloring") {
  MultiGraph k33s = subdivide_edge(complete_bipartite(3, 3), 0);
  EdgeColoring c = color_optimal(k33s);
  CHECK(verify_odd(k33s, c).ok);
  CHECK(c.used_colors() == 4);
}

TEST_CASE("augmentation instance with fat bouquets") {
  MultiGraph g = aug_instance_bouquets();
  EdgeColoring c = color3_via_augmentation(g);
  CHECK(c.complete());
  CHECK(c.used_colors() <= 3);
  CHECK(verify_odd(g, c).ok);
}

TEST_CASE("augmentation instance with off-cycle detours") {
  MultiGraph g = aug_instance_detours();
  EdgeColoring c = color3_via_augmentation(g);
  CHECK(c.complete());
  CHECK(c.used_colors() <= 3);
  CHECK(verify_odd(g, c).ok);
}

TEST_CASE("augmentation rejects shapes outside its contract") {
  CHECK_THROWS_AS(color3_via_augmentation(path(3)), std::invalid_argument);
  CHECK_THROWS_AS(color3_via_augmentation(triangle(2, 2, 2)),
                  std::invalid_argument);  // no 2-vertex
  MultiGraph k33s = subdivide_edge(complete_bipartite(3, 3), 0);
  CHECK_THROWS_AS(color3_via_augmentation(k33s),
                  std::invalid_argument);  // max degree 3 < 5
  MultiGraph two2 = subdivide_edge(subdivide_edge(complete_bipartite(3, 5), 0), 1);
  CHECK_THROWS_AS(color3_via_augmentation(two2),
                  std::invalid_argument);  // two 2-vertices
}

TEST_CASE("color3 ladder covers its cases") {
  // even order
  MultiGraph p4 = path(4);
  EdgeColoring c = color3(p4);
  CHECK(verify_odd(p4, c).ok);
  CHECK(c.used_colors() <= 3);

  // odd order with a pendant
  MultiGraph p3 = path(3);
  c = color3(p3);
  CHECK(verify_odd(p3, c).ok);

  c = color3(balloon());
  CHECK(verify_odd(balloon(), c).ok);
  CHECK(c.used_colors() <= 3);

  // odd order, 2-connected, high degree: the augmentation path
  MultiGraph g = aug_instance_bouquets();
  c = color3(g);
  CHECK(verify_odd(g, c).ok);

  // no 3-coloring exists
  CHECK_THROWS_AS(color3(triangle(2, 1, 1)), std::invalid_argument);
}

TEST_CASE("color4_singleton isolates color 4 on one edge at a 2-vertex") {
  for (MultiGraph g : {triangle(2, 1, 1),
                       subdivide_edge(complete_bipartite(3, 3), 0),
                       glue_compose(triangle(2, 1, 1), triangle(2, 1, 1), 0, 2)}) {
    SingletonColoring s = color4_singleton(g);
    CHECK(s.coloring.complete());
    CHECK(verify_odd(g, s.coloring).ok);
    CHECK(s.coloring.used_colors() == 4);
    int fours = 0;
    for (EdgeId e = 0; e < g.size(); ++e)
      if (s.coloring.color[e] == 4) {
        ++fours;
        CHECK(e == s.witness);
      }
    CHECK(fours == 1);
    const Edge& w = g.edge(s.witness);
    CHECK((g.degree(w.u) == 2 || g.degree(w.v) == 2));
  }
}

TEST_CASE("witness_edge yields a verified 3-coloring of g minus the edge") {
  for (MultiGraph g : {triangle(2, 1, 1),
                       subdivide_edge(complete_bipartite(3, 3), 0)}) {
    WitnessReport w = witness_edge(g);
    REQUIRE(w.edge >= 0);
    CHECK(w.coloring.color[w.edge] == 0);
    EdgeDeletion del = remove_edges(g, {w.edge});
    EdgeColoring sub(del.graph.size());
    for (EdgeId e = 0; e < del.graph.size(); ++e)
      sub.color[e] = w.coloring.color[del.edge_to_old[e]];
    CHECK(sub.complete());
    CHECK(sub.used_colors() <= 3);
    CHECK(verify_odd(del.graph, sub).ok);
  }
  CHECK_THROWS_AS(witness_edge(path(3)), std::invalid_argument);  // chi != 4
}

TEST_CASE("classify agrees with the exhaustive oracle on small S-members") {
  std::vector<MultiGraph> all = enumerate_s(7, 6);
  int four_seen = 0;
  for (const MultiGraph& g : all) {
    ChiReport r = checked_classify(g);
    OracleOutcome o = oracle_chi(g);
    REQUIRE(o.status == SearchStatus::found);
    CHECK(r.chi == o.chi);
    if (r.chi == 4) ++four_seen;
  }
  CHECK(all.size() > 20);
  CHECK(four_seen >= 1);  // the minimal (2,1,1) triangle is in range
}

TEST_CASE("classify agrees with the oracle on generated members") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    MultiGraph g = gen_s(seed, 7);
    if (g.size() > 12) continue;
    ChiReport r = checked_classify(g);
    OracleOutcome o = oracle_chi(g);
    if (o.status != SearchStatus::found) continue;
    CHECK(r.chi == o.chi);
  }
}
