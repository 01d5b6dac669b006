#include <catch_amalgamated.hpp>

#include "gcov/complex.hpp"

using namespace gcov;
using Status = TrivialityVerdict::Status;

TEST_CASE("closed components: vertices are the group") {
  for (auto G : {Group::cyclic(2), Group::cyclic(3), Group::symmetric(3)}) {
    TargetCover t{{{}}};
    auto c = build_bounded(G, t, Bounds{});
    CHECK(c.vertex_count() == G.order());
    for (int e = 0; e < c.edge_count(); ++e) CHECK(c.edge(e).move.kind == MoveKind::P);
    CHECK(check_connected(c, enumerate_valid_vertices(G, t, Bounds{})).connected);
    CHECK(prove_trivial(pi1_presentation(c), 100000).status == Status::ProvenTrivial);
  }
}

TEST_CASE("valid vertex enumeration") {
  auto G = Group::cyclic(2);
  Bounds b;
  b.max_cuts = 0;
  // one block with g = (1,1,0): six slot orders, h confined to the P-orbit of 0
  CHECK(enumerate_valid_vertices(G, TargetCover{{{1, 1, 0}}}, b).size() == 12);
  // every enumerated vertex validates
  auto S3 = Group::symmetric(3);
  b.max_cuts = 0;
  TargetCover t{{{1, 1, 2, 2}}};
  auto keys = enumerate_valid_vertices(S3, t, b);
  CHECK(!keys.empty());
  auto graph = build_graph(S3, t, b);
  for (auto& k : keys) {
    int v = graph.find(k);
    REQUIRE(v >= 0);
    CHECK(validate(S3, graph.vertex(v), t).ok());
  }
}

TEST_CASE("valid vertices of the two-block shape") {
  auto G = Group::cyclic(2);
  Bounds b;
  b.max_cuts = 1;
  TargetCover t{{{1, 1, 1, 1}}};
  auto keys = enumerate_valid_vertices(G, t, b);
  auto g = build_graph(G, t, b);
  // count per skeleton: eight labellings of the S3+S3 shape with the cut after boundary 2
  std::map<std::string, int> per_shape;
  for (auto& k : keys) {
    int v = g.find(k);
    REQUIRE(v >= 0);
    per_shape[canonical_key(erase_labels(g.vertex(v)))]++;
  }
  bool found = false;
  for (auto& [shape, n] : per_shape)
    if (n != 2) {
      CHECK(n == 8);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("trivial group, three boundaries, no cuts") {
  auto E = Group::cyclic(1);
  Bounds b;
  b.max_cuts = 0;
  TargetCover t{{{0, 0, 0}}};
  auto c = build_bounded(E, t, b);
  // every arrangement of three boundaries on one block
  CHECK(c.bfs_vertex_count() == 6);
  CHECK(check_connected(c, enumerate_valid_vertices(E, t, b)).connected);
}

TEST_CASE("dump is deterministic") {
  auto G = Group::cyclic(2);
  Bounds b;
  b.max_cuts = 1;
  TargetCover t{{{1, 1, 0}}};
  auto a = build_bounded(G, t, b).dump();
  CHECK(a == build_bounded(G, t, b).dump());
  CHECK(a.rfind("V ", 0) == 0);
}

TEST_CASE("presentation of a tree and of a disk") {
  auto E = Group::cyclic(1);
  Bounds b;
  b.max_cuts = 0;
  TargetCover t{{{0, 0}}};
  auto g = build_graph(E, t, b);
  auto p = pi1_presentation(g);
  CHECK(p.relators.empty());
}
