#include <catch_amalgamated.hpp>

#include "gcov/fibration.hpp"

using namespace gcov;
using Status = TrivialityVerdict::Status;

namespace {

// S3 + S3 with the cut after the second boundary
Param two_block(const Group& G, const TargetCover& t) {
  return apply_Finv(G, canonicalize(seed_parameterization(G, t)).param, 1, 2, G.id());
}

}  // namespace

TEST_CASE("projection erases labels and degenerates P and T") {
  auto G = Group::cyclic(2);
  TargetCover t{{{1, 1, 0}}};
  Param p = canonicalize(seed_parameterization(G, t)).param;
  Param q = apply_P(G, p, 1, 1);
  CHECK(canonical_key(project(p)) == canonical_key(project(q)));
  CHECK(!project_move(Move::p(1, 1)));
  CHECK(!project_move(Move::t(1, 1)));
  CHECK(project_move(Move::f(3))->cut == 3);
  for (auto& [id, n] : project(q).blocks)
    for (Elem h : n.lab.h) CHECK(h == 0);
}

TEST_CASE("single-block fibers are P-orbits") {
  Bounds b;
  struct Case {
    Group G;
    TargetCover t;
    int size;
  };
  std::vector<Case> cases = {{Group::cyclic(2), TargetCover{{{1, 1, 0}}}, 2},
                             {Group::cyclic(3), TargetCover{{{1, 2, 0}}}, 3},
                             {Group::symmetric(3), TargetCover{{{1, 1, 2, 2}}}, 6}};
  for (auto& c : cases) {
    auto f = compute_fiber(c.G, c.t, seed_parameterization(c.G, c.t), b);
    auto r = check_fiber(f, b.coset_budget);
    CHECK(r.size == c.size);
    CHECK(r.connected);
    CHECK(r.pi1.status == Status::ProvenTrivial);
  }
}

TEST_CASE("two-block fiber over Z/2") {
  auto G = Group::cyclic(2);
  TargetCover t{{{1, 1, 1, 1}}};
  Bounds b;
  Param base = two_block(G, t);
  auto f = compute_fiber(G, t, base, b);
  auto r = check_fiber(f, b.coset_budget);
  CHECK(r.size == 8);
  CHECK(r.connected);
  CHECK(r.pi1.status == Status::ProvenTrivial);
  for (auto& k : f.members) {
    int v = f.complex->find(k);
    CHECK(validate(G, f.complex->vertex(v), t).ok());
    CHECK(canonical_key(project(f.complex->vertex(v))) == f.base_key);
  }
  auto noT = compute_fiber(G, t, base, b, FiberOptions{false});
  auto rn = check_fiber(noT, b.coset_budget);
  CHECK(rn.size == 8);
  CHECK(!rn.connected);
  CHECK(rn.components > 1);
}

TEST_CASE("trivial group fibers are points") {
  auto E = Group::cyclic(1);
  TargetCover t{{{0, 0, 0, 0}}};
  Bounds b;
  auto f = compute_fiber(E, t, two_block(E, t), b);
  CHECK(f.members.size() == 1);
  auto sq = check_lifting_squares(E, t, f.base, Move::z(1), b);
  CHECK(sq.pairs == 0);
  CHECK(sq.fail == 0);
}

TEST_CASE("lifting squares over the two-block base") {
  auto G = Group::cyclic(2);
  TargetCover t{{{1, 1, 1, 1}}};
  Bounds b;
  Param base = project(two_block(G, t));
  int checked = 0;
  for (auto& m : enumerate_moves(Group::cyclic(1), base, b)) {
    if (m.kind != MoveKind::Z && m.kind != MoveKind::B && m.kind != MoveKind::F) continue;
    auto r = check_lifting_squares(G, t, base, m, b);
    CHECK(r.fail == 0);
    CHECK(r.ok == r.pairs);
    CHECK(r.pairs > 0);
    if (m.kind == MoveKind::F) {
      CHECK(r.no_lift == 4);  // unmatched lifts cannot glue
      CHECK(r.recipe_ok == r.pairs);
    }
    ++checked;
  }
  CHECK(checked == 7);
}

TEST_CASE("normal paths in the fiber") {
  auto G = Group::cyclic(2);
  TargetCover t{{{1, 1, 1, 1}}};
  auto members = cover_labelings(G, t, project(two_block(G, t)));
  REQUIRE(members.size() == 8);
  for (auto& u : members)
    for (auto& v : members) {
      auto p = fiber_path(G, u, v);
      REQUIRE(p);
      CHECK(canonical_key(apply_path(G, u, *p)) == canonical_key(v));
    }
}
