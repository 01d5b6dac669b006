#include <catch_amalgamated.hpp>

#include "gcov/relations.hpp"

using namespace gcov;

namespace {

Param canonical_seed(const Group& G, const TargetCover& t) { return canonicalize(seed_parameterization(G, t)).param; }

// the seed plus every vertex one move away, canonical
std::vector<Param> neighbourhood(const Group& G, const TargetCover& t, const Bounds& b) {
  auto p = canonical_seed(G, t);
  std::vector<Param> out{p};
  for (auto& m : enumerate_moves(G, p, b)) out.push_back(canonicalize(apply_move(G, p, m)).param);
  return out;
}

}  // namespace

TEST_CASE("R11 is the single Z^n loop") {
  auto G = Group::cyclic(2);
  auto p = canonical_seed(G, TargetCover{{{1, 1, 0}}});
  auto inst = enumerate_instances(G, p, "R11", Bounds{});
  REQUIRE(inst.size() == 1);
  CHECK(inst[0].loop.size() == 3);
  CHECK(verify_closure(G, p, inst[0]));
}

TEST_CASE("R5 count is blocks times |G|^2") {
  auto G = Group::symmetric(3);
  Bounds b;
  b.max_cuts = 1;
  for (auto& v : neighbourhood(G, TargetCover{{{1, 1, 2, 2}}}, b)) {
    auto inst = enumerate_instances(G, v, "R5", b);
    CHECK(inst.size() == v.blocks.size() * 36);
  }
}

TEST_CASE("R17 needs a cylinder") {
  auto G = Group::cyclic(2);
  auto p = canonical_seed(G, TargetCover{{{1, 1, 0}}});
  CHECK(enumerate_instances(G, p, "R17", Bounds{}).empty());
}

TEST_CASE("every schema closes near small seeds") {
  Bounds b;
  b.max_cuts = 2;
  for (auto G : {Group::cyclic(2), Group::symmetric(3)}) {
    TargetCover t = G.order() == 2 ? TargetCover{{{1, 1, 0}}} : TargetCover{{{1, 1, 2, 2}}};
    for (auto& v : neighbourhood(G, t, b))
      for (auto& inst : enumerate_all_instances(G, v, b)) {
        INFO(inst.schema << " " << format_path(G, inst.loop));
        CHECK(verify_closure(G, v, inst));
      }
  }
}

TEST_CASE("literal R6 and R17 without P do not close") {
  auto G = Group::cyclic(2);
  Bounds b;
  b.max_cuts = 2;
  TargetCover t{{{1, 1, 0}}};
  auto seed = seed_parameterization(G, t);
  // an unmatched cut in F position: split, then translate the right piece
  auto split = apply_Finv(G, seed, 1, 1, 0);
  auto v = canonicalize(apply_P(G, split, 2, 1)).param;
  auto literal = enumerate_instances(G, v, "R6literal", b);
  auto fixed = enumerate_instances(G, v, "R6", b);
  REQUIRE(!literal.empty());
  REQUIRE(fixed.size() == literal.size());
  for (auto& inst : literal) CHECK(!verify_closure(G, v, inst));
  for (auto& inst : fixed) CHECK(verify_closure(G, v, inst));

  // a cylinder with g = 1 carries the Dehn twist
  auto cyl = canonicalize(split).param;
  int r17 = 0;
  for (auto& inst : enumerate_instances(G, cyl, "R17noP", b)) {
    const Node& n = cyl.blocks.at(inst.loop[0].block);
    if (n.lab.g[0] == G.id()) continue;
    CHECK(!verify_closure(G, cyl, inst));
    ++r17;
  }
  CHECK(r17 > 0);
  for (auto& inst : enumerate_instances(G, cyl, "R17", b)) CHECK(verify_closure(G, cyl, inst));
}

TEST_CASE("projection to the trivial group") {
  auto G = Group::cyclic(2);
  auto p = canonical_seed(G, TargetCover{{{1, 1, 0}}});
  auto q = erase_labels(p);
  for (auto& [id, n] : q.blocks)
    for (int i = 0; i < n.arity(); ++i) CHECK((n.lab.g[i] == 0 && n.lab.h[i] == 0));
  CHECK(!project_move(Move::p(1, 1)));
  CHECK(project_move(Move::z(1)).has_value());
}
