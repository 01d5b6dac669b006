#include <catch_amalgamated.hpp>

#include "gcov/presentation.hpp"

using namespace gcov;
using Status = TrivialityVerdict::Status;

TEST_CASE("word reduction") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
  CHECK(normal_cyclic_form({2, 1}) == normal_cyclic_form({1, 2}));
  CHECK(normal_cyclic_form({1, 2}) == normal_cyclic_form({-2, -1}));
}

TEST_CASE("verdict fixtures") {
  CHECK(prove_trivial({}, 1000).status == Status::ProvenTrivial);
  auto z = prove_trivial({1, {}}, 1000);
  CHECK(z.status == Status::Nontrivial);
  CHECK(z.h1 == std::vector<std::string>{"0"});
  auto z2 = prove_trivial({1, {{1, 1}}}, 1000);
  CHECK(z2.status == Status::Nontrivial);
  CHECK(z2.h1 == std::vector<std::string>{"2"});
  // <a, b | a b a^-1 b^-2, b a b^-1 a^-2> is trivial but not by Tietze alone
  auto t = prove_trivial({2, {{1, 2, -1, -2, -2}, {2, 1, -2, -1, -1}}}, 100000);
  CHECK(t.status == Status::ProvenTrivial);
  // circle with its disk
  CHECK(prove_trivial({1, {{1, 1, 1}, {1}}}, 10).status == Status::ProvenTrivial);
}

TEST_CASE("abelian invariants against hand diagonalisation") {
  // Z/2 x Z/6 presented as <a,b | a^2, b^6, [a,b]>
  Presentation p{2, {{1, 1}, {2, 2, 2, 2, 2, 2}, {1, 2, -1, -2}}};
  CHECK(abelian_invariants(p) == std::vector<std::string>{"2", "6"});
  // <a,b | a^4 b^6> ~ Z x Z/2 after SNF of (4 6)
  Presentation q{2, {{1, 1, 1, 1, 2, 2, 2, 2, 2, 2}}};
  CHECK(abelian_invariants(q) == std::vector<std::string>{"2", "0"});
}

TEST_CASE("coset enumeration finds group orders") {
  // S3 = <a, b | a^2, b^3, (ab)^2>
  auto r = enumerate_cosets({2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}}, 1000);
  CHECK(r.complete);
  CHECK(r.index == 6);
  // A5 is perfect: H1 = 0 and the verdict must not be ProvenTrivial
  auto a5 = prove_trivial({2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}}}, 100000);
  CHECK(a5.h1.empty());
  CHECK(a5.status == Status::Nontrivial);
  CHECK(a5.cosets.index == 60);
  // free group of rank 2 overflows any budget
  auto f = enumerate_cosets({2, {}}, 500);
  CHECK(!f.complete);
}

TEST_CASE("tietze keeps the group") {
  Presentation p{3, {{1, -2}, {2, 3, -1}, {3, 3}}};
  auto s = tietze_simplify(p);
  // a = b, c = 1: infinite cyclic
  CHECK(s.generators == 1);
  CHECK(abelian_invariants(s) == std::vector<std::string>{"0"});
  Presentation q{3, {{1, -2}, {2, -3}, {3, 3, 3, 3, 3}}};
  auto t = tietze_simplify(q);
  CHECK(t.generators == 1);
  CHECK(abelian_invariants(t) == std::vector<std::string>{"5"});
}
