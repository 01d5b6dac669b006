#include <catch_amalgamated.hpp>

#include <set>

#include "gcov/block.hpp"

using namespace gcov;

TEST_CASE("monodromy") {
  auto z4 = Group::cyclic(4);
  auto b = make_block(z4, {1, 2, 1}, {0, 3, 2});
  CHECK(monodromies(z4, b) == std::vector<Elem>{3, 2, 3});
  CHECK_THROWS_AS(monodromy(z4, b, 4), BlockError);
  CHECK_THROWS_AS(make_block(z4, {1, 1}, {0, 0}), BlockError);
  auto s3 = Group::symmetric(3);
  for (Elem g = 0; g < 6; ++g)
    for (Elem h = 0; h < 6; ++h) {
      auto blk = make_block(s3, {g, s3.inv(g)}, {h, 0});
      CHECK(monodromy(s3, blk, 1) == s3.mul(s3.mul(h, s3.inv(g)), s3.inv(h)));
    }
}

TEST_CASE("find_iso") {
  auto z4 = Group::cyclic(4);
  auto a = make_block(z4, {1, 3}, {0, 2});
  CHECK(find_iso(z4, a, a) == z4.id());
  CHECK(find_iso(z4, a, make_block(z4, {1, 3}, {3, 1})) == 1);
  auto z2 = Group::cyclic(2);
  CHECK(!find_iso(z2, make_block(z2, {1, 1}, {0, 0}), make_block(z2, {1, 1}, {0, 1})));
}

TEST_CASE("find_iso is exact on S3 two-slot blocks") {
  auto G = Group::symmetric(3);
  std::vector<Block> all;
  for (Elem g = 0; g < 6; ++g)
    for (Elem h1 = 0; h1 < 6; ++h1)
      for (Elem h2 = 0; h2 < 6; ++h2) all.push_back(make_block(G, {g, G.inv(g)}, {h1, h2}));
  for (size_t i = 0; i < all.size(); i += 7)
    for (size_t j = 0; j < all.size(); j += 5) {
      bool brute = false;
      for (Elem x = 0; x < 6; ++x) {
        bool ok = true;
        for (int s = 0; s < 2; ++s)
          ok = ok && G.conj(x, all[i].g[s]) == all[j].g[s] && G.mul(all[i].h[s], G.inv(x)) == all[j].h[s];
        brute = brute || ok;
      }
      CHECK(find_iso(G, all[i], all[j]).has_value() == brute);
    }
}

TEST_CASE("S2 isomorphism classes over Z/2") {
  auto G = Group::cyclic(2);
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> reps;
  std::vector<Block> classes;
  for (Elem g = 0; g < 2; ++g)
    for (Elem h1 = 0; h1 < 2; ++h1)
      for (Elem h2 = 0; h2 < 2; ++h2) {
        auto b = make_block(G, {g, g}, {h1, h2});
        bool seen = false;
        for (auto& c : classes) seen = seen || find_iso(G, c, b).has_value();
        if (!seen) classes.push_back(b);
      }
  CHECK(classes.size() == 4);
}

TEST_CASE("gluing predicates") {
  auto z4 = Group::cyclic(4);
  // m = 1 needs g = 3 with h = 0
  auto m1 = make_block(z4, {3, 1}, {0, 0});
  auto m3 = make_block(z4, {1, 3}, {0, 0});
  CHECK(glue_admissible(z4, m1, 1, m3, 1));
  CHECK(!glue_admissible(z4, m1, 1, m1, 1));
  CHECK(f_applicable(z4, m1, 1, m3, 1));
  auto m3h = make_block(z4, {1, 3}, {2, 0});
  CHECK(!f_applicable(z4, m1, 1, m3h, 1));
  auto e = make_block(z4, {0, 0}, {0, 0});
  CHECK(f_applicable(z4, e, 1, e, 2));
}

TEST_CASE("format and parse") {
  auto s3 = Group::symmetric(3);
  auto b = make_block(s3, {s3.parse("[2,1,3]"), s3.parse("[2,1,3]")}, {0, 1});
  auto text = format_block(s3, b);
  CHECK(parse_block(s3, text) == b);
  auto z4 = Group::cyclic(4);
  CHECK(format_block(z4, make_block(z4, {1, 2, 1}, {0, 3, 2})) == "S3(1,2,1; 0,3,2)");
}
