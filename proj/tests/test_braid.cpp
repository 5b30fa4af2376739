#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "annular/braid.hpp"

using namespace annular;

TEST_CASE("parser: words, inference, validation") {
  BraidWord w = parse_braid_word("1 1 1 -2 2");
  CHECK(w.strands == 3);
  CHECK(w.length() == 5);
  CHECK(w.letters[3] == Letter{2, -1});
  CHECK(parse_braid_word("").strands == 2);
  CHECK(parse_braid_word("1", 4).strands == 4);
  CHECK_THROWS(parse_braid_word("1 x"));
  CHECK_THROWS(parse_braid_word("0"));
  CHECK_THROWS(parse_braid_word("3", 3));  // index out of range
}

TEST_CASE("garside element") {
  CHECK(garside_delta(2).str() == "1");
  CHECK(garside_delta(3).str() == "1 2 1");
  BraidWord d4 = garside_delta(4);
  CHECK(d4.length() == 6);
  // Order-reversing permutation.
  auto p = d4.permutation();
  for (int i = 0; i < 4; ++i) CHECK(p[i] == 3 - i);
  CHECK_THROWS(garside_delta(1));
}

TEST_CASE("permutation tracks strand endpoints") {
  // sigma_1 in B_2 swaps the strands.
  auto p = parse_braid_word("1").permutation();
  CHECK(p == std::vector<int>{1, 0});
  // sigma_1 sigma_2 in B_3 is the 3-cycle 0->1->2->0 reading start->end.
  auto q = parse_braid_word("1 2").permutation();
  CHECK(q[0] == 2);
  CHECK(q[1] == 0);
  CHECK(q[2] == 1);
}

TEST_CASE("mirrors") {
  BraidWord w = parse_braid_word("1 1 -2", 3);
  CHECK(w.mirror_positions().str() == "2 2 -1");
  CHECK(w.mirror_crossings().str() == "-1 -1 2");
}

TEST_CASE("closure components and windings") {
  // sigma_1^3 sigma_2^5 closes to a knot: one component of winding 3.
  auto c1 = closure_components(parse_braid_word("1 1 1 2 2 2 2 2"));
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].winding() == 3);
  // sigma_1^2 in B_2 closes to a 2-component link.
  auto c2 = closure_components(parse_braid_word("1 1"));
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].winding() == 1);
  // Trivial 3-braid closes to a 3-component unlink.
  auto c3 = closure_components(parse_braid_word("", 3));
  CHECK(c3.size() == 3);
}
