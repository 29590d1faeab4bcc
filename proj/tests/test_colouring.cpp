#include "transit/transit.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

using namespace transit;

namespace {

Colouring cycle8_half() {
  return Colouring::from_string(build_cycle(8), "RRRRBBBB");
}

}  // namespace

TEST_CASE("colouring strings round trip") {
  const Colouring c = cycle8_half();
  CHECK(c.to_string() == "RRRRBBBB");
  CHECK(c.red(0));
  CHECK_FALSE(c.red(7));
  CHECK(c.balanced());
  CHECK(c.red_count() == 4);
  CHECK(c.swapped().to_string() == "BBBBRRRR");

  CHECK_THROWS_AS(Colouring::from_string(build_cycle(8), "RRRR"), ParameterError);
  CHECK_THROWS_AS(Colouring::from_string(build_cycle(8), "RRRRBBBX"),
                  ParameterError);
}

TEST_CASE("degree profile") {
  const DegreeProfile prof = degree_profile(cycle8_half());
  // One red run of four: two interior cells with two red neighbours, two
  // boundary cells with one.  Blue mirrors it.
  REQUIRE(prof.red.size() == 3);
  CHECK(prof.red == std::vector<std::int64_t>{0, 2, 2});
  CHECK(prof.blue == std::vector<std::int64_t>{0, 2, 2});
  CHECK(prof.red_square_sum() == 10);
}

TEST_CASE("two-step pair on the half cycle") {
  const RationalPair pair = p2(cycle8_half());
  CHECK(fraction_string(pair.x) == "5/8");
  CHECK(fraction_string(pair.y) == "5/8");
}

TEST_CASE("one-step pair on the half cycle") {
  const RationalPair pair = p1(cycle8_half());
  CHECK(fraction_string(pair.x) == "3/4");
  CHECK(fraction_string(pair.y) == "3/4");
}

TEST_CASE("walk survival series on the half cycle") {
  const Colouring c = cycle8_half();
  const char* expected[] = {"1/1", "3/4", "5/8", "1/2", "13/32"};
  for (int t = 0; t <= 4; ++t) {
    const RationalPair pair = pt(c, t);
    CAPTURE(t);
    CHECK(fraction_string(pair.x) == expected[t]);
    CHECK(fraction_string(pair.y) == expected[t]);
  }
  CHECK_THROWS_AS(pt(c, -1), ParameterError);
}

TEST_CASE("swapping the colours swaps the pair") {
  std::mt19937_64 rng(11);
  const Graph g = build_torus(2, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const Colouring c(g, testoracle::random_balanced(g.size(), rng));
    CHECK(p2(c.swapped()) == p2(c).swapped());
    CHECK(pt(c.swapped(), 3) == pt(c, 3).swapped());
  }
}

TEST_CASE("profile route agrees with explicit path counting") {
  std::mt19937_64 rng(12);
  const Graph graphs[] = {build_cycle(12), build_torus(2, 4), build_c4_union(3),
                          build_cubic40()};
  for (const Graph& g : graphs) {
    for (int trial = 0; trial < 25; ++trial) {
      const Colouring c(g, testoracle::random_balanced(g.size(), rng));
      CAPTURE(g.label(), trial);
      CHECK(p2(c) == testoracle::p2_pair(c));
      CHECK(p1(c) == testoracle::pt_pair(c, 1));
    }
  }
}

TEST_CASE("dynamic programme agrees with walk enumeration") {
  std::mt19937_64 rng(13);
  const Graph graphs[] = {build_cycle(10), build_torus(2, 4), build_cubic40()};
  for (const Graph& g : graphs) {
    for (int trial = 0; trial < 8; ++trial) {
      const Colouring c(g, testoracle::random_balanced(g.size(), rng));
      CAPTURE(g.label(), trial);
      for (int t : {0, 1, 2, 3, 4})
        CHECK(pt(c, t) == testoracle::pt_pair(c, t));
    }
  }
}

TEST_CASE("step consistency of the three routes") {
  std::mt19937_64 rng(14);
  const Graph g = build_cubic40();
  for (int trial = 0; trial < 50; ++trial) {
    const Colouring c(g, testoracle::random_balanced(g.size(), rng));
    CHECK(pt(c, 2) == p2(c));
    CHECK(pt(c, 1) == p1(c));
  }
}

TEST_CASE("unbalanced colourings are rejected by the probability maps") {
  std::vector<bool> red(8, false);
  red[0] = true;
  const Colouring c(build_cycle(8), red);
  CHECK_FALSE(c.balanced());
  CHECK_THROWS_AS(p2(c), ParameterError);
  CHECK_THROWS_AS(p1(c), ParameterError);
  CHECK_THROWS_AS(pt(c, 2), ParameterError);
}
