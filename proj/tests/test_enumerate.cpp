#include "transit/transit.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

using namespace transit;

namespace {

std::map<std::string, std::uint64_t> point_histogram(const RegionCloud& cloud) {
  std::map<std::string, std::uint64_t> hist;
  for (std::size_t i = 0; i < cloud.points.size(); ++i)
    hist[fraction_string(cloud.points[i].x) + "," +
         fraction_string(cloud.points[i].y)] = cloud.multiplicity[i];
  return hist;
}

}  // namespace

TEST_CASE("mask helpers") {
  Mask m = Mask::zeros(70);
  CHECK(m.popcount(70) == 0);
  m.set(0);
  m.set(69);
  CHECK(m.test(0));
  CHECK(m.test(69));
  CHECK_FALSE(m.test(35));
  CHECK(m.popcount(70) == 2);
  CHECK(Mask::zeros(8).hex() == "0");

  Mask low = Mask::zeros(8);
  for (int i = 0; i < 4; ++i) low.set(i);
  CHECK(low.hex() == "f");
}

TEST_CASE("exhaustive cloud over two squares") {
  const RegionCloud cloud =
      enumerate_region(build_c4_union(2), RegionCloud::Mode::Exhaustive, {});
  CHECK(cloud.total() == 70);
  CHECK(cloud.n == 8);
  CHECK(cloud.d == 2);
  const std::map<std::string, std::uint64_t> expected = {
      {"0/1,0/1", 4},   {"1/8,1/8", 16}, {"1/4,1/4", 16},
      {"3/8,3/8", 32},  {"1/1,1/1", 2}};
  CHECK(point_histogram(cloud) == expected);
  // Every point sits on the main diagonal, so the hull degenerates.
  CHECK(cloud.hull().vertices().size() == 2);
}

TEST_CASE("exhaustive cloud over three squares") {
  const RegionCloud cloud =
      enumerate_region(build_c4_union(3), RegionCloud::Mode::Exhaustive, {});
  CHECK(cloud.total() == 924);
  CHECK(cloud.points.size() == 9);
  const auto hist = point_histogram(cloud);
  CHECK(hist.at("1/2,2/3") == 48);
  CHECK(hist.at("2/3,1/2") == 48);
  // First off-diagonal pair of the family: needs at least three copies.
  const auto hull = cloud.hull().vertices();
  REQUIRE(hull.size() == 4);
  CHECK(fraction_string(hull[1].x) + "," + fraction_string(hull[1].y) == "2/3,1/2");
  CHECK(fraction_string(hull[3].x) + "," + fraction_string(hull[3].y) == "1/2,2/3");
}

TEST_CASE("exhaustive cloud over the short cycle") {
  const RegionCloud cloud =
      enumerate_region(build_cycle(8), RegionCloud::Mode::Exhaustive, {});
  CHECK(cloud.total() == 70);
  CHECK(cloud.points.size() == 7);
  const ContainmentReport inside = check_containment(cloud, d_region(2));
  CHECK(inside.ok());
  CHECK(inside.outside == 0);
}

TEST_CASE("exhaustive cloud over the small torus") {
  const RegionCloud cloud =
      enumerate_region(build_torus(2, 4), RegionCloud::Mode::Exhaustive, {});
  CHECK(cloud.total() == 12870);
  CHECK(cloud.points.size() == 41);
  CHECK(check_containment(cloud, d_region(4)).ok());

  const auto hull = cloud.hull().vertices();
  REQUIRE(hull.size() == 6);
  const char* expected[] = {"0/1,0/1",     "5/16,1/4",    "21/64,17/64",
                            "9/16,9/16",   "17/64,21/64", "1/4,5/16"};
  for (std::size_t i = 0; i < hull.size(); ++i)
    CHECK(fraction_string(hull[i].x) + "," + fraction_string(hull[i].y) ==
          expected[i]);
}

TEST_CASE("row points match a recomputation from the mask") {
  const Graph g = build_cycle(8);
  const RegionCloud cloud =
      enumerate_region(g, RegionCloud::Mode::Exhaustive, {});
  // Masks are emitted in ascending numeric order.
  CHECK(cloud.masks.front().hex() == "f");
  for (std::size_t row = 0; row < cloud.total(); row += 7) {
    const Colouring c(g, cloud.masks[row].to_reds(g.size()));
    CHECK(cloud.row_point(row) == p2(c));
  }
  CHECK(detail::pair_of_mask(g, cloud.masks.front()) == cloud.row_point(0));
}

TEST_CASE("sampled clouds are seed-deterministic") {
  const Graph g = build_torus(2, 4);
  EnumerateOptions options;
  options.sample_count = 400;
  options.seed = 99;
  const RegionCloud a = enumerate_region(g, RegionCloud::Mode::Sampled, options);
  const RegionCloud b = enumerate_region(g, RegionCloud::Mode::Sampled, options);
  REQUIRE(a.total() == 400);
  CHECK(a.seed == 99);
  for (std::size_t i = 0; i < a.total(); ++i)
    CHECK(a.masks[i].hex() == b.masks[i].hex());

  options.seed = 100;
  const RegionCloud c = enumerate_region(g, RegionCloud::Mode::Sampled, options);
  bool any_difference = false;
  for (std::size_t i = 0; i < a.total(); ++i)
    any_difference = any_difference || !(a.masks[i] == c.masks[i]);
  CHECK(any_difference);

  // Every sampled mask is balanced.
  for (const Mask& m : a.masks) CHECK(m.popcount(g.size()) == g.size() / 2);
}

TEST_CASE("worker count does not change the cloud") {
  const Graph g = build_torus(2, 4);
  EnumerateOptions serial;
  serial.workers = 1;
  EnumerateOptions parallel;
  parallel.workers = 4;
  const RegionCloud a = enumerate_region(g, RegionCloud::Mode::Exhaustive, serial);
  const RegionCloud b =
      enumerate_region(g, RegionCloud::Mode::Exhaustive, parallel);
  CHECK(cloud_csv(a) == cloud_csv(b));

  serial.sample_count = parallel.sample_count = 1000;
  serial.seed = parallel.seed = 5;
  const RegionCloud c = enumerate_region(g, RegionCloud::Mode::Sampled, serial);
  const RegionCloud d = enumerate_region(g, RegionCloud::Mode::Sampled, parallel);
  CHECK(cloud_csv(c) == cloud_csv(d));
}

TEST_CASE("exhaustive guard") {
  EnumerateOptions options;
  options.exhaustive_guard = 100;
  CHECK_THROWS_AS(
      enumerate_region(build_torus(2, 4), RegionCloud::Mode::Exhaustive, options),
      ResourceError);
  // The default guard rejects [6]² (C(36,18) ≈ 9·10⁹).
  CHECK_THROWS_AS(
      enumerate_region(build_torus(2, 6), RegionCloud::Mode::Exhaustive, {}),
      ResourceError);
}

TEST_CASE("sample mode with no budget yields an empty cloud") {
  const RegionCloud cloud =
      enumerate_region(build_cycle(8), RegionCloud::Mode::Sampled, {});
  CHECK(cloud.total() == 0);
  CHECK(cloud.points.empty());
}

TEST_CASE("containment violations carry the first witness") {
  const RegionCloud cloud =
      enumerate_region(build_cycle(8), RegionCloud::Mode::Exhaustive, {});
  // The diagonal segment region misses the off-diagonal cycle points.
  const ContainmentReport rep = check_containment(cloud, d_region(1));
  CHECK_FALSE(rep.ok());
  CHECK(rep.outside == 16);
  CHECK(rep.interior + rep.boundary + rep.outside == 70);
  REQUIRE(rep.violations.size() == 2);
  for (const CloudViolation& v : rep.violations) {
    CAPTURE(v.witness.hex());
    CHECK(v.multiplicity == 8);
    // The witness mask really attains the offending point.
    const Graph g = build_cycle(8);
    const Colouring c(g, v.witness.to_reds(8));
    CHECK(p2(c) == v.point);
  }
}

TEST_CASE("gap around the lattice points of the small torus") {
  // No enumerated pair of [4]² comes near (1/4, 1/16) or its swap; the
  // nearest point sits at L∞ distance exactly 3/32.
  const RegionCloud cloud =
      enumerate_region(build_torus(2, 4), RegionCloud::Mode::Exhaustive, {});
  const RationalPoint targets[] = {
      {make_rational(1, 4), make_rational(1, 16)},
      {make_rational(1, 16), make_rational(1, 4)}};
  Rational best = Rational(2);
  for (const auto& p : cloud.points) {
    for (const auto& t : targets) {
      const Rational dx = abs(p.x - t.x);
      const Rational dy = abs(p.y - t.y);
      const Rational dist = std::max(dx, dy);
      if (dist < best) best = dist;
    }
  }
  CHECK(best == make_rational(3, 32));
}
