#include "transit/transit.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace transit;

namespace {

std::set<std::pair<std::string, std::string>> vertex_set(const ConvexRegion& r) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& v : r.vertices())
    out.insert({fraction_string(v.x), fraction_string(v.y)});
  return out;
}

RationalPoint pt(long long xn, long long xd, long long yn, long long yd) {
  return {make_rational(xn, xd), make_rational(yn, yd)};
}

}  // namespace

TEST_CASE("convex hull basics") {
  // A square plus interior points.
  std::vector<RationalPoint> pts = {pt(0, 1, 0, 1), pt(1, 1, 0, 1),
                                    pt(1, 1, 1, 1), pt(0, 1, 1, 1),
                                    pt(1, 2, 1, 2), pt(1, 4, 1, 4)};
  CHECK(convex_hull(pts).size() == 4);

  // Collinear points collapse to a segment.
  std::vector<RationalPoint> line = {pt(0, 1, 0, 1), pt(1, 2, 1, 2),
                                     pt(1, 1, 1, 1)};
  CHECK(convex_hull(line).size() == 2);

  // Duplicates collapse to a single vertex.
  std::vector<RationalPoint> dup = {pt(1, 3, 1, 3), pt(1, 3, 1, 3)};
  CHECK(convex_hull(dup).size() == 1);
}

TEST_CASE("degree region vertex counts") {
  for (int d : {1, 2, 3, 4, 6, 8}) {
    CAPTURE(d);
    CHECK(d_region(d).vertices().size() == static_cast<std::size_t>(2 * d));
  }
  CHECK(d_region(4).label() == "D4");
  CHECK_THROWS_AS(d_region(0), ParameterError);
}

TEST_CASE("degree region d=2 vertices") {
  const auto vs = vertex_set(d_region(2));
  const std::set<std::pair<std::string, std::string>> expected = {
      {"0/1", "0/1"}, {"1/2", "1/4"}, {"1/1", "1/1"}, {"1/4", "1/2"}};
  CHECK(vs == expected);
}

TEST_CASE("torus limit region vertices") {
  const ConvexRegion x4 = x_region(2);
  CHECK(x4.label() == "X4");
  CHECK(x4.vertices().size() == 6);
  const std::set<std::pair<std::string, std::string>> expected4 = {
      {"0/1", "0/1"},  {"1/2", "1/4"},  {"3/4", "9/16"},
      {"1/1", "1/1"},  {"1/4", "1/2"},  {"9/16", "3/4"}};
  CHECK(vertex_set(x4) == expected4);

  const ConvexRegion x6 = x_region(3);
  CHECK(x6.label() == "X6");
  CHECK(x6.vertices().size() == 8);
  const std::set<std::pair<std::string, std::string>> expected6 = {
      {"0/1", "0/1"},   {"1/2", "1/4"},   {"2/3", "4/9"},  {"5/6", "25/36"},
      {"1/1", "1/1"},   {"1/4", "1/2"},   {"4/9", "2/3"},  {"25/36", "5/6"}};
  CHECK(vertex_set(x6) == expected6);

  CHECK(x_region(4).vertices().size() == 8);
  CHECK_THROWS_AS(x_region(1), ParameterError);

  const ConvexRegion limit = torus2_limit_region();
  CHECK(limit.label() == "torus2-limit");
  CHECK(vertex_set(limit) == expected4);
}

TEST_CASE("containment verdicts") {
  const ConvexRegion d2 = d_region(2);
  CHECK(d2.contains(pt(1, 2, 1, 2)) == Containment::Interior);
  CHECK(d2.contains(pt(1, 2, 1, 4)) == Containment::Boundary);  // a vertex
  CHECK(d2.contains(pt(3, 4, 5, 8)) == Containment::Boundary);  // on an edge
  CHECK(d2.contains(pt(1, 4, 1, 16)) == Containment::Outside);
  CHECK(d2.contains(pt(2, 1, 1, 2)) == Containment::Outside);
}

TEST_CASE("containment matches the edge-sign oracle") {
  std::mt19937_64 rng(21);
  for (int d : {2, 3, 4}) {
    const ConvexRegion region = d_region(d);
    for (int trial = 0; trial < 400; ++trial) {
      const RationalPoint p = testoracle::random_point(rng, 40);
      CAPTURE(d, fraction_string(p.x), fraction_string(p.y));
      CHECK(region.contains(p) ==
            testoracle::hull_membership(region.vertices(), p));
    }
  }
}

TEST_CASE("envelope bracket") {
  const EnvelopeQuery q = envelope_query(4, make_rational(7, 8));
  CHECK(q.d == 4);
  CHECK(q.l == 3);
  CHECK(envelope_query(4, Rational(1)).l == 3);  // closed right end
  CHECK(envelope_query(4, Rational(0)).l == 0);
  CHECK(envelope_query(4, make_rational(1, 4)).l == 1);  // exact lattice hit
  CHECK_THROWS_AS(envelope_query(0, Rational(0)), ParameterError);
  CHECK_THROWS_AS(envelope_query(4, Rational(2)), ParameterError);
  CHECK_THROWS_AS(envelope_query(4, Rational(-1)), ParameterError);
}

TEST_CASE("envelope values") {
  CHECK(fraction_string(lower_envelope(2, make_rational(1, 4))) == "1/8");
  CHECK(fraction_string(lower_envelope(4, make_rational(7, 8))) == "25/32");
  CHECK(fraction_string(lower_envelope(4, make_rational(9, 10))) == "33/40");
  CHECK(fraction_string(lower_envelope(4, make_rational(1, 4))) == "1/16");
  CHECK(fraction_string(lower_envelope(6, Rational(1))) == "1/1");
  // Lattice abscissae recover the parabola exactly.
  for (int d : {2, 3, 4, 6})
    for (int l = 0; l <= d; ++l)
      CHECK(lower_envelope(d, make_rational(l, d)) ==
            make_rational(BigInt(l) * l, BigInt(d) * d));
}

TEST_CASE("envelope membership equals hull containment") {
  std::mt19937_64 rng(22);
  for (int d : {2, 3, 4, 6}) {
    const ConvexRegion region = d_region(d);
    for (int trial = 0; trial < 1000; ++trial) {
      const RationalPoint p = testoracle::random_point(rng, 60);
      CAPTURE(d, fraction_string(p.x), fraction_string(p.y));
      CHECK(envelope_membership(d, p) ==
            (region.contains(p) != Containment::Outside));
    }
    // Points pinned to the envelope itself are members.
    for (int num = 0; num <= 24; ++num) {
      const Rational alpha = make_rational(num, 24);
      CHECK(envelope_membership(d, {alpha, lower_envelope(d, alpha)}));
    }
  }
}

TEST_CASE("torus limit regions sit inside the degree regions") {
  for (int m : {2, 3, 4}) {
    const ConvexRegion big = d_region(2 * m);
    const ConvexRegion limit = x_region(m);
    for (const auto& v : limit.vertices()) {
      CAPTURE(m, fraction_string(v.x), fraction_string(v.y));
      CHECK(big.contains(v) != Containment::Outside);
    }
  }
}

TEST_CASE("nested degree regions") {
  // D_2 sits inside X_4: every D_2 vertex is on or inside the hexagon.
  const ConvexRegion x4 = x_region(2);
  const ConvexRegion d2 = d_region(2);
  for (const auto& v : d2.vertices())
    CHECK(x4.contains(v) != Containment::Outside);
}

TEST_CASE("symmetric hull labels") {
  const ConvexRegion r = sym_hull("demo", {pt(1, 2, 1, 4)});
  CHECK(r.label() == "demo");
  CHECK(r.vertices().size() == 2);
}
