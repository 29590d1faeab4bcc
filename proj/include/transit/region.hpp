#pragma once

// Exact rational plane geometry: convex hulls, the attainable-pair regions
// D_d for d-regular graphs, the torus limit polygons X_{2m}, and the
// piecewise-linear lower envelope of D_d.  Hull membership and the envelope
// formula are two independent routes to the same predicate; tests require
// them to agree exactly.

#include "transit/common.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace transit {

struct RationalPoint {
  Rational x;
  Rational y;

  RationalPoint swapped() const { return {y, x}; }
  bool operator==(const RationalPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const RationalPoint& o) const { return !(*this == o); }
  bool operator<(const RationalPoint& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

enum class Containment { Outside, Boundary, Interior };

// Exact orientation: >0 left turn, 0 collinear, <0 right turn.
inline Rational cross(const RationalPoint& o, const RationalPoint& a,
                      const RationalPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone-chain convex hull.  Returns vertices in counter-clockwise order
// starting from the lexicographically smallest point; collinear interior
// points are removed.  Zero, one, or two distinct input points give the
// degenerate hull of that size; fully collinear input gives the two extreme
// points.
inline std::vector<RationalPoint> convex_hull(std::vector<RationalPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<RationalPoint> lower, upper;
  for (const auto& p : pts) {
    while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() == 2 && !(lower[0] < lower[1])) std::swap(lower[0], lower[1]);
  return lower;
}

// A labelled convex polygon (possibly degenerate) with exact containment.
class ConvexRegion {
 public:
  ConvexRegion(std::string label, std::vector<RationalPoint> hull_vertices)
      : label_(std::move(label)), verts_(std::move(hull_vertices)) {
    if (verts_.empty()) throw ParameterError("region: no vertices");
  }

  static ConvexRegion from_points(std::string label, std::vector<RationalPoint> pts) {
    return ConvexRegion(std::move(label), convex_hull(std::move(pts)));
  }

  const std::string& label() const { return label_; }
  const std::vector<RationalPoint>& vertices() const { return verts_; }

  Containment contains(const RationalPoint& p) const {
    if (verts_.size() == 1)
      return p == verts_[0] ? Containment::Boundary : Containment::Outside;
    if (verts_.size() == 2) return on_segment(verts_[0], verts_[1], p);
    bool boundary = false;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      const Rational c = cross(verts_[i], verts_[(i + 1) % verts_.size()], p);
      if (c < 0) return Containment::Outside;
      if (c == 0) boundary = true;
    }
    return boundary ? Containment::Boundary : Containment::Interior;
  }

 private:
  static Containment on_segment(const RationalPoint& a, const RationalPoint& b,
                                const RationalPoint& p) {
    if (cross(a, b, p) != 0) return Containment::Outside;
    const RationalPoint lo = std::min(a, b), hi = std::max(a, b);
    const bool within = !(p < lo) && !(hi < p) &&
                        std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y) &&
                        std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x);
    return within ? Containment::Boundary : Containment::Outside;
  }

  std::string label_;
  std::vector<RationalPoint> verts_;
};

// Hull of the points together with their coordinate swaps (the attainable
// regions are symmetric under exchanging the two classes).
inline ConvexRegion sym_hull(std::string label, std::vector<RationalPoint> pts) {
  const std::size_t original = pts.size();
  pts.reserve(2 * original);
  for (std::size_t i = 0; i < original; ++i) pts.push_back(pts[i].swapped());
  return ConvexRegion::from_points(std::move(label), std::move(pts));
}

// D_d: the symmetric hull of {(l/d, l²/d²) : 0 <= l <= d}.  Every balanced
// colouring of a d-regular graph has its (two-step) pair inside D_d, and the
// parabola points are in strictly convex position, so the hull has exactly
// 2d vertices for d >= 1.
inline ConvexRegion d_region(int d) {
  if (d < 1) throw ParameterError("d_region: need d >= 1");
  std::vector<RationalPoint> pts;
  pts.reserve(d + 1);
  for (int l = 0; l <= d; ++l)
    pts.push_back({make_rational(l, d), make_rational(BigInt(l) * l, BigInt(d) * d)});
  return sym_hull("D" + std::to_string(d), std::move(pts));
}

// X_{2m}: the symmetric hull of the parabola points with
// l in {0, m, 2m-2, 2m-1, 2m} over denominator 2m — the limit region of the
// m-dimensional torus family.
inline ConvexRegion x_region(int m) {
  if (m < 2) throw ParameterError("x_region: need m >= 2");
  const int d = 2 * m;
  std::vector<int> ls = {0, m, 2 * m - 2, 2 * m - 1, 2 * m};
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  std::vector<RationalPoint> pts;
  for (int l : ls)
    pts.push_back({make_rational(l, d), make_rational(BigInt(l) * l, BigInt(d) * d)});
  return sym_hull("X" + std::to_string(d), std::move(pts));
}

// The exact limit polygon for the two-dimensional torus family: six vertices
// (0,0), (1/2,1/4), (3/4,9/16), (1,1) and the two swaps.  Identical to
// x_region(2) up to the label.
inline ConvexRegion torus2_limit_region() {
  ConvexRegion r = x_region(2);
  return ConvexRegion("torus2-limit", r.vertices());
}

// A bracketed envelope abscissa: the integer l with l <= alpha·d < l+1
// (alpha = 1 closes the right end of the l = d-1 segment instead, keeping l
// in [0, d-1]).
struct EnvelopeQuery {
  int d = 1;
  Rational alpha;
  int l = 0;
};

inline EnvelopeQuery envelope_query(int d, const Rational& alpha) {
  if (d < 1) throw ParameterError("envelope_query: need d >= 1");
  if (alpha < 0 || alpha > 1)
    throw ParameterError("envelope_query: alpha must lie in [0, 1]");
  BigInt l = rational_floor(alpha * d);
  if (l == d) l = d - 1;
  return EnvelopeQuery{d, alpha, static_cast<int>(l)};
}

// Lower envelope of D_d: the chords of the parabola between consecutive
// lattice abscissae.  For l/d <= alpha < (l+1)/d,
//   g(alpha) = (alpha·d·(2l+1) - l(l+1)) / d²,
// and alpha = 1 uses the closed l = d-1 bracket.  Requires alpha in [0, 1].
inline Rational lower_envelope(const EnvelopeQuery& q) {
  const BigInt l = q.l;
  return (q.alpha * q.d * (2 * l + 1) - Rational(l * (l + 1))) /
         (BigInt(q.d) * q.d);
}

inline Rational lower_envelope(int d, const Rational& alpha) {
  return lower_envelope(envelope_query(d, alpha));
}

// Membership in D_d via the envelope alone: inside the unit square, above the
// envelope, and with the swapped coordinate above the envelope as well.  Must
// agree exactly with d_region(d).contains(p) != Outside.
inline bool envelope_membership(int d, const RationalPoint& p) {
  if (p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1) return false;
  return p.y >= lower_envelope(d, p.x) && p.x >= lower_envelope(d, p.y);
}

}  // namespace transit
