#pragma once

// Certification machinery for the two-step lower bound on the
// two-dimensional torus: for every balanced colouring of [k]^2 (k >= 6),
// writing x = 1/4 + eps for the red coordinate, the blue coordinate obeys
// y >= 1/8 + eps/2.  The argument classifies the blue cells with exactly one
// blue neighbour, builds a bipartite auxiliary graph H, and double-counts its
// edges; everything here checks those steps exactly, per colouring.

#include "transit/colouring.hpp"
#include "transit/common.hpp"
#include "transit/enumerate.hpp"
#include "transit/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace transit {

// Classification of a blue cell v with exactly one blue neighbour w, in the
// frame rotated so that w sits north of v:
//   HeavyPartner (type 3) — w itself has at least three blue neighbours;
//   Flanked      (type 1) — both neighbours of w perpendicular to the v->w
//                           axis are red;
//   Mixed        (type 2) — neither of the above.
enum class B1Class { Flanked, Mixed, HeavyPartner };

// Census of the singly-attached blue cells and the auxiliary graph sizes.
// X = Flanked ∪ Mixed cells; Y = red cells with one to three red neighbours.
struct TypeCensus {
  std::int64_t t1 = 0;  // Flanked
  std::int64_t t2 = 0;  // Mixed
  std::int64_t t3 = 0;  // HeavyPartner
  std::int64_t y_size = 0;
  std::int64_t h_edges = 0;

  std::int64_t x_size() const { return t1 + t2; }
  std::int64_t b1() const { return t1 + t2 + t3; }
};

// The bipartite auxiliary graph H.  A Flanked cell joins its four torus
// neighbours that lie in Y; a Mixed cell joins the Y-cells among the eight
// cells surrounding it.  Edge order is deterministic (row-major scan).
struct AuxiliaryGraph {
  std::vector<int> left;                   // cells of X, ascending
  std::vector<int> right;                  // cells of Y, ascending
  std::vector<std::pair<int, int>> edges;  // (x cell, y cell)
  std::vector<int> left_degree;            // parallel to left
  std::vector<int> right_degree;           // parallel to right

  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }
};

namespace detail {

struct Torus2View {
  int k = 0;
  const Colouring* c = nullptr;

  int index(int i, int j) const { return i * k + j; }
  int wrap(int a) const { return ((a % k) + k) % k; }
  int at(int i, int j) const { return index(wrap(i), wrap(j)); }
  bool red(int i, int j) const { return c->red(at(i, j)); }
};

inline Torus2View torus2_view(const Colouring& c, int k, int min_k, const char* op) {
  if (k < min_k)
    throw ParameterError(std::string(op) + ": needs k >= " + std::to_string(min_k));
  if (c.graph().size() != k * k || c.graph().degree() != 4)
    throw ParameterError(std::string(op) + ": colouring must live on the [k]^2 torus");
  if (!c.balanced())
    throw ParameterError(std::string(op) + ": colouring must be balanced");
  const Graph torus_check = build_torus(2, k);
  if (!(c.graph() == torus_check))
    throw ParameterError(std::string(op) + ": graph is not the [k]^2 torus");
  return Torus2View{k, &c};
}

inline std::vector<int> same_colour_degrees(const Torus2View& t) {
  const Graph& g = t.c->graph();
  std::vector<int> deg(g.size(), 0);
  for (int v = 0; v < g.size(); ++v)
    for (int u : g.neighbours(v))
      if (t.c->red(u) == t.c->red(v)) ++deg[v];
  return deg;
}

// For a blue cell v = (i, j) with exactly one blue neighbour, classify it.
// `same` holds same-colour degrees for every cell.
inline B1Class classify_cell(const Torus2View& t, const std::vector<int>& same,
                             int i, int j) {
  static constexpr int DIRS[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  int di = 0, dj = 0;
  for (const auto& dir : DIRS) {
    if (!t.red(i + dir[0], j + dir[1])) {
      di = dir[0];
      dj = dir[1];
      break;
    }
  }
  const int w = t.at(i + di, j + dj);
  if (same[w] >= 3) return B1Class::HeavyPartner;
  // Perpendicular directions to the v->w axis (the frame rotation).
  const int pi = -dj, pj = di;
  if (t.red(i + di + pi, j + dj + pj) && t.red(i + di - pi, j + dj - pj))
    return B1Class::Flanked;
  return B1Class::Mixed;
}

inline AuxiliaryGraph build_h_impl(const Torus2View& t) {
  const int k = t.k;
  const Graph& g = t.c->graph();
  const std::vector<int> same = same_colour_degrees(t);
  std::vector<bool> in_y(g.size(), false);
  AuxiliaryGraph h;
  for (int v = 0; v < g.size(); ++v) {
    if (t.c->red(v) && same[v] >= 1 && same[v] <= 3) {
      in_y[v] = true;
      h.right.push_back(v);
    }
  }
  std::vector<int> right_pos(g.size(), -1);
  for (std::size_t i = 0; i < h.right.size(); ++i)
    right_pos[h.right[i]] = static_cast<int>(i);
  h.right_degree.assign(h.right.size(), 0);

  static constexpr int DIRS[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  static constexpr int RING[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                     {0, 1},   {1, -1}, {1, 0},  {1, 1}};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int v = t.index(i, j);
      if (t.c->red(v) || same[v] != 1) continue;
      const B1Class cls = classify_cell(t, same, i, j);
      if (cls == B1Class::HeavyPartner) continue;  // stays out of X
      h.left.push_back(v);
      int deg = 0;
      const auto try_edge = [&](int ui, int uj) {
        const int u = t.at(ui, uj);
        if (in_y[u]) {
          h.edges.emplace_back(v, u);
          ++h.right_degree[right_pos[u]];
          ++deg;
        }
      };
      if (cls == B1Class::Flanked) {
        for (const auto& dir : DIRS) try_edge(i + dir[0], j + dir[1]);
      } else {
        for (const auto& dir : RING) try_edge(i + dir[0], j + dir[1]);
      }
      h.left_degree.push_back(deg);
    }
  }
  return h;
}

inline TypeCensus census_impl(const Torus2View& t) {
  const int k = t.k;
  const std::vector<int> same = same_colour_degrees(t);
  TypeCensus census;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int v = t.index(i, j);
      if (t.c->red(v) || same[v] != 1) continue;
      switch (classify_cell(t, same, i, j)) {
        case B1Class::Flanked: ++census.t1; break;
        case B1Class::Mixed: ++census.t2; break;
        case B1Class::HeavyPartner: ++census.t3; break;
      }
    }
  }
  const AuxiliaryGraph h = build_h_impl(t);
  census.y_size = static_cast<std::int64_t>(h.right.size());
  census.h_edges = h.edge_count();
  return census;
}

// 3x3 patch around a cell, rows north to south, 'R'/'B', for diagnosis.
inline std::string patch_string(const Torus2View& t, int v) {
  const int i = v / t.k, j = v % t.k;
  std::string s;
  for (int di = -1; di <= 1; ++di) {
    if (di != -1) s += '/';
    for (int dj = -1; dj <= 1; ++dj) s += t.red(i + di, j + dj) ? 'R' : 'B';
  }
  return s;
}

}  // namespace detail

// Census of the singly-attached blue cells on the [k]^2 torus, together with
// the auxiliary-graph sizes.  Requires k >= 5 so the local frames have
// distinct cells.
inline TypeCensus classify_b1(const Colouring& c, int k) {
  return detail::census_impl(detail::torus2_view(c, k, 5, "classify_b1"));
}

inline AuxiliaryGraph build_h(const Colouring& c, int k) {
  return detail::build_h_impl(detail::torus2_view(c, k, 5, "build_h"));
}

// The two degree bounds H must satisfy for every balanced colouring (k >= 6):
// each left cell has degree at least 2, each right cell degree at most 3.
// Together they sandwich the edge count: 2(t1+t2) <= |E(H)| <= 3|Y|.
struct ClaimsReport {
  TypeCensus census;
  bool left_ok = true;
  bool right_ok = true;
  bool double_count_ok = true;  // the sandwich, from the exact counts
  int min_left_degree = 0;   // 8 when X is empty (vacuous)
  int max_right_degree = 0;  // 0 when Y is empty
  std::optional<int> left_witness;
  std::optional<int> right_witness;
  std::string left_patch;   // 3x3 around the witness, "" when none
  std::string right_patch;

  bool ok() const { return left_ok && right_ok && double_count_ok; }
};

inline ClaimsReport verify_t2_claims(const Colouring& c, int k) {
  const auto view = detail::torus2_view(c, k, 6, "verify_t2_claims");
  ClaimsReport rep;
  const AuxiliaryGraph h = detail::build_h_impl(view);
  rep.census = detail::census_impl(view);
  rep.min_left_degree = 8;
  for (std::size_t i = 0; i < h.left.size(); ++i) {
    rep.min_left_degree = std::min(rep.min_left_degree, h.left_degree[i]);
    if (h.left_degree[i] < 2 && !rep.left_witness) {
      rep.left_ok = false;
      rep.left_witness = h.left[i];
      rep.left_patch = detail::patch_string(view, h.left[i]);
    }
  }
  for (std::size_t i = 0; i < h.right.size(); ++i) {
    rep.max_right_degree = std::max(rep.max_right_degree, h.right_degree[i]);
    if (h.right_degree[i] > 3 && !rep.right_witness) {
      rep.right_ok = false;
      rep.right_witness = h.right[i];
      rep.right_patch = detail::patch_string(view, h.right[i]);
    }
  }
  rep.double_count_ok = 2 * rep.census.x_size() <= rep.census.h_edges &&
                        rep.census.h_edges <= 3 * rep.census.y_size;
  return rep;
}

// The headline two-step inequality for one colouring, with the intermediate
// exact relations: the index identity (the red square sum equals 2n + 8·eps·n
// where x = 1/4 + eps) and the heavy-cell count bound t3 <= 3·b[3] + 4·b[4].
// The final inequality is asserted with a 4/k safety margin; the exact slack
// y - (1/8 + eps/2) is reported alongside.
struct InequalityReport {
  RationalPair pair;
  Rational eps;    // x - 1/4
  Rational slack;  // y - (1/8 + eps/2)
  bool identity_ok = false;
  bool t3_ok = false;
  bool inequality_ok = false;

  bool ok() const { return identity_ok && t3_ok && inequality_ok; }
};

inline InequalityReport verify_t2_inequality(const Colouring& c, int k) {
  const auto view = detail::torus2_view(c, k, 6, "verify_t2_inequality");
  InequalityReport rep;
  rep.pair = p2(c);
  rep.eps = rep.pair.x - Rational(1, 4);
  const DegreeProfile profile = degree_profile(c);
  const TypeCensus census = detail::census_impl(view);
  const std::int64_t n = static_cast<std::int64_t>(k) * k;
  rep.identity_ok =
      Rational(profile.red_square_sum()) == Rational(2 * n) + Rational(8 * n) * rep.eps;
  rep.t3_ok = census.t3 <= 3 * profile.blue[3] + 4 * profile.blue[4];
  const Rational floor_exact = Rational(1, 8) + rep.eps / 2;
  rep.slack = rep.pair.y - floor_exact;
  rep.inequality_ok = rep.pair.y >= floor_exact - Rational(4, k);
  return rep;
}

// Batch certification over the colourings of a cloud on [k]^2, parallel over
// contiguous row ranges with an order-independent merge (counts, minimum
// slack), so results match for any worker count.
struct BatchBoundReport {
  std::uint64_t checked = 0;
  std::uint64_t claim_failures = 0;
  std::uint64_t inequality_failures = 0;
  std::optional<std::uint64_t> first_failure_row;
  Rational min_slack;  // over all checked colourings

  bool all_ok() const { return claim_failures == 0 && inequality_failures == 0; }
};

inline BatchBoundReport certify_cloud(const RegionCloud& cloud, int k, int workers = 1) {
  if (cloud.n != k * k)
    throw ParameterError("certify_cloud: cloud is not over the [k]^2 torus");
  const auto graph = std::make_shared<const Graph>(build_torus(2, k));
  const std::uint64_t total = cloud.total();
  const int nworkers = std::max(1, workers);
  std::vector<BatchBoundReport> partial(nworkers);
  const std::uint64_t chunk = (total + nworkers - 1) / nworkers;
  std::vector<std::thread> pool;
  for (int w = 0; w < nworkers; ++w) {
    const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
    const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi] {
      BatchBoundReport& acc = partial[w];
      for (std::uint64_t row = lo; row < hi; ++row) {
        const Colouring col(graph, cloud.masks[row].to_reds(cloud.n));
        const ClaimsReport claims = verify_t2_claims(col, k);
        const InequalityReport ineq = verify_t2_inequality(col, k);
        if (acc.checked == 0 || ineq.slack < acc.min_slack) acc.min_slack = ineq.slack;
        ++acc.checked;
        const bool bad = !claims.ok() || !ineq.ok();
        if (!claims.ok()) ++acc.claim_failures;
        if (!ineq.ok()) ++acc.inequality_failures;
        if (bad && !acc.first_failure_row) acc.first_failure_row = row;
      }
    });
  }
  for (auto& th : pool) th.join();
  BatchBoundReport out;
  for (const auto& part : partial) {
    if (part.checked == 0) continue;
    if (out.checked == 0 || part.min_slack < out.min_slack) out.min_slack = part.min_slack;
    out.checked += part.checked;
    out.claim_failures += part.claim_failures;
    out.inequality_failures += part.inequality_failures;
    if (part.first_failure_row && !out.first_failure_row)
      out.first_failure_row = part.first_failure_row;
  }
  return out;
}

}  // namespace transit
