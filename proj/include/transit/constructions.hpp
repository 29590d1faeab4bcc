#pragma once

// Concrete balanced colourings: cycle families, cycle concatenation, the
// torus half-split construction driven by a cover predicate, and block tiling
// of torus colourings.  Every constructor returns an exactly balanced
// colouring or raises.

#include "transit/colouring.hpp"
#include "transit/common.hpp"
#include "transit/covers.hpp"
#include "transit/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace transit {

// First n/2 vertices red: one red arc, one blue arc.
inline Colouring cycle_half(int n) {
  if (n < 4 || n % 2 != 0) throw ParameterError("cycle_half: need even n >= 4");
  std::vector<bool> red(n, false);
  for (int v = 0; v < n / 2; ++v) red[v] = true;
  return Colouring(build_cycle(n), std::move(red));
}

inline Colouring cycle_alternating(int n) {
  if (n < 4 || n % 2 != 0)
    throw ParameterError("cycle_alternating: need even n >= 4");
  std::vector<bool> red(n, false);
  for (int v = 0; v < n; v += 2) red[v] = true;
  return Colouring(build_cycle(n), std::move(red));
}

struct ThreeQuartersInfo {
  // The mod-3 pattern closes exactly at the 3n/4 cut when n ≡ 0 (mod 12).
  bool seamless = false;
  int adjusted = 0;  // vertices flipped to reach exact balance
};

// Red = {positions 1..3n/4 not divisible by 3} (1-based positions).  For
// 4 | n the count is 3n/4 - n/4 = n/2 exactly, so the balancing fallback
// below cannot trigger; it exists for safety and reports via `info`.
inline Colouring cycle_three_quarters(int n, ThreeQuartersInfo* info = nullptr) {
  if (n < 8 || n % 4 != 0)
    throw ParameterError("cycle_three_quarters: need n >= 8 divisible by 4");
  std::vector<bool> red(n, false);
  for (int v = 0; v < n; ++v) {
    const int pos = v + 1;
    red[v] = pos <= 3 * n / 4 && pos % 3 != 0;
  }
  int count = static_cast<int>(std::count(red.begin(), red.end(), true));
  int adjusted = 0;
  for (int v = 0; count < n / 2 && v < n; ++v)
    if (!red[v]) {
      red[v] = true;
      ++count;
      ++adjusted;
    }
  for (int v = n - 1; count > n / 2 && v >= 0; --v)
    if (red[v]) {
      red[v] = false;
      --count;
      ++adjusted;
    }
  if (info) {
    info->seamless = n % 12 == 0;
    info->adjusted = adjusted;
  }
  return Colouring(build_cycle(n), std::move(red));
}

// Concatenation of cycle colourings around one larger cycle: each part is
// repeated its multiplicity times, blocks laid end to end.  The result's pair
// stays within O(joins/total) of the length-weighted average of the parts'
// pairs, since only vertices within two steps of a block join change their
// same-colour neighbour counts.
inline Colouring concat_cycles(const std::vector<std::pair<Colouring, int>>& parts) {
  if (parts.empty()) throw ParameterError("concat_cycles: no parts");
  std::vector<bool> red;
  for (const auto& [part, mult] : parts) {
    if (part.graph().degree() != 2)
      throw ParameterError("concat_cycles: parts must colour cycles");
    if (mult < 1) throw ParameterError("concat_cycles: multiplicity must be >= 1");
    if (!part.balanced())
      throw ParameterError("concat_cycles: parts must be balanced");
    for (int rep = 0; rep < mult; ++rep)
      for (int v = 0; v < part.graph().size(); ++v) red.push_back(part.red(v));
  }
  const int n = static_cast<int>(red.size());
  return Colouring(build_cycle(n), std::move(red));
}

// --- half-split -------------------------------------------------------------

struct HalfSplitSpec {
  Colouring colouring;
  int m = 0, k = 0, r = 0;
  int a = 0;                          // last-coordinate width of the X slab
  std::vector<std::int64_t> flipped;  // balance adjustment set E (cell indices)
  bool flipped_to_red = false;        // direction of the flips
  // The target pair ((2m-r)/2m, ((2m-r)/2m)^2) in unordered form.
  Rational target_linear;
  Rational target_square;
};

// Torus colouring interpolating between a cover and a solid block: on the
// slab X = [k]^{m-1} x [a] the red set is the cover membership, the rest (Y)
// is solid red, and a deterministic flip set E inside X restores exact
// balance.  a = ceil((2m+r)k/(4m)) makes the expected red share 1/2.
inline HalfSplitSpec half_split(int m, int k, int r, const CoverPredicate& cover) {
  if (m < 1) throw ParameterError("half_split: need m >= 1");
  if (k < 4 || k % 2 != 0) throw ParameterError("half_split: need even k >= 4");
  if (cover.dimension() != m)
    throw ParameterError("half_split: cover dimension != m");
  for (std::int64_t p : cover.periods())
    if (k % p != 0)
      throw SeamError("half_split: side " + std::to_string(k) +
                      " not divisible by cover period " + std::to_string(p));
  const CoverReport check = verify_on_torus(cover, k, r);
  if (!check.ok())
    throw ParameterError("half_split: predicate is not an exact " +
                         std::to_string(r) + "-cover on [" + std::to_string(k) +
                         "]^" + std::to_string(m));

  const std::int64_t n = torus_cell_count(m, k);
  if (n > 1'000'000) throw ResourceError("half_split: torus exceeds 1e6 cells");
  // ceil((2m+r)·k / (4m))
  const int a = static_cast<int>(((2LL * m + r) * k + 4LL * m - 1) / (4LL * m));

  std::vector<bool> red(n, false);
  std::vector<std::int64_t> cs(m, 0);
  for (std::int64_t idx = 0; idx < n; ++idx, detail::advance_cell(cs, k)) {
    const bool in_x = cs[m - 1] < a;
    red[idx] = in_x ? cover.member(cs) : true;
  }

  const std::int64_t target = n / 2;
  std::int64_t current = std::count(red.begin(), red.end(), true);
  HalfSplitSpec res{Colouring(build_torus(m, k), red), m, k, r, a, {}, false,
                      make_rational(2 * m - r, 2 * m),
                      make_rational(BigInt(2 * m - r) * (2 * m - r), BigInt(2 * m) * (2 * m))};
  if (current != target) {
    const bool to_red = current < target;    // flip the majority side's colour
    // Candidates: cells of X currently on the majority side, ordered with
    // the cells farthest from the X/Y interface first, index ascending.
    std::vector<std::pair<int, std::int64_t>> cands;
    std::fill(cs.begin(), cs.end(), 0);
    for (std::int64_t idx = 0; idx < n; ++idx, detail::advance_cell(cs, k)) {
      const std::int64_t z = cs[m - 1];
      if (z >= a) continue;
      if (red[idx] == to_red) continue;
      const int dist = static_cast<int>(std::min(z + 1, a - z));
      cands.emplace_back(-dist, idx);
    }
    std::sort(cands.begin(), cands.end());
    const std::int64_t need = to_red ? target - current : current - target;
    const std::int64_t cap = 10LL * m * (n / k);  // |E| <= c·k^{m-1}, c = 10m
    if (need > cap || need > static_cast<std::int64_t>(cands.size()))
      throw ParameterError("half_split: balance adjustment would exceed its bound");
    std::vector<std::int64_t> flips;
    for (std::int64_t i = 0; i < need; ++i) flips.push_back(cands[i].second);
    std::sort(flips.begin(), flips.end());
    for (std::int64_t idx : flips) red[idx] = to_red;
    res.colouring = Colouring(build_torus(m, k), red);
    res.flipped = std::move(flips);
    res.flipped_to_red = to_red;
  }
  return res;
}

// --- block tiling -----------------------------------------------------------

// Tiles [k·t]^m with t^m blocks that are copies of [k]^m colourings: the
// first s blocks in lexicographic block order receive c1, the rest c2.  With
// both inputs balanced the result is balanced, and its pair lies within
// O(m/k) of the (s/t^m)-weighted average of the input pairs: only cells
// within distance 2 of a block face — O(k^{m-1}) of them per face — see a
// different two-step neighbourhood than in their home colouring.
inline Colouring tile_torus(int m, int k, const Colouring& c1, const Colouring& c2,
                            int s, int t) {
  if (m < 1 || k < 3) throw ParameterError("tile_torus: need m >= 1, k >= 3");
  if (t < 1) throw ParameterError("tile_torus: need t >= 1");
  const std::int64_t blocks = torus_cell_count(m, t);
  if (s < 0 || s > blocks)
    throw ParameterError("tile_torus: s must lie in [0, t^m]");
  const std::int64_t block_cells = torus_cell_count(m, k);
  for (const Colouring* c : {&c1, &c2}) {
    if (c->graph().size() != block_cells || c->graph().degree() != 2 * m)
      throw ParameterError("tile_torus: inputs must colour the [k]^m torus");
    if (!c->balanced()) throw ParameterError("tile_torus: inputs must be balanced");
  }
  const int side = k * t;
  const std::int64_t n = torus_cell_count(m, side);
  if (n > 1'000'000) throw ResourceError("tile_torus: result exceeds 1e6 cells");
  std::vector<bool> red(n, false);
  std::vector<std::int64_t> cs(m, 0), within(m);
  for (std::int64_t idx = 0; idx < n; ++idx, detail::advance_cell(cs, side)) {
    std::int64_t block_index = 0;
    for (int i = 0; i < m; ++i) {
      block_index = block_index * t + cs[i] / k;
      within[i] = cs[i] % k;
    }
    const Colouring& src = block_index < s ? c1 : c2;
    std::int64_t widx = 0;
    for (int i = 0; i < m; ++i) widx = widx * k + within[i];
    red[idx] = src.red(static_cast<int>(widx));
  }
  return Colouring(build_torus(m, side), std::move(red));
}

}  // namespace transit
