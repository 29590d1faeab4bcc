#pragma once

// Exhaustive and sampled exploration of the two-step pairs of balanced
// colourings ("region clouds"), with deterministic parallelism: the output is
// byte-identical for any worker count because work is split into contiguous
// ranges of a fixed generation order and merged in range order.

#include "transit/colouring.hpp"
#include "transit/common.hpp"
#include "transit/graph.hpp"
#include "transit/region.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace transit {

// A red-vertex set as a little-endian bit mask (bit v = vertex v is red).
struct Mask {
  std::vector<std::uint64_t> words;

  static Mask zeros(int n) {
    Mask m;
    m.words.assign((n + 63) / 64, 0);
    return m;
  }
  bool test(int v) const { return (words[v / 64] >> (v % 64)) & 1u; }
  void set(int v) { words[v / 64] |= std::uint64_t{1} << (v % 64); }
  int popcount(int n) const {
    int c = 0;
    for (int v = 0; v < n; ++v)
      if (test(v)) ++c;
    return c;
  }
  std::vector<bool> to_reds(int n) const {
    std::vector<bool> red(n);
    for (int v = 0; v < n; ++v) red[v] = test(v);
    return red;
  }
  // Lowercase hex, most significant digit first, no leading zeros ("0" for empty).
  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (auto it = words.rbegin(); it != words.rend(); ++it)
      for (int shift = 60; shift >= 0; shift -= 4)
        s.push_back(digits[(*it >> shift) & 0xF]);
    const auto first = s.find_first_not_of('0');
    if (first == std::string::npos) return "0";
    return s.substr(first);
  }
  bool operator==(const Mask& o) const { return words == o.words; }
};

namespace detail {

// Binomial table in unsigned 64-bit; C(64,32) fits.
inline std::uint64_t binomial(int n, int k) {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> c{};
    for (int i = 0; i <= 64; ++i) {
      c[i][0] = 1;
      for (int j = 1; j <= i; ++j)
        c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
    return c;
  }();
  if (k < 0 || k > n) return 0;
  return table[n][k];
}

// The `rank`-th n-bit word with `ones` set bits, in increasing numeric order:
// decide bits from the top; a clear top bit accounts for C(n-1, ones) words.
inline std::uint64_t unrank_combination(int n, int ones, std::uint64_t rank) {
  std::uint64_t word = 0;
  for (int bit = n - 1; bit >= 0; --bit) {
    const std::uint64_t without = binomial(bit, ones);
    if (rank >= without) {
      word |= std::uint64_t{1} << bit;
      rank -= without;
      --ones;
    }
  }
  return word;
}

// Next word with the same popcount in increasing numeric order.
inline std::uint64_t next_combination(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

// Two-step pair straight from a mask, in machine integers (the square sums
// are at most n·d², far below overflow at this scale).
inline RationalPair pair_of_mask(const Graph& g, const Mask& mask) {
  std::int64_t red_sq = 0, blue_sq = 0;
  for (int v = 0; v < g.size(); ++v) {
    int same = 0;
    const bool r = mask.test(v);
    for (int u : g.neighbours(v))
      if (mask.test(u) == r) ++same;
    (r ? red_sq : blue_sq) += static_cast<std::int64_t>(same) * same;
  }
  const BigInt den = BigInt(g.size()) * g.degree() * g.degree();
  return {make_rational(2 * red_sq, den), make_rational(2 * blue_sq, den)};
}

}  // namespace detail

class RegionCloud {
 public:
  enum class Mode { Exhaustive, Sampled };

  std::string graph_label;
  int n = 0, d = 0;
  Mode mode = Mode::Exhaustive;
  std::uint64_t seed = 0;  // meaningful for sampled clouds only
  // Per-colouring rows in generation order; point_index refers into points().
  std::vector<Mask> masks;
  std::vector<std::uint32_t> point_index;
  // Distinct pairs sorted by (x, y), with multiplicities.
  std::vector<RationalPair> points;
  std::vector<std::uint64_t> multiplicity;

  std::uint64_t total() const { return masks.size(); }

  const RationalPair& row_point(std::size_t row) const {
    return points[point_index[row]];
  }

  ConvexRegion hull() const {
    std::vector<RationalPoint> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back({p.x, p.y});
    return ConvexRegion::from_points(graph_label + " cloud hull", std::move(pts));
  }
};

struct EnumerateOptions {
  std::uint64_t sample_count = 0;  // sampled mode only
  std::uint64_t seed = 0;          // sampled mode only
  int workers = 1;
  std::uint64_t exhaustive_guard = 10'000'000;  // max C(n, n/2)
};

namespace detail {

// Draw uniform balanced masks by rejection: uniform n-bit words until the
// popcount is n/2.  The acceptance rate is ~sqrt(2/(πn)), and the stream
// depends only on the seed, never on the worker count.
inline std::vector<Mask> sample_masks(int n, std::uint64_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Mask> out;
  out.reserve(count);
  const int nwords = (n + 63) / 64;
  const std::uint64_t top_mask =
      n % 64 == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n % 64)) - 1);
  while (out.size() < count) {
    Mask m = Mask::zeros(n);
    for (int w = 0; w < nwords; ++w) m.words[w] = rng();
    m.words[nwords - 1] &= top_mask;
    if (m.popcount(n) == n / 2) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

// Computes the p2 cloud of balanced colourings.
//
// Exhaustive mode walks every balanced red set in increasing bit-mask order
// (guard: C(n, n/2) must not exceed options.exhaustive_guard).  Sampled mode
// draws options.sample_count masks from the seeded generator.  Worker threads
// each handle a contiguous range of the fixed order.
inline RegionCloud enumerate_region(const Graph& g, RegionCloud::Mode mode,
                                    const EnumerateOptions& options = {}) {
  const int n = g.size();
  if (n % 2 != 0)
    throw ParameterError("enumerate_region: graph order must be even");
  const int workers = std::max(1, options.workers);

  RegionCloud cloud;
  cloud.graph_label = g.label();
  cloud.n = n;
  cloud.d = g.degree();
  cloud.mode = mode;

  if (mode == RegionCloud::Mode::Exhaustive) {
    if (n > 64)
      throw ResourceError("enumerate_region: exhaustive mode needs n <= 64");
    const std::uint64_t total = detail::binomial(n, n / 2);
    if (total > options.exhaustive_guard)
      throw ResourceError(
          "enumerate_region: C(n, n/2) = " + std::to_string(total) +
          " exceeds the guard " + std::to_string(options.exhaustive_guard));
    cloud.masks.resize(total);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
      const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        std::uint64_t word = detail::unrank_combination(n, n / 2, lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
          Mask m = Mask::zeros(n);
          m.words[0] = word;
          cloud.masks[i] = std::move(m);
          if (i + 1 < hi) word = detail::next_combination(word);
        }
      });
    }
    for (auto& th : pool) th.join();
  } else {
    cloud.seed = options.seed;
    cloud.masks = detail::sample_masks(n, options.sample_count, options.seed);
  }

  // Pair computation, parallel over fixed index ranges.
  const std::uint64_t total = cloud.masks.size();
  std::vector<RationalPair> row_pairs(total);
  {
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
      const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (std::uint64_t i = lo; i < hi; ++i)
          row_pairs[i] = detail::pair_of_mask(g, cloud.masks[i]);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Sequential merge into the sorted distinct-point table.
  std::map<RationalPair, std::uint32_t> index_of;
  std::vector<std::uint64_t> counts;
  cloud.point_index.resize(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    auto [it, inserted] =
        index_of.try_emplace(row_pairs[i], static_cast<std::uint32_t>(index_of.size()));
    if (inserted)
      counts.push_back(0);
    ++counts[it->second];
    cloud.point_index[i] = it->second;
  }
  // Remap insertion indices to sorted order (std::map iterates sorted).
  std::vector<std::uint32_t> sorted_pos(index_of.size());
  std::uint32_t pos = 0;
  for (const auto& [pair, idx] : index_of) {
    sorted_pos[idx] = pos++;
    cloud.points.push_back(pair);
  }
  cloud.multiplicity.assign(index_of.size(), 0);
  for (const auto& [pair, idx] : index_of) cloud.multiplicity[sorted_pos[idx]] = counts[idx];
  for (auto& pi : cloud.point_index) pi = sorted_pos[pi];
  return cloud;
}

// --- containment ------------------------------------------------------------

struct CloudViolation {
  RationalPair point;
  std::uint64_t multiplicity = 0;
  Mask witness;  // first mask in generation order attaining the point
};

struct ContainmentReport {
  std::uint64_t interior = 0, boundary = 0, outside = 0;  // colouring counts
  std::vector<CloudViolation> violations;                 // one per outside point
  bool ok() const { return outside == 0; }
};

// Exact membership of every cloud point in the region (boundary counts as
// inside).  Each distinct point is tested once.
inline ContainmentReport check_containment(const RegionCloud& cloud,
                                           const ConvexRegion& region) {
  ContainmentReport rep;
  std::vector<Containment> verdict(cloud.points.size());
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    verdict[i] = region.contains({cloud.points[i].x, cloud.points[i].y});
    switch (verdict[i]) {
      case Containment::Interior: rep.interior += cloud.multiplicity[i]; break;
      case Containment::Boundary: rep.boundary += cloud.multiplicity[i]; break;
      case Containment::Outside: rep.outside += cloud.multiplicity[i]; break;
    }
  }
  std::vector<bool> reported(cloud.points.size(), false);
  for (std::size_t row = 0; row < cloud.total(); ++row) {
    const std::uint32_t pi = cloud.point_index[row];
    if (verdict[pi] != Containment::Outside || reported[pi]) continue;
    reported[pi] = true;
    rep.violations.push_back(
        {cloud.points[pi], cloud.multiplicity[pi], cloud.masks[row]});
  }
  std::sort(rep.violations.begin(), rep.violations.end(),
            [](const CloudViolation& a, const CloudViolation& b) {
              return a.point < b.point;
            });
  return rep;
}

}  // namespace transit
