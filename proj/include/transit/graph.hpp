#pragma once

// Finite simple d-regular graphs with 0-based vertices, plus the specific
// families used throughout: cycles, discrete tori, unions of 4-cycles, and a
// distinguished 40-vertex cubic graph supporting exact r-covers for r=1,2,3.

#include "transit/common.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace transit {

class Graph {
 public:
  // Validates simplicity, range, and exact d-regularity.
  Graph(int n, int d, std::vector<std::pair<int, int>> edges, std::string label)
      : n_(n), d_(d), label_(std::move(label)) {
    if (n <= 0) throw ParameterError("graph: n must be positive");
    if (d < 0) throw ParameterError("graph: negative degree");
    adj_.assign(n, {});
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n) throw ParameterError("graph: edge endpoint out of range");
      if (u == v) throw ParameterError("graph: self-loop");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw ParameterError("graph: duplicate edge");
    for (const auto& [u, v] : edges) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      if (static_cast<int>(nb.size()) != d)
        throw ParameterError("graph: not " + std::to_string(d) + "-regular");
    }
    edges_ = std::move(edges);
  }

  int size() const { return n_; }
  int degree() const { return d_; }
  const std::string& label() const { return label_; }
  const std::vector<int>& neighbours(int v) const { return adj_.at(v); }
  // Sorted with u < v in each pair, lexicographic overall.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && d_ == o.d_ && edges_ == o.edges_;
  }

 private:
  int n_, d_;
  std::string label_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Number of edges leaving `in_set` (exact; set given as indicator).
inline std::int64_t edge_boundary(const Graph& g, const std::vector<bool>& in_set) {
  if (static_cast<int>(in_set.size()) != g.size())
    throw ParameterError("edge_boundary: indicator size mismatch");
  std::int64_t b = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (!in_set[v]) continue;
    for (int u : g.neighbours(v))
      if (!in_set[u]) ++b;
  }
  return b;
}

// Cycle C_n, vertices 0..n-1, i adjacent to i±1 mod n.
inline Graph build_cycle(int n) {
  if (n < 3) throw ParameterError("cycle: need n >= 3");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, 2, std::move(edges), "cycle(" + std::to_string(n) + ")");
}

// --- Discrete torus [k]^m, 2m-regular, coordinates row-major ----------------
//
// Vertex index = x_1·k^{m-1} + ... + x_m (the last coordinate varies fastest);
// x ~ y iff they differ by ±1 mod k in exactly one coordinate.

inline std::int64_t torus_cell_count(int m, int k) {
  std::int64_t n = 1;
  for (int i = 0; i < m; ++i) {
    n *= k;
    if (n > 100'000'000) throw ResourceError("torus: k^m exceeds 1e8 cell guard");
  }
  return n;
}

inline std::vector<int> torus_coords(std::int64_t index, int m, int k) {
  std::vector<int> cs(m);
  for (int i = m - 1; i >= 0; --i) {
    cs[i] = static_cast<int>(index % k);
    index /= k;
  }
  return cs;
}

inline std::int64_t torus_index(const std::vector<int>& cs, int k) {
  std::int64_t idx = 0;
  for (int c : cs) idx = idx * k + c;
  return idx;
}

inline Graph build_torus(int m, int k) {
  if (m < 1) throw ParameterError("torus: need m >= 1");
  if (k < 3) throw ParameterError("torus: need k >= 3 (±1 neighbours must differ)");
  const std::int64_t n64 = torus_cell_count(m, k);
  if (n64 > 1'000'000)
    throw ResourceError("torus graph: k^m exceeds 1e6 vertex guard");
  const int n = static_cast<int>(n64);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * m);
  for (int v = 0; v < n; ++v) {
    std::vector<int> cs = torus_coords(v, m, k);
    for (int i = 0; i < m; ++i) {
      const int keep = cs[i];
      cs[i] = (keep + 1) % k;
      const int u = static_cast<int>(torus_index(cs, k));
      cs[i] = keep;
      edges.emplace_back(std::min(v, u), std::max(v, u));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, 2 * m, std::move(edges),
               "torus(" + std::to_string(m) + "," + std::to_string(k) + ")");
}

// Disjoint union of `copies` 4-cycles (2-regular, 4·copies vertices).
inline Graph build_c4_union(int copies) {
  if (copies < 1) throw ParameterError("c4 union: need at least one copy");
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < copies; ++c) {
    const int base = 4 * c;
    for (int i = 0; i < 4; ++i) {
      const int u = base + i, v = base + (i + 1) % 4;
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return Graph(4 * copies, 2, std::move(edges),
               "c4union(" + std::to_string(copies) + ")");
}

// --- The 40-vertex cubic graph ----------------------------------------------
//
// Vertices 0..19 are ring A (a_1..a_20 in 1-based terms), 20..39 ring B.
// Edges: the two 20-cycles, plus for each pair (i, j) in the crossing list
// both (a_i, b_j) and (b_i, a_j).  Every index 1..20 appears exactly once in
// the list, so the crossings form a perfect matching between the rings and the
// graph is 3-regular with 60 edges; it is bipartite (each pair has equal
// parity), and it carries independent exact r-covers for r = 1, 2, 3.

inline const std::vector<std::pair<int, int>>& cubic40_crossings() {
  static const std::vector<std::pair<int, int>> F = {
      {1, 5}, {2, 12}, {3, 9},   {4, 18},  {6, 20},
      {7, 17}, {8, 14}, {10, 16}, {11, 15}, {13, 19}};
  return F;
}

inline Graph build_cubic40() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 20; ++i) {
    edges.emplace_back(std::min(i, (i + 1) % 20), std::max(i, (i + 1) % 20));
    edges.emplace_back(20 + std::min(i, (i + 1) % 20),
                       20 + std::max(i, (i + 1) % 20));
  }
  for (const auto& [i, j] : cubic40_crossings()) {
    edges.emplace_back(std::min(i - 1, 20 + j - 1), std::max(i - 1, 20 + j - 1));
    edges.emplace_back(std::min(20 + i - 1, j - 1), std::max(20 + i - 1, j - 1));
  }
  return Graph(40, 3, std::move(edges), "cubic40");
}

// The three distinguished cover sets of cubic40 (0-based vertex lists).
// r=1: every fourth position on both rings.
inline std::vector<int> cubic40_cover1() {
  std::vector<int> s;
  for (int i : {4, 8, 12, 16, 20}) {
    s.push_back(i - 1);
    s.push_back(20 + i - 1);
  }
  std::sort(s.begin(), s.end());
  return s;
}

// r=2: positions {1,3,6,8,11,13,16,18} on both rings.
inline std::vector<int> cubic40_cover2() {
  std::vector<int> s;
  for (int i : {1, 3, 6, 8, 11, 13, 16, 18}) {
    s.push_back(i - 1);
    s.push_back(20 + i - 1);
  }
  std::sort(s.begin(), s.end());
  return s;
}

// r=3: one side of the bipartition (odd ring-A positions, even ring-B ones).
inline std::vector<int> cubic40_cover3() {
  std::vector<int> s;
  for (int i = 1; i <= 20; ++i) {
    if (i % 2 == 1) s.push_back(i - 1);
    if (i % 2 == 0) s.push_back(20 + i - 1);
  }
  std::sort(s.begin(), s.end());
  return s;
}

// Two-colourability check (BFS); fills `side` with one part when bipartite.
inline bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr) {
  std::vector<int> colour(g.size(), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.size(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbours(v)) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          return false;
        }
      }
    }
  }
  if (side) {
    side->clear();
    for (int v = 0; v < g.size(); ++v)
      if (colour[v] == 0) side->push_back(v);
  }
  return true;
}

}  // namespace transit
