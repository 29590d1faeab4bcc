#pragma once

// Red/blue vertex colourings and their exact transit probabilities.
//
// For a colouring with classes R and B of a d-regular graph, the t-step
// transit probability of R is the chance that a walk started uniformly in R,
// stepping to a uniform neighbour each time, stays inside R for all of its
// first t steps.  Everything here is exact rational arithmetic.

#include "transit/common.hpp"
#include "transit/graph.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace transit {

class Colouring {
 public:
  Colouring(Graph g, std::vector<bool> red)
      : Colouring(std::make_shared<const Graph>(std::move(g)), std::move(red)) {}

  Colouring(std::shared_ptr<const Graph> g, std::vector<bool> red)
      : graph_(std::move(g)), red_(std::move(red)) {
    if (!graph_) throw ParameterError("colouring: null graph");
    if (static_cast<int>(red_.size()) != graph_->size())
      throw ParameterError("colouring: size mismatch with graph");
  }

  // Text form: one character per vertex, 'R' or 'B'.
  static Colouring from_string(Graph g, const std::string& s) {
    return from_string(std::make_shared<const Graph>(std::move(g)), s);
  }
  static Colouring from_string(std::shared_ptr<const Graph> g, const std::string& s) {
    if (static_cast<int>(s.size()) != g->size())
      throw ParameterError("colouring string: length != vertex count");
    std::vector<bool> red(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 'R')
        red[i] = true;
      else if (s[i] == 'B')
        red[i] = false;
      else
        throw ParameterError("colouring string: characters must be 'R' or 'B'");
    }
    return Colouring(std::move(g), std::move(red));
  }

  std::string to_string() const {
    std::string s(red_.size(), 'B');
    for (std::size_t i = 0; i < red_.size(); ++i)
      if (red_[i]) s[i] = 'R';
    return s;
  }

  const Graph& graph() const { return *graph_; }
  std::shared_ptr<const Graph> graph_ptr() const { return graph_; }
  bool red(int v) const { return red_[v]; }
  const std::vector<bool>& reds() const { return red_; }

  int red_count() const {
    int c = 0;
    for (bool r : red_)
      if (r) ++c;
    return c;
  }
  bool balanced() const { return 2 * red_count() == graph_->size(); }

  Colouring swapped() const {
    std::vector<bool> flipped(red_.size());
    for (std::size_t i = 0; i < red_.size(); ++i) flipped[i] = !red_[i];
    return Colouring(graph_, std::move(flipped));
  }

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<bool> red_;
};

// Counts of vertices by same-colour neighbour degree: red[i] is the number of
// red vertices with exactly i red neighbours (i = 0..d), likewise blue.
struct DegreeProfile {
  std::vector<std::int64_t> red;
  std::vector<std::int64_t> blue;

  std::int64_t red_index() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < red.size(); ++i) s += static_cast<std::int64_t>(i) * red[i];
    return s;
  }
  std::int64_t blue_index() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < blue.size(); ++i) s += static_cast<std::int64_t>(i) * blue[i];
    return s;
  }
  std::int64_t red_square_sum() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < red.size(); ++i)
      s += static_cast<std::int64_t>(i) * static_cast<std::int64_t>(i) * red[i];
    return s;
  }
  std::int64_t blue_square_sum() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < blue.size(); ++i)
      s += static_cast<std::int64_t>(i) * static_cast<std::int64_t>(i) * blue[i];
    return s;
  }
};

inline DegreeProfile degree_profile(const Colouring& c) {
  const Graph& g = c.graph();
  DegreeProfile p;
  p.red.assign(g.degree() + 1, 0);
  p.blue.assign(g.degree() + 1, 0);
  for (int v = 0; v < g.size(); ++v) {
    int same = 0;
    for (int u : g.neighbours(v))
      if (c.red(u) == c.red(v)) ++same;
    (c.red(v) ? p.red : p.blue)[same] += 1;
  }
  // For a balanced colouring of a regular graph both classes see the same
  // boundary, so the two index sums (= twice the internal edge counts) agree.
  if (c.balanced() && p.red_index() != p.blue_index())
    throw ParameterError("degree profile: index invariant violated");
  return p;
}

namespace detail {
inline void require_balanced(const Colouring& c, const char* op) {
  if (!c.balanced())
    throw ParameterError(std::string(op) + ": colouring must be balanced");
}
}  // namespace detail

// One-step pair: x = 1 - boundary/(d·|R|), and symmetrically for blue; the two
// coordinates coincide for balanced colourings.
inline RationalPair p1(const Colouring& c) {
  detail::require_balanced(c, "p1");
  const Graph& g = c.graph();
  const std::int64_t half = g.size() / 2;
  const std::int64_t boundary = edge_boundary(g, c.reds());
  const Rational x = Rational(1) - make_rational(boundary, BigInt(g.degree()) * half);
  return {x, x};
}

// Two-step pair from the degree profile: for a balanced colouring of a
// d-regular graph on n vertices the red coordinate equals
// (2/(n·d²))·Σ i²·red[i], by counting two-step walks that stay red.
inline RationalPair p2(const Colouring& c) {
  detail::require_balanced(c, "p2");
  const Graph& g = c.graph();
  const DegreeProfile prof = degree_profile(c);
  const BigInt den = BigInt(g.size()) * g.degree() * g.degree();
  return {make_rational(2 * BigInt(prof.red_square_sum()), den),
          make_rational(2 * BigInt(prof.blue_square_sum()), den)};
}

namespace detail {
// Σ_{v in class} (number of t-step walks from v staying in the class), via
// dynamic programming in big integers: w_{s+1}(v) = Σ_{u ~ v, u in class} w_s(u).
inline BigInt staying_walks(const Graph& g, const std::vector<bool>& in_class, int t) {
  std::vector<BigInt> w(g.size()), next(g.size());
  for (int v = 0; v < g.size(); ++v) w[v] = in_class[v] ? 1 : 0;
  for (int step = 0; step < t; ++step) {
    for (int v = 0; v < g.size(); ++v) {
      next[v] = 0;
      if (!in_class[v]) continue;
      for (int u : g.neighbours(v))
        if (in_class[u]) next[v] += w[u];
    }
    std::swap(w, next);
  }
  BigInt total = 0;
  for (int v = 0; v < g.size(); ++v)
    if (in_class[v]) total += w[v];
  return total;
}
}  // namespace detail

// t-step pair; t = 0 gives (1, 1).  Cost O(t·n·d) big-integer additions; the
// d^t normalizer rules out fixed-width arithmetic.
inline RationalPair pt(const Colouring& c, int t) {
  detail::require_balanced(c, "pt");
  if (t < 0) throw ParameterError("pt: t must be non-negative");
  const Graph& g = c.graph();
  const std::int64_t half = g.size() / 2;
  BigInt den = half;
  for (int i = 0; i < t; ++i) den *= g.degree();
  std::vector<bool> blue(c.reds().size());
  for (std::size_t i = 0; i < blue.size(); ++i) blue[i] = !c.reds()[i];
  return {make_rational(detail::staying_walks(g, c.reds(), t), den),
          make_rational(detail::staying_walks(g, blue, t), den)};
}

}  // namespace transit
