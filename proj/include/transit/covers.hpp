#pragma once

// Independent exact r-covers of Z^m and of explicit graphs.
//
// A set S ⊆ Z^m is an independent exact r-cover if no two members are
// adjacent (under ±1 steps in one coordinate) and every non-member has
// exactly r member neighbours.  Double counting the S/complement edges on a
// torus [k]^m forces |S| = r·k^m/(2m+r), the density r/(d+r) with d = 2m.
// Predicates are periodic; evaluating one on a torus whose side is not a
// multiple of every coordinate period would silently change the set, so such
// calls are refused (SeamError).

#include "transit/common.hpp"
#include "transit/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace transit {

class CoverPredicate {
 public:
  enum class Family { Linear, Hamming, Lifted, Explicit };

  // S = {x : Σ weights_i·x_i ≡ 0 (mod modulus)}; period = modulus everywhere.
  static CoverPredicate linear(std::vector<std::int64_t> weights, std::int64_t modulus) {
    if (weights.empty()) throw ParameterError("linear cover: empty weights");
    if (modulus < 2) throw ParameterError("linear cover: modulus must be >= 2");
    CoverPredicate p;
    p.family_ = Family::Linear;
    p.m_ = static_cast<int>(weights.size());
    p.weights_ = std::move(weights);
    p.modulus_ = modulus;
    p.periods_.assign(p.m_, modulus);
    return p;
  }

  // S = {x : x mod 2 lies in the Hamming code of length 2^l - 1}; membership
  // is a zero syndrome against the parity-check matrix whose columns are the
  // binary encodings of 1..2^l-1.  Period 2 in every coordinate; r = 2.
  static CoverPredicate hamming(int l) {
    if (l < 2) throw ParameterError("hamming cover: need l >= 2");
    if (l > 10) throw ParameterError("hamming cover: l > 10 unsupported");
    CoverPredicate p;
    p.family_ = Family::Hamming;
    p.ham_l_ = l;
    p.m_ = (1 << l) - 1;
    p.periods_.assign(p.m_, 2);
    return p;
  }

  // Pulls `inner` back through the block-sum map [k]^{λ·m} -> coordinates
  // summed in λ-blocks; a λr-cover when inner is an r-cover.
  static CoverPredicate lifted(CoverPredicate inner, int lambda) {
    if (lambda < 1) throw ParameterError("lifted cover: lambda must be >= 1");
    CoverPredicate p;
    p.family_ = Family::Lifted;
    p.lambda_ = lambda;
    p.m_ = inner.m_ * lambda;
    p.periods_.reserve(p.m_);
    for (int i = 0; i < inner.m_; ++i)
      for (int j = 0; j < lambda; ++j) p.periods_.push_back(inner.periods_[i]);
    p.inner_ = std::make_shared<CoverPredicate>(std::move(inner));
    return p;
  }

  // An explicit point set with a declared per-coordinate period.
  static CoverPredicate explicit_set(int m, std::vector<std::int64_t> period,
                                     std::vector<std::vector<std::int64_t>> points) {
    if (m < 1) throw ParameterError("explicit cover: need m >= 1");
    if (static_cast<int>(period.size()) != m)
      throw ParameterError("explicit cover: period size != m");
    for (auto p : period)
      if (p < 1) throw ParameterError("explicit cover: periods must be positive");
    CoverPredicate pr;
    pr.family_ = Family::Explicit;
    pr.m_ = m;
    pr.periods_ = std::move(period);
    for (auto& pt : points) {
      if (static_cast<int>(pt.size()) != m)
        throw ParameterError("explicit cover: point dimension != m");
      for (int i = 0; i < m; ++i)
        pt[i] = mod_floor(pt[i], pr.periods_[i]);
    }
    pr.points_.insert(points.begin(), points.end());
    return pr;
  }

  Family family() const { return family_; }
  int dimension() const { return m_; }
  const std::vector<std::int64_t>& periods() const { return periods_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::int64_t modulus() const { return modulus_; }
  int hamming_order() const { return ham_l_; }
  int lambda() const { return lambda_; }
  const CoverPredicate* inner() const { return inner_.get(); }
  const std::set<std::vector<std::int64_t>>& explicit_points() const { return points_; }

  bool member(const std::vector<std::int64_t>& x) const {
    if (static_cast<int>(x.size()) != m_)
      throw ParameterError("cover membership: point dimension != m");
    switch (family_) {
      case Family::Linear: {
        std::int64_t s = 0;
        for (int i = 0; i < m_; ++i)
          s = mod_floor(s + mod_floor(weights_[i] * mod_floor(x[i], modulus_), modulus_),
                        modulus_);
        return s == 0;
      }
      case Family::Hamming: {
        std::uint32_t syndrome = 0;
        for (int i = 0; i < m_; ++i)
          if (mod_floor(x[i], 2) == 1) syndrome ^= static_cast<std::uint32_t>(i + 1);
        return syndrome == 0;
      }
      case Family::Lifted: {
        std::vector<std::int64_t> y(inner_->m_, 0);
        for (int i = 0; i < inner_->m_; ++i)
          for (int j = 0; j < lambda_; ++j) y[i] += x[i * lambda_ + j];
        return inner_->member(y);
      }
      case Family::Explicit: {
        std::vector<std::int64_t> canon(m_);
        for (int i = 0; i < m_; ++i) canon[i] = mod_floor(x[i], periods_[i]);
        return points_.count(canon) > 0;
      }
    }
    throw ParameterError("cover membership: unknown family");
  }

  static std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
  }

 private:
  CoverPredicate() = default;

  Family family_ = Family::Linear;
  int m_ = 0;
  std::vector<std::int64_t> periods_;
  // Linear:
  std::vector<std::int64_t> weights_;
  std::int64_t modulus_ = 0;
  // Hamming:
  int ham_l_ = 0;
  // Lifted:
  int lambda_ = 0;
  std::shared_ptr<const CoverPredicate> inner_;
  // Explicit:
  std::set<std::vector<std::int64_t>> points_;
};

// --- the cover constructions ------------------------------------------------

// Exact 1-cover: Σ i·x_i ≡ 0 (mod 2m+1).  A non-member with residue ρ reaches
// 0 only by decreasing coordinate ρ or increasing coordinate 2m+1-ρ... for
// weights 1..m those two moves coincide with exactly one neighbour each.
inline CoverPredicate cover_r1(int m) {
  if (m < 1) throw ParameterError("cover_r1: need m >= 1");
  std::vector<std::int64_t> w(m);
  for (int i = 0; i < m; ++i) w[i] = i + 1;
  return CoverPredicate::linear(std::move(w), 2 * m + 1);
}

// Exact 2-cover: Σ i·x_i ≡ 0 (mod m+1); a non-member with residue ρ in 1..m
// zeroes it by decreasing coordinate ρ or increasing coordinate m+1-ρ.
inline CoverPredicate cover_r2(int m) {
  if (m < 2) throw ParameterError("cover_r2: need m >= 2");
  std::vector<std::int64_t> w(m);
  for (int i = 0; i < m; ++i) w[i] = i + 1;
  return CoverPredicate::linear(std::move(w), m + 1);
}

// Exact m-cover: Σ x_i ≡ 0 (mod 3); residue-1 points fix it by decreasing any
// coordinate, residue-2 points by increasing any.
inline CoverPredicate cover_rm(int m) {
  if (m < 1) throw ParameterError("cover_rm: need m >= 1");
  return CoverPredicate::linear(std::vector<std::int64_t>(m, 1), 3);
}

// Exact 2m-cover: even coordinate sum; every neighbour of a non-member is a
// member.
inline CoverPredicate cover_r2m(int m) {
  if (m < 1) throw ParameterError("cover_r2m: need m >= 1");
  return CoverPredicate::linear(std::vector<std::int64_t>(m, 1), 2);
}

// Exact 2-cover in dimension 2^l - 1 from the Hamming code (l = 2 gives the
// parity code {000, 111} in dimension 3).
inline CoverPredicate cover_hamming(int l) { return CoverPredicate::hamming(l); }

inline CoverPredicate lift_cover(const CoverPredicate& inner, int lambda) {
  return CoverPredicate::lifted(inner, lambda);
}

// --- verification -----------------------------------------------------------

struct CoverViolation {
  std::vector<std::int64_t> point;
  bool member = false;        // colour of the offending cell
  int member_neighbours = 0;  // observed count
};

struct CoverReport {
  bool independent = true;  // no member adjacent to a member
  bool exact = true;        // every non-member has exactly r member neighbours
  int r = 0;                // the target checked
  std::int64_t member_count = 0;
  std::int64_t cell_count = 0;
  Rational density;  // member_count / cell_count
  std::vector<CoverViolation> violations;

  bool ok() const { return independent && exact; }
};

namespace detail {
inline void advance_cell(std::vector<std::int64_t>& cs, int k) {
  for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) {
    if (++cs[i] < k) return;
    cs[i] = 0;
  }
}
}  // namespace detail

// Checks independence and exact r-coverage of the predicate over every cell
// of [k]^m.  Cells are scanned in lexicographic order, so the violation list
// is deterministic.
inline CoverReport verify_on_torus(const CoverPredicate& pred, int k, int r) {
  if (k < 3) throw ParameterError("verify_on_torus: need k >= 3");
  if (r < 0) throw ParameterError("verify_on_torus: need r >= 0");
  for (std::int64_t p : pred.periods())
    if (k % p != 0)
      throw SeamError("verify_on_torus: side " + std::to_string(k) +
                      " not divisible by predicate period " + std::to_string(p) +
                      " (wrapping would change the set)");
  const int m = pred.dimension();
  const std::int64_t cells = torus_cell_count(m, k);
  if (cells > 10'000'000)
    throw ResourceError("verify_on_torus: k^m exceeds 1e7 cell guard");

  CoverReport rep;
  rep.r = r;
  rep.cell_count = cells;
  std::vector<std::int64_t> cs(m, 0);
  std::vector<std::int64_t> nb(m);
  for (std::int64_t idx = 0; idx < cells; ++idx, detail::advance_cell(cs, k)) {
    const bool mem = pred.member(cs);
    if (mem) ++rep.member_count;
    int deg = 0;
    for (int i = 0; i < m; ++i) {
      nb = cs;
      nb[i] = (cs[i] + 1) % k;
      if (pred.member(nb)) ++deg;
      nb[i] = (cs[i] + k - 1) % k;
      if (pred.member(nb)) ++deg;
    }
    if (mem && deg != 0) {
      rep.independent = false;
      rep.violations.push_back({cs, true, deg});
    } else if (!mem && deg != r) {
      rep.exact = false;
      rep.violations.push_back({cs, false, deg});
    }
  }
  rep.density = make_rational(rep.member_count, rep.cell_count);
  return rep;
}

// The same check for an explicit vertex set on an arbitrary graph.
inline CoverReport verify_on_graph(const Graph& g, const std::vector<int>& members, int r) {
  if (r < 0) throw ParameterError("verify_on_graph: need r >= 0");
  std::vector<bool> in(g.size(), false);
  for (int v : members) {
    if (v < 0 || v >= g.size())
      throw ParameterError("verify_on_graph: vertex out of range");
    in[v] = true;
  }
  CoverReport rep;
  rep.r = r;
  rep.cell_count = g.size();
  for (int v = 0; v < g.size(); ++v) {
    if (in[v]) ++rep.member_count;
    int deg = 0;
    for (int u : g.neighbours(v))
      if (in[u]) ++deg;
    if (in[v] && deg != 0) {
      rep.independent = false;
      rep.violations.push_back({{v}, true, deg});
    } else if (!in[v] && deg != r) {
      rep.exact = false;
      rep.violations.push_back({{v}, false, deg});
    }
  }
  rep.density = make_rational(rep.member_count, rep.cell_count);
  return rep;
}

// --- exhaustive search ------------------------------------------------------

struct SearchOutcome {
  enum class Status { Found, NonExistent, ResourceLimit };
  Status status = Status::NonExistent;
  // Divisibility pre-filter: an exact r-cover of [k]^m has r·k^m/(2m+r)
  // members; a non-integer count settles non-existence before any search.
  bool divisibility_ok = false;
  Rational required_size;
  std::uint64_t nodes = 0;  // branching decisions explored
  std::string note;
  std::vector<std::vector<std::int64_t>> found;  // lexicographic cell list

  CoverPredicate as_predicate(int m, int k) const {
    return CoverPredicate::explicit_set(m, std::vector<std::int64_t>(m, k), found);
  }
};

namespace detail {

// Deterministic DFS with unit propagation over cell states.  Branch order:
// lowest-index undecided cell, membership tried before non-membership.
class CoverSearcher {
 public:
  CoverSearcher(int m, int k, int r, std::uint64_t node_limit)
      : m_(m), k_(k), r_(r), node_limit_(node_limit) {
    cells_ = static_cast<std::int64_t>(torus_cell_count(m, k));
    neighbours_.resize(cells_);
    std::vector<std::int64_t> cs(m, 0), nb(m);
    for (std::int64_t idx = 0; idx < cells_; ++idx, advance_cell(cs, k_)) {
      for (int i = 0; i < m_; ++i) {
        nb = cs;
        nb[i] = (cs[i] + 1) % k_;
        neighbours_[idx].push_back(flat(nb));
        nb[i] = (cs[i] + k_ - 1) % k_;
        neighbours_[idx].push_back(flat(nb));
      }
      std::sort(neighbours_[idx].begin(), neighbours_[idx].end());
    }
  }

  SearchOutcome run() {
    SearchOutcome out;
    out.required_size = make_rational(BigInt(r_) * cells_, 2 * m_ + r_);
    if (denominator(out.required_size) != 1) {
      out.status = SearchOutcome::Status::NonExistent;
      out.divisibility_ok = false;
      out.note = "pre-filter: required member count " +
                 fraction_string(out.required_size) + " is not an integer";
      return out;
    }
    out.divisibility_ok = true;
    target_ = static_cast<std::int64_t>(numerator(out.required_size));

    state_.assign(cells_, Undecided);
    in_count_.assign(cells_, 0);
    undec_count_.assign(cells_, 0);
    for (std::int64_t c = 0; c < cells_; ++c)
      undec_count_[c] = static_cast<int>(neighbours_[c].size());
    total_in_ = 0;
    total_undec_ = cells_;

    const bool found = dfs(out, 0);
    if (limit_hit_) {
      out.status = SearchOutcome::Status::ResourceLimit;
      out.note = "node limit " + std::to_string(node_limit_) + " reached";
    } else if (found) {
      out.status = SearchOutcome::Status::Found;
      std::vector<std::int64_t> cs(m_, 0);
      for (std::int64_t idx = 0; idx < cells_; ++idx, advance_cell(cs, k_))
        if (state_[idx] == In) out.found.push_back(cs);
      out.note = "found a cover with " + std::to_string(out.found.size()) + " members";
    } else {
      out.status = SearchOutcome::Status::NonExistent;
      out.note = "search space exhausted";
    }
    return out;
  }

 private:
  enum State : signed char { Undecided = 0, In = 1, Out = 2 };

  std::int64_t flat(const std::vector<std::int64_t>& cs) const {
    std::int64_t idx = 0;
    for (auto c : cs) idx = idx * k_ + c;
    return idx;
  }

  // Assign one cell and propagate consequences; returns false on conflict.
  // Every assignment is pushed on the trail for backtracking.  The hard
  // invariant undo_to depends on: a cell on the trail has had its state, the
  // two totals, and ALL of its neighbour counters applied.  Conflicts found
  // mid-update therefore only set `dead`; the cell's bookkeeping always
  // completes before the failure is returned.
  bool assign(std::int64_t c, State s) {
    std::vector<std::int64_t> queue_in, queue_out;
    (s == In ? queue_in : queue_out).push_back(c);
    bool dead = false;
    while (!dead && (!queue_in.empty() || !queue_out.empty())) {
      std::int64_t v;
      State sv;
      if (!queue_in.empty()) {
        v = queue_in.back();
        queue_in.pop_back();
        sv = In;
      } else {
        v = queue_out.back();
        queue_out.pop_back();
        sv = Out;
      }
      if (state_[v] == sv) continue;
      if (state_[v] != Undecided) return false;  // forced both ways; v untouched
      state_[v] = sv;
      trail_.push_back(v);
      --total_undec_;
      if (sv == In) {
        ++total_in_;
        if (total_in_ > target_) dead = true;
        if (in_count_[v] != 0) dead = true;  // member next to a member
      }
      for (std::int64_t u : neighbours_[v]) {
        --undec_count_[u];
        if (sv == In) {
          ++in_count_[u];
          if (state_[u] == In) dead = true;
        }
        if (dead) continue;  // finish the counters, skip propagation
        // Re-examine the exactness constraint of a decided non-member u.
        if (state_[u] == Out) {
          if (in_count_[u] > r_ || in_count_[u] + undec_count_[u] < r_) {
            dead = true;
          } else if (in_count_[u] == r_) {
            for (std::int64_t w : neighbours_[u])
              if (state_[w] == Undecided) queue_out.push_back(w);
          } else if (in_count_[u] + undec_count_[u] == r_) {
            for (std::int64_t w : neighbours_[u])
              if (state_[w] == Undecided) queue_in.push_back(w);
          }
        }
      }
      if (dead) break;
      if (sv == In) {
        // Independence: all neighbours of a member are non-members.
        for (std::int64_t u : neighbours_[v])
          if (state_[u] == Undecided) queue_out.push_back(u);
      } else {
        // v's own exactness constraint, now that v is a non-member.
        if (in_count_[v] > r_ || in_count_[v] + undec_count_[v] < r_) {
          dead = true;
        } else if (in_count_[v] == r_) {
          for (std::int64_t w : neighbours_[v])
            if (state_[w] == Undecided) queue_out.push_back(w);
        } else if (in_count_[v] + undec_count_[v] == r_) {
          for (std::int64_t w : neighbours_[v])
            if (state_[w] == Undecided) queue_in.push_back(w);
        }
      }
      if (total_in_ + total_undec_ < target_) dead = true;
    }
    return !dead;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::int64_t v = trail_.back();
      trail_.pop_back();
      const State sv = static_cast<State>(state_[v]);
      state_[v] = Undecided;
      ++total_undec_;
      if (sv == In) --total_in_;
      for (std::int64_t u : neighbours_[v]) {
        ++undec_count_[u];
        if (sv == In) --in_count_[u];
      }
    }
  }

  bool complete_consistent() const {
    if (total_in_ != target_) return false;
    for (std::int64_t c = 0; c < cells_; ++c) {
      if (state_[c] == In && in_count_[c] != 0) return false;
      if (state_[c] == Out && in_count_[c] != r_) return false;
    }
    return true;
  }

  // Branching always takes the lowest-index undecided cell; cells below
  // `start` are already decided in this subtree, so the scan resumes there.
  bool dfs(SearchOutcome& out, std::int64_t start) {
    if (limit_hit_) return false;
    std::int64_t branch = -1;
    for (std::int64_t c = start; c < cells_; ++c)
      if (state_[c] == Undecided) {
        branch = c;
        break;
      }
    if (branch == -1) return complete_consistent();
    for (const State s : {In, Out}) {
      if (++out.nodes > node_limit_) {
        limit_hit_ = true;
        return false;
      }
      const std::size_t mark = trail_.size();
      if (assign(branch, s) && dfs(out, branch + 1)) return true;
      undo_to(mark);
      if (limit_hit_) return false;
    }
    return false;
  }

  int m_, k_, r_;
  std::uint64_t node_limit_;
  bool limit_hit_ = false;
  std::int64_t cells_ = 0, target_ = 0, total_in_ = 0, total_undec_ = 0;
  std::vector<std::vector<std::int64_t>> neighbours_;
  std::vector<signed char> state_;
  std::vector<int> in_count_, undec_count_;
  std::vector<std::int64_t> trail_;
};

}  // namespace detail

// Deterministic exhaustive search for an independent exact r-cover of [k]^m.
// Applies the divisibility pre-filter, then depth-first search over cells in
// lexicographic order with constraint propagation; no randomization.  A
// non-existence outcome is a certificate (pre-filter result + node count).
inline SearchOutcome exhaustive_cover_search(int m, int k, int r,
                                             std::uint64_t node_limit = 5'000'000) {
  if (m < 1 || k < 3) throw ParameterError("cover search: need m >= 1, k >= 3");
  if (r < 0 || r > 2 * m) throw ParameterError("cover search: need 0 <= r <= 2m");
  const std::int64_t cells = torus_cell_count(m, k);
  if (cells > 4096)
    throw ResourceError("cover search: k^m = " + std::to_string(cells) +
                        " exceeds the 4096-cell guard");
  return detail::CoverSearcher(m, k, r, node_limit).run();
}

}  // namespace transit
