#pragma once

#include <string>
#include <vector>

#include "toricmf/exact_lattice.hpp"
#include "toricmf/problem_model.hpp"

namespace toricmf {

/// Negative-regular (Hirzebruch-Jung) expansion
///   s_{i-1} = q_{i+1} s_i - s_{i+1},  q >= 2,  0 <= s_{i+1} < s_i,
/// run until the remainder reaches 0.
struct HjExpansion {
  std::vector<Int> q;  ///< q_1 .. q_{m+1}
  std::vector<Int> s;  ///< s_-1 .. s_{m+1}; the last entry is 0

  int m() const { return static_cast<int>(q.size()) - 1; }
};

HjExpansion hj_expand(const Int& s_minus1, const Int& s_0);

/// Fan decomposition of the positive quadrant by the lattice vectors
/// eps_i = (s_i, p_i), i = -1 .. m+1, together with the x-exponent table
/// r_{j,i} = (s_i b_j - p_i c_j) / a_j.
///
/// Storage is zero-based; the accessors take the signed fan index i.
struct FanDecomposition {
  int m = -1;
  std::vector<Int> q;                 ///< q_1 .. q_{m+1}
  std::vector<Int> s_seq;             ///< s_-1 .. s_{m+1}
  std::vector<Int> p_seq;             ///< p_-1 .. p_{m+1}
  std::vector<IntPair> eps;           ///< eps_-1 .. eps_{m+1}
  std::vector<std::vector<Int>> r;    ///< r[j][i+1], j over x-variables
  int nu = -1;                        ///< greatest i with r_{.,i} >= 0
  int mu_neg = 0;                     ///< smallest i with r_{.,i} <= 0

  int first() const { return -1; }
  int last() const { return m + 1; }
  const IntPair& epsilon(int i) const { return eps.at(static_cast<std::size_t>(i + 1)); }
  const Int& s(int i) const { return s_seq.at(static_cast<std::size_t>(i + 1)); }
  const Int& p(int i) const { return p_seq.at(static_cast<std::size_t>(i + 1)); }
  /// q_i for 1 <= i <= m+1.
  const Int& q_at(int i) const { return q.at(static_cast<std::size_t>(i - 1)); }
  const Int& r_at(std::size_t j, int i) const { return r.at(j).at(static_cast<std::size_t>(i + 1)); }
  std::vector<Int> r_column(int i) const;
  /// mu_neg - 1; CM iff mu() <= nu.
  int mu() const { return mu_neg - 1; }
};

/// Builds the fan from the canonical basis of L~ for `spec`.
FanDecomposition build_fan(const ProblemSpec& spec, const Basis2& basis);

struct InvariantReport {
  bool ok = true;
  std::string first_failure;
};

/// Re-checks every structural identity of a fan against its spec:
/// determinant constancy, the three-term recurrence for s, p and every
/// r-row, monotonicity, boundary columns b and -c, support nesting,
/// L~ membership and the nu/mu_neg bounds.
InvariantReport fan_invariants(const FanDecomposition& fan, const ProblemSpec& spec);

}  // namespace toricmf
