#pragma once

#include <utility>
#include <vector>

#include "toricmf/fan.hpp"
#include "toricmf/ideal_gens.hpp"
#include "toricmf/problem_model.hpp"

namespace toricmf {

struct MacaulayReport {
  std::vector<int> mixed_indices;
  std::vector<SemigroupElement> new_gens;
  /// The n + 2 generators of S followed by new_gens.
  std::vector<SemigroupElement> s_prime_gens;
  bool is_macaulayfication_trivial = true;
  /// Set when the ideal has exactly four generators: the canonical module is
  /// then a complete intersection and the S2-fication is a Macaulayfication.
  bool four_generator_note = false;
};

/// Fan indices nu < i < mu_neg, exactly those whose r-column has both signs.
std::vector<int> mixed_indices(const FanDecomposition& fan);

/// E_i = p_i (c, h_y) - sum_j r_{j,i,-} (a_j e_j, h_j) for every mixed index
/// i. Each is checked against its z-side expression
/// s_i (b, h_z) - sum_j r_{j,i,+} (a_j e_j, h_j), for nonnegativity, and for
/// not lying in S; a failure is an InternalError.
std::vector<SemigroupElement> new_semigroup_generators(const FanDecomposition& fan, const ProblemSpec& spec);

/// `tau` is the number of emitted ideal generators (for the four-generator note).
MacaulayReport s_prime(const FanDecomposition& fan, const ProblemSpec& spec, std::size_t tau);

/// A formal nonnegative combination: (multiplicity, element) terms.
using SemigroupCombination = std::vector<std::pair<Int, SemigroupElement>>;

/// Both sides sum to the same element of Z^n (+) H.
bool check_presentation_relation(const SemigroupCombination& lhs, const SemigroupCombination& rhs,
                                 const ProblemSpec& spec);

}  // namespace toricmf
