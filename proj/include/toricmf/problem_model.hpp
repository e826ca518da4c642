#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricmf/exact_lattice.hpp"
#include "toricmf/integer.hpp"

namespace toricmf {

/// Images of the semigroup generators in the finite group H.
/// h_z is attached to b (the z generator), h_y to c (the y generator).
struct TorsionData {
  FiniteAbelianGroup group;
  std::vector<GroupElement> h_x;
  GroupElement h_z;
  GroupElement h_y;
};

/// The defining data of a codimension-two simplicial semigroup S, generated
/// inside N^n (+) H by (a_i e_i, h_i), (b, h_z) and (c, h_y).
///
/// Variable roles: x_i = u_i^{a_i}; z has exponent vector b and pairs with
/// the s coordinate of the rank-two lattice; y has exponent vector c and pairs
/// with p.
struct ProblemSpec {
  std::vector<Int> a;
  std::vector<Int> b;
  std::vector<Int> c;
  std::optional<TorsionData> torsion;

  std::size_t n() const { return a.size(); }
  /// Torsion group, or the trivial group when no torsion is given.
  FiniteAbelianGroup group() const;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&);
};

inline const char* kRoleConvention =
    "z <-> b <-> s, y <-> c <-> p; B(s,p) = z^s x^v- - y^p x^v+ with v_i = (s*b_i - p*c_i)/a_i";

/// Throws InvalidInput naming the first violated condition; returns `spec`.
const ProblemSpec& validate(const ProblemSpec& spec);

/// Zero-based permutation ordering the x-variables by nondecreasing slope
/// b_i / c_i (c_i = 0 counts as +infinity). Stable on ties.
std::vector<std::size_t> slope_permutation(const ProblemSpec& spec);

/// Canonical basis of the rank-two lattice L~ of pairs (s, p) for which
/// s*(b, h_z) - p*(c, h_y) lies in the span of the axis generators.
Basis2 lattice_ltilde(const ProblemSpec& spec);

/// Direct membership test for L~ (divisibility plus torsion), independent of
/// lattice_ltilde.
bool in_ltilde(const IntPair& sp, const ProblemSpec& spec);

/// v_i = (s*b_i - p*c_i) / a_i. Throws InvalidInput if some division is not
/// exact.
std::vector<Int> x_exponents(const IntPair& sp, const ProblemSpec& spec);

/// Torsion character s*h_z - p*h_y - sum v_i*h_i of a point of Ker(Phi).
GroupElement torsion_character(const IntPair& sp, const ProblemSpec& spec);

/// Strictly positive grading making every lattice binomial homogeneous.
struct WeightVector {
  Int w_z;
  Int w_y;
  std::vector<Int> w_x;
};

WeightVector weights(const ProblemSpec& spec);

/// A point of Z^n (+) H. `tors` is empty for torsion-free specs.
struct SemigroupElement {
  std::vector<Int> coords;
  std::optional<GroupElement> tors;

  friend bool operator==(const SemigroupElement&, const SemigroupElement&) = default;
};

/// g = e_z*(b, h_z) + e_y*(c, h_y) + sum m_i*(a_i e_i, h_i).
struct SemigroupRepresentation {
  Int e_z;
  Int e_y;
  std::vector<Int> m;

  friend bool operator==(const SemigroupRepresentation&, const SemigroupRepresentation&) = default;
};

/// The n + 2 generators of S in the order (a_1 e_1, h_1) ... (a_n e_n, h_n),
/// (b, h_z), (c, h_y).
std::vector<SemigroupElement> semigroup_generators(const ProblemSpec& spec);

SemigroupElement evaluate(const SemigroupRepresentation& rep, const ProblemSpec& spec);

/// Exact membership decision for S. Searches e_z, then e_y, from their upper
/// bounds downward and returns the first representation found.
std::optional<SemigroupRepresentation> semigroup_member(const SemigroupElement& g,
                                                        const ProblemSpec& spec);

/// Reorders the x-variables: new variable i is old variable perm[i].
ProblemSpec permuted(const ProblemSpec& spec, std::span<const std::size_t> perm);

/// Exchanges the roles of y and z: (b, h_z) <-> (c, h_y).
ProblemSpec mirrored(const ProblemSpec& spec);

}  // namespace toricmf
