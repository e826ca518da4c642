#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "toricmf/integer.hpp"

namespace toricmf {

/// A point (s, p) of Z^2. s pairs with z (exponent vector b), p with y
/// (exponent vector c).
struct IntPair {
  Int s;
  Int p;

  friend bool operator==(const IntPair&, const IntPair&) = default;
  friend IntPair operator+(const IntPair& u, const IntPair& v) { return {u.s + v.s, u.p + v.p}; }
  friend IntPair operator-(const IntPair& u, const IntPair& v) { return {u.s - v.s, u.p - v.p}; }
  friend IntPair operator-(const IntPair& u) { return {-u.s, -u.p}; }
  friend IntPair operator*(const Int& k, const IntPair& v) { return {k * v.s, k * v.p}; }
  friend std::ostream& operator<<(std::ostream& os, const IntPair& v) {
    return os << '(' << v.s << ',' << v.p << ')';
  }
};

inline Int det(const IntPair& u, const IntPair& v) { return u.s * v.p - u.p * v.s; }

/// Canonical basis of a full-rank sublattice of Z^2:
///   e_minus1 = (s_-1, 0) with s_-1 > 0,
///   e_0      = (s_0, p_0) with p_0 > 0 and 0 <= s_0 < s_-1.
/// Two lattices are equal iff their canonical bases are equal.
struct Basis2 {
  IntPair e_minus1;
  IntPair e_0;

  /// Index of the lattice in Z^2, s_-1 * p_0.
  Int index() const { return e_minus1.s * e_0.p; }
  bool contains(const IntPair& v) const;

  friend bool operator==(const Basis2&, const Basis2&) = default;
};

/// An element of a finite abelian group, one residue per cyclic factor.
using GroupElement = std::vector<Int>;

/// Product of cyclic groups Z/m_1 x ... x Z/m_k. An empty modulus list is the
/// trivial group.
struct FiniteAbelianGroup {
  std::vector<Int> moduli;

  std::size_t arity() const { return moduli.size(); }
  GroupElement zero() const { return GroupElement(moduli.size(), Int(0)); }
  GroupElement reduce(const GroupElement& g) const;
  bool is_reduced(const GroupElement& g) const;
  bool is_zero(const GroupElement& g) const;
  GroupElement add(const GroupElement& g, const GroupElement& h) const;
  GroupElement scale(const Int& k, const GroupElement& g) const;
  /// Product of the moduli.
  Int order() const;
  /// Least common multiple of the moduli.
  Int exponent() const;
};

struct GcdResult {
  Int g;
  Int u;
  Int v;
};

/// Extended Euclid: g = gcd(a, b) >= 0 and u*a + v*b = g. By convention
/// ext_gcd(0, 0) = (0, 1, 0).
GcdResult ext_gcd(const Int& a, const Int& b);

/// Canonical basis of the lattice spanned by v1, v2. Throws InvalidInput when
/// the vectors are linearly dependent.
Basis2 normalize_basis(const IntPair& v1, const IntPair& v2);

/// Canonical basis of { (s, p) : s*col_s - p*col_p = 0 in group }.
Basis2 kernel_of_pair_map(const GroupElement& col_s, const GroupElement& col_p,
                          const FiniteAbelianGroup& group);

}  // namespace toricmf
