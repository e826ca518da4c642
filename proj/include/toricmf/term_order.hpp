#pragma once

#include <string>
#include <vector>

#include "toricmf/integer.hpp"
#include "toricmf/problem_model.hpp"

namespace toricmf {

/// Exponent vector over the variables (z, y, x_1, ..., x_n), in that order.
using Exponents = std::vector<Int>;

enum class TieBreak {
  /// Weighted reverse lexicographic with z < y < x_1 < ... < x_n: on a weight
  /// tie, the monomial with the smaller exponent of the smallest differing
  /// variable (z first) is larger.
  RevlexZSmallest,
  /// Weighted lexicographic with z > y > x_1 > ... > x_n.
  LexZLargest,
};

struct TermOrder {
  WeightVector weights;
  TieBreak tie_break = TieBreak::RevlexZSmallest;

  Int weight(const Exponents& e) const;
  /// Strict comparison: true when `lhs` is larger than `rhs`.
  bool greater(const Exponents& lhs, const Exponents& rhs) const;
  std::string name() const;
};

std::string to_string(TieBreak t);
/// Accepts "revlex" / "revlex_z_smallest" and "lex" / "lex_z_largest".
TieBreak parse_tie_break(const std::string& name);
std::vector<TieBreak> all_tie_breaks();

}  // namespace toricmf
