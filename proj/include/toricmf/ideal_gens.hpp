#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricmf/fan.hpp"
#include "toricmf/problem_model.hpp"
#include "toricmf/term_order.hpp"

namespace toricmf {

/// z^{e_z} y^{e_y} x^{e_x}.
struct Monomial {
  Int e_z;
  Int e_y;
  std::vector<Int> e_x;

  Exponents exponents() const;
  static Monomial from_exponents(const Exponents& e);
  bool is_one() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// The four shapes a binomial of the lattice ideal can take.
enum class BinomialForm {
  ZPure,    ///< z^s - y^p x^v
  YPure,    ///< y^p - z^s x^v
  ZYMixed,  ///< y^p z^s - x^v with every v_i > 0
  Split,    ///< z^s x^A - y^p x^B, A and B nonzero, A before B in slope order
};

std::string to_string(BinomialForm f);

/// lhs - rhs with disjoint supports. The z-bearing monomial comes first; a
/// pure-x monomial always comes second.
struct Binomial {
  Monomial lhs;
  Monomial rhs;
  BinomialForm form = BinomialForm::ZPure;
};

/// The two monomials of B(s,p) in canonical orientation, unclassified.
/// Throws InvalidInput when the point is zero, has s < 0, or is not in L~.
std::pair<Monomial, Monomial> pair_monomials(const IntPair& sp, const ProblemSpec& spec);

/// Binomial B(s,p) attached to a point of L~. Throws InvalidInput when the
/// point is zero, has s < 0, or is not in L~.
Binomial binomial_of_pair(const IntPair& sp, const ProblemSpec& spec);

/// Form of lhs - rhs, or nullopt when the pair fits none of the four shapes
/// (including the split ordering requirement with respect to `slope_order`).
std::optional<BinomialForm> classify_binomial(const Monomial& lhs, const Monomial& rhs,
                                              std::span<const std::size_t> slope_order);

/// No fan index carries an r-column of mixed sign.
bool is_cm(const FanDecomposition& fan);

struct GeneratorReport {
  bool is_cm = false;
  std::size_t tau = 0;
  std::vector<Binomial> generators;
  std::vector<IntPair> lattice_vectors;
  int nu = -1;
  int mu_neg = 0;
  /// 3 + (q_{nu+2} - 1) + ... + (q_{mu+1} - 1), informational only.
  Int closed_form_tau;
};

GeneratorReport emit_generators(const FanDecomposition& fan, const ProblemSpec& spec);

/// The larger of the two monomials of `b` under `order`.
Monomial leading_monomial(const Binomial& b, const TermOrder& order);

/// Exponent difference of lhs - rhs, laid out as (x_1..x_n, z, y) to match
/// the generator order of the semigroup.
std::vector<Int> exponent_difference(const Binomial& b);

std::string render(const Monomial& m);
std::string render(const Binomial& b);

}  // namespace toricmf
