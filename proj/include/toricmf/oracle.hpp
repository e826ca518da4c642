#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricmf/fan.hpp"
#include "toricmf/ideal_gens.hpp"
#include "toricmf/problem_model.hpp"
#include "toricmf/term_order.hpp"

namespace toricmf {

inline constexpr std::size_t kDefaultPairLimit = 10000;

/// lead - trail with lead > trail in the engine's term order. Unlike the
/// emitted Binomial, the two terms may share variables.
struct EngineBinomial {
  Exponents lead;
  Exponents trail;

  friend bool operator==(const EngineBinomial&, const EngineBinomial&) = default;
};

/// sum_i w_i * gen_i == 0 in Z^n (+) H, with w laid out as (x_1..x_n, z, y)
/// against the generators (a_1 e_1, h_1)..(a_n e_n, h_n), (b, h_z), (c, h_y).
bool in_lattice(std::span<const Int> w, const ProblemSpec& spec);

/// Orients u - v (or v - u) so the larger term leads. nullopt when u == v.
std::optional<EngineBinomial> orient(const Exponents& u, const Exponents& v, const TermOrder& order);
EngineBinomial orient(const Binomial& b, const TermOrder& order);

/// Fully reduced normal form of a term. Since every basis element is
/// monic lead - trail, reducing a term yields a single term.
Exponents normal_form(Exponents term, std::span<const EngineBinomial> basis);

/// S-polynomial (L/lead_g)*trail_g - (L/lead_f)*trail_f, nullopt if zero.
std::optional<EngineBinomial> s_polynomial(const EngineBinomial& f, const EngineBinomial& g,
                                           const TermOrder& order);

struct ReductionResult {
  bool zero = true;
  std::optional<EngineBinomial> remainder;
};

ReductionResult spair_and_reduce(const EngineBinomial& f, const EngineBinomial& g,
                                 std::span<const EngineBinomial> basis, const TermOrder& order);

/// Buchberger completion. Throws ResourceLimit once more than `pair_limit`
/// S-pairs have been examined.
std::vector<EngineBinomial> buchberger_complete(std::vector<EngineBinomial> basis, const TermOrder& order,
                                                std::size_t pair_limit = kDefaultPairLimit);

/// Every S-pair of `basis` reduces to zero modulo `basis` itself.
bool is_groebner(std::span<const EngineBinomial> basis, const TermOrder& order);

/// Nonzero points of L~ with |s|, |p| <= bound, one per +- pair (s > 0, or
/// s == 0 and p > 0), generated from basis combinations.
std::vector<IntPair> enumerate_ltilde(const Basis2& basis, const Int& bound);

/// Every B(s,p) over enumerate_ltilde(bound) lies in the ideal generated by
/// `emitted`, decided by normal forms against its completion.
bool ideal_equality_bounded(std::span<const Binomial> emitted, const ProblemSpec& spec, const Int& bound,
                            const TermOrder& order, std::size_t pair_limit = kDefaultPairLimit);

/// Every B(s,p) over enumerate_ltilde(bound) classifies into one of the four
/// binomial forms.
bool no_forbidden_form_scan(const ProblemSpec& spec, const Int& bound);

/// For each generator: true when it reduces to zero modulo the completion of
/// the others.
std::vector<bool> redundancy_probe(std::span<const Binomial> emitted, const TermOrder& order,
                                   std::size_t pair_limit = kDefaultPairLimit);

struct OrderCertificate {
  TieBreak order;
  bool gb_certified = false;
};

struct RedundancyEntry {
  std::string generator;
  bool redundant = false;
};

struct VerificationReport {
  bool all_generators_in_lattice = false;
  bool fan_invariants_ok = false;
  std::string fan_failure;
  std::vector<OrderCertificate> gb_certified;
  Int ideal_equality_bound;
  bool ideal_equality_ok = false;
  bool no_forbidden_forms = false;
  std::vector<RedundancyEntry> redundancy;

  /// Soundness checks only; GB and redundancy outcomes are informational.
  bool passed() const {
    return all_generators_in_lattice && fan_invariants_ok && ideal_equality_ok && no_forbidden_forms;
  }
};

struct VerifyOptions {
  Int bound = 12;
  std::vector<TieBreak> orders = all_tie_breaks();
  std::size_t pair_limit = kDefaultPairLimit;
};

VerificationReport verify(const GeneratorReport& gens, const FanDecomposition& fan, const ProblemSpec& spec,
                          const VerifyOptions& options);

}  // namespace toricmf
