#include "toricmf/macaulayfication.hpp"

#include <sstream>

#include "toricmf/error.hpp"

namespace toricmf {

namespace {

SemigroupElement combine(const SemigroupCombination& terms, const ProblemSpec& spec) {
  const FiniteAbelianGroup group = spec.group();
  SemigroupElement sum{std::vector<Int>(spec.n(), Int(0)), std::nullopt};
  GroupElement tors = group.zero();
  for (const auto& [mult, e] : terms) {
    if (mult < 0) throw InvalidInput("presentation relation: multiplicities must be >= 0");
    if (e.coords.size() != spec.n()) throw InvalidInput("presentation relation: element has wrong dimension");
    for (std::size_t j = 0; j < spec.n(); ++j) sum.coords[j] += mult * e.coords[j];
    if (e.tors && !e.tors->empty()) tors = group.add(tors, group.scale(mult, *e.tors));
  }
  if (spec.torsion) sum.tors = std::move(tors);
  return sum;
}

}  // namespace

std::vector<int> mixed_indices(const FanDecomposition& fan) {
  std::vector<int> out;
  for (int i = fan.nu + 1; i < fan.mu_neg; ++i) out.push_back(i);
  return out;
}

std::vector<SemigroupElement> new_semigroup_generators(const FanDecomposition& fan, const ProblemSpec& spec) {
  const std::size_t n = spec.n();
  std::vector<SemigroupElement> out;
  for (int i : mixed_indices(fan)) {
    SemigroupElement y_side{std::vector<Int>(n), std::nullopt};
    SemigroupElement z_side{std::vector<Int>(n), std::nullopt};
    for (std::size_t j = 0; j < n; ++j) {
      const Int& r = fan.r_at(j, i);
      const Int r_plus = r > 0 ? r : Int(0);
      const Int r_minus = r < 0 ? Int(-r) : Int(0);
      y_side.coords[j] = fan.p(i) * spec.c[j] - r_minus * spec.a[j];
      z_side.coords[j] = fan.s(i) * spec.b[j] - r_plus * spec.a[j];
    }
    if (spec.torsion) {
      const auto& t = *spec.torsion;
      GroupElement ty = t.group.scale(fan.p(i), t.h_y);
      GroupElement tz = t.group.scale(fan.s(i), t.h_z);
      for (std::size_t j = 0; j < n; ++j) {
        const Int& r = fan.r_at(j, i);
        if (r < 0) ty = t.group.add(ty, t.group.scale(r, t.h_x[j]));
        if (r > 0) tz = t.group.add(tz, t.group.scale(-r, t.h_x[j]));
      }
      y_side.tors = std::move(ty);
      z_side.tors = std::move(tz);
    }
    std::ostringstream where;
    where << "new generator at fan index " << i;
    if (y_side != z_side) throw InternalError(where.str() + ": y-side and z-side expressions disagree");
    for (const auto& x : y_side.coords) {
      if (x < 0) throw InternalError(where.str() + " has a negative coordinate");
    }
    if (semigroup_member(y_side, spec)) throw InternalError(where.str() + " already lies in S");
    out.push_back(std::move(y_side));
  }
  return out;
}

MacaulayReport s_prime(const FanDecomposition& fan, const ProblemSpec& spec, std::size_t tau) {
  MacaulayReport rep;
  rep.mixed_indices = mixed_indices(fan);
  rep.new_gens = new_semigroup_generators(fan, spec);
  rep.s_prime_gens = semigroup_generators(spec);
  rep.s_prime_gens.insert(rep.s_prime_gens.end(), rep.new_gens.begin(), rep.new_gens.end());
  rep.is_macaulayfication_trivial = rep.new_gens.empty();
  rep.four_generator_note = tau == 4;
  return rep;
}

bool check_presentation_relation(const SemigroupCombination& lhs, const SemigroupCombination& rhs,
                                 const ProblemSpec& spec) {
  return combine(lhs, spec) == combine(rhs, spec);
}

}  // namespace toricmf
