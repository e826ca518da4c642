#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "toricmf/fan.hpp"
#include "toricmf/ideal_gens.hpp"
#include "toricmf/macaulayfication.hpp"

using namespace toricmf;
using namespace toricmf::testing;

namespace {

FanDecomposition fan_of(const ProblemSpec& spec) { return build_fan(spec, lattice_ltilde(spec)); }

SemigroupElement el(std::initializer_list<long long> xs) { return {ints(xs), std::nullopt}; }

}  // namespace

TEST_CASE("mixed indices") {
  CHECK(mixed_indices(fan_of(power_family(3))) == std::vector<int>{0});
  CHECK(mixed_indices(fan_of(twisted_cubic())).empty());
  CHECK(mixed_indices(fan_of(quartic())) == std::vector<int>{1});
}

TEST_CASE("new semigroup generators") {
  CHECK(new_semigroup_generators(fan_of(power_family(3)), power_family(3)) == std::vector{el({2, 2, 2})});
  CHECK(new_semigroup_generators(fan_of(quartic()), quartic()) == std::vector{el({2, 2})});
  CHECK(new_semigroup_generators(fan_of(twisted_cubic()), twisted_cubic()).empty());
}

TEST_CASE("s_prime") {
  const auto k3 = power_family(3);
  const auto rep = s_prime(fan_of(k3), k3, 5);
  CHECK_FALSE(rep.is_macaulayfication_trivial);
  CHECK(rep.s_prime_gens == std::vector{el({6, 0, 0}), el({0, 6, 0}), el({0, 0, 6}), el({1, 4, 1}), el({4, 1, 1}),
                                        el({2, 2, 2})});
  const auto tc = s_prime(fan_of(twisted_cubic()), twisted_cubic(), 3);
  CHECK(tc.is_macaulayfication_trivial);
  CHECK(tc.new_gens.empty());
  CHECK(tc.s_prime_gens.size() == 4);
  const auto q = s_prime(fan_of(quartic()), quartic(), 4);
  CHECK_FALSE(q.is_macaulayfication_trivial);
  CHECK(q.four_generator_note);
  CHECK(std::count(q.s_prime_gens.begin(), q.s_prime_gens.end(), el({2, 2})) == 1);
}

TEST_CASE("check_presentation_relation") {
  const auto k3 = power_family(3);
  const auto z = el({1, 4, 1}), y = el({4, 1, 1}), w = el({2, 2, 2});
  const auto x1 = el({6, 0, 0}), x2 = el({0, 6, 0}), x3 = el({0, 0, 6});
  CHECK(check_presentation_relation({{2, z}}, {{1, x2}, {1, w}}, k3));
  CHECK(check_presentation_relation({{3, w}}, {{1, x1}, {1, x2}, {1, x3}}, k3));
  CHECK_FALSE(check_presentation_relation({{2, y}}, {{1, x2}, {1, w}}, k3));
  CHECK(check_presentation_relation({{2, y}}, {{1, x1}, {1, w}}, k3));
}

TEST_CASE("Macaulayfication properties on random specs") {
  std::mt19937_64 rng(808);
  for (int t = 0; t < 250; ++t) {
    const auto spec = random_spec(rng);
    const auto fan = fan_of(spec);
    const auto gens = emit_generators(fan, spec);
    const auto rep = s_prime(fan, spec, gens.tau);
    CHECK(rep.is_macaulayfication_trivial == gens.is_cm);
    CHECK(rep.new_gens.empty() == gens.is_cm);
    CHECK(rep.mixed_indices.empty() == gens.is_cm);
    CHECK(rep.new_gens.size() == rep.mixed_indices.size());
    CHECK(rep.s_prime_gens.size() == spec.n() + 2 + rep.new_gens.size());
    for (std::size_t k = 0; k < rep.new_gens.size(); ++k) {
      const auto& e = rep.new_gens[k];
      const int i = rep.mixed_indices[k];
      // Independent recomputation from both sides.
      Monomial yside{0, fan.p(i), std::vector<Int>(spec.n(), Int(0))};
      Monomial zside{fan.s(i), 0, std::vector<Int>(spec.n(), Int(0))};
      auto a = monomial_image(yside, spec), b = monomial_image(zside, spec);
      for (std::size_t j = 0; j < spec.n(); ++j) {
        const Int r = fan.r_at(j, i);
        if (r < 0) a.coords[j] += r * spec.a[j];
        if (r > 0) b.coords[j] -= r * spec.a[j];
      }
      if (spec.torsion) {
        const auto& T = *spec.torsion;
        for (std::size_t c = 0; c < T.group.moduli.size(); ++c) {
          Int ta = (*a.tors)[c], tb = (*b.tors)[c];
          for (std::size_t j = 0; j < spec.n(); ++j) {
            const Int r = fan.r_at(j, i);
            if (r < 0) ta += r * T.h_x[j][c];
            if (r > 0) tb -= r * T.h_x[j][c];
          }
          (*a.tors)[c] = imod(ta, T.group.moduli[c]);
          (*b.tors)[c] = imod(tb, T.group.moduli[c]);
        }
      }
      CHECK(a == e);
      CHECK(b == e);
      for (const auto& x : e.coords) CHECK(x >= 0);
      CHECK_FALSE(semigroup_member(e, spec).has_value());
      // Saturation: N*E lies in S for N = lcm(a) * exponent(H). Its coordinates
      // are multiples of the a_j and the axis multiples carry zero torsion.
      Int N = 1;
      for (const auto& x : spec.a) N = boost::multiprecision::lcm(N, x);
      N *= spec.group().exponent();
      SemigroupElement ne = e;
      for (auto& x : ne.coords) x *= N;
      if (ne.tors) {
        for (std::size_t c = 0; c < ne.tors->size(); ++c) {
          (*ne.tors)[c] = imod((*ne.tors)[c] * N, spec.torsion->group.moduli[c]);
        }
      }
      const auto m = semigroup_member(ne, spec);
      REQUIRE(m.has_value());
      CHECK(evaluate(*m, spec) == ne);
    }
  }
}
