// Fixtures and brute-force oracles shared by the unit and acceptance tests.
// Nothing here calls into the library's own lattice code.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toricmf/exact_lattice.hpp"
#include "toricmf/ideal_gens.hpp"
#include "toricmf/problem_model.hpp"

namespace toricmf::testing {

inline std::vector<Int> ints(std::initializer_list<long long> xs) {
  std::vector<Int> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

inline ProblemSpec make_spec(std::initializer_list<long long> a, std::initializer_list<long long> b,
                             std::initializer_list<long long> c) {
  return {ints(a), ints(b), ints(c), std::nullopt};
}

/// x_i = u_i^{2k}, z = u_1 u_2^{k+1} u_3 .. u_k, y = u_1^{k+1} u_2 u_3 .. u_k.
inline ProblemSpec power_family(int k) {
  ProblemSpec s;
  for (int i = 0; i < k; ++i) {
    s.a.emplace_back(2 * k);
    s.b.emplace_back(i == 1 ? k + 1 : 1);
    s.c.emplace_back(i == 0 ? k + 1 : 1);
  }
  return s;
}

inline ProblemSpec twisted_cubic() { return make_spec({3, 3}, {1, 2}, {2, 1}); }
inline ProblemSpec quartic() { return make_spec({4, 4}, {1, 3}, {3, 1}); }
inline ProblemSpec monomial_curve() { return make_spec({3}, {4}, {5}); }

inline ProblemSpec torsion_fixture() {
  ProblemSpec s = make_spec({2, 2}, {1, 1}, {1, 1});
  s.torsion = TorsionData{{ints({2})}, {ints({1}), ints({1})}, ints({1}), ints({0})};
  return s;
}

// ---- random specs ----------------------------------------------------------

struct RandomSpecParams {
  int max_n = 4;
  int max_a = 12;
  int max_bc = 8;
  int max_modulus = 4;
  double torsion_probability = 0.35;
};

inline ProblemSpec random_spec(std::mt19937_64& rng, const RandomSpecParams& prm = {}) {
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (;;) {
    ProblemSpec s;
    const int n = uni(1, prm.max_n);
    bool any_b = false, any_c = false;
    for (int i = 0; i < n; ++i) {
      int b = uni(0, prm.max_bc), c = uni(0, prm.max_bc);
      if (b == 0 && c == 0) (uni(0, 1) ? b : c) = uni(1, prm.max_bc);
      s.a.emplace_back(uni(1, prm.max_a));
      s.b.emplace_back(b);
      s.c.emplace_back(c);
      any_b |= b > 0;
      any_c |= c > 0;
    }
    if (!any_b || !any_c) continue;
    if (std::bernoulli_distribution(prm.torsion_probability)(rng)) {
      TorsionData t;
      const int k = uni(1, 2);
      for (int j = 0; j < k; ++j) t.group.moduli.emplace_back(uni(1, prm.max_modulus));
      auto elem = [&] {
        GroupElement g;
        for (const auto& m : t.group.moduli) g.emplace_back(uni(0, static_cast<int>(m) - 1));
        return g;
      };
      for (int i = 0; i < n; ++i) t.h_x.push_back(elem());
      t.h_z = elem();
      t.h_y = elem();
      s.torsion = std::move(t);
    }
    return s;
  }
}

// ---- independent arithmetic --------------------------------------------------

inline Int imod(const Int& x, const Int& m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

inline Int order_of_group(const ProblemSpec& spec) {
  Int o = 1;
  if (spec.torsion) {
    for (const auto& m : spec.torsion->group.moduli) o *= m;
  }
  return o;
}

/// Image of z^ez y^ey x^ex in Z^n (+) H.
inline SemigroupElement monomial_image(const Monomial& mono, const ProblemSpec& spec) {
  const std::size_t n = spec.n();
  SemigroupElement out;
  for (std::size_t i = 0; i < n; ++i) {
    out.coords.push_back(mono.e_z * spec.b[i] + mono.e_y * spec.c[i] + mono.e_x[i] * spec.a[i]);
  }
  if (spec.torsion) {
    const auto& t = *spec.torsion;
    GroupElement g;
    for (std::size_t k = 0; k < t.group.moduli.size(); ++k) {
      Int v = mono.e_z * t.h_z[k] + mono.e_y * t.h_y[k];
      for (std::size_t i = 0; i < n; ++i) v += mono.e_x[i] * t.h_x[i][k];
      g.push_back(imod(v, t.group.moduli[k]));
    }
    out.tors = g;
  }
  return out;
}

/// The binomial vanishes on the parametrization: both monomials have the same image.
inline bool substitution_ok(const Binomial& b, const ProblemSpec& spec) {
  return monomial_image(b.lhs, spec) == monomial_image(b.rhs, spec);
}

/// Direct definition of membership in L~.
inline bool naive_in_ltilde(const IntPair& sp, const ProblemSpec& spec) {
  const std::size_t n = spec.n();
  std::vector<Int> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Int t = sp.s * spec.b[i] - sp.p * spec.c[i];
    if (t % spec.a[i] != 0) return false;
    v[i] = t / spec.a[i];
  }
  if (!spec.torsion) return true;
  const auto& t = *spec.torsion;
  for (std::size_t k = 0; k < t.group.moduli.size(); ++k) {
    Int x = sp.s * t.h_z[k] - sp.p * t.h_y[k];
    for (std::size_t i = 0; i < n; ++i) x -= v[i] * t.h_x[i][k];
    if (imod(x, t.group.moduli[k]) != 0) return false;
  }
  return true;
}

/// Canonical basis found by scanning one period of residues. `period` must be
/// a multiple of every s_-1 and p_0 of the lattice (the lattice contains
/// (period, 0) and (0, period)).
struct ResidueScan {
  Basis2 basis;
  Int index;
};

template <class Member>
ResidueScan residue_scan(const Int& period, Member member) {
  const long long P = static_cast<long long>(period);
  long long count = 0;
  std::optional<long long> s_min, p_min;
  for (long long s = 0; s < P; ++s) {
    for (long long p = 0; p < P; ++p) {
      if (!member(IntPair{s, p})) continue;
      ++count;
      if (p == 0 && s > 0 && !s_min) s_min = s;
      if (p > 0 && (!p_min || p < *p_min)) p_min = p;
    }
  }
  const long long sm1 = s_min.value_or(P);
  const long long p0 = p_min.value_or(P);
  long long s0 = 0;
  for (long long s = 0; s < sm1; ++s) {
    if (member(IntPair{s, p0})) {
      s0 = s;
      break;
    }
  }
  return {{{sm1, 0}, {s0, p0}}, Int(P * P / count)};
}

/// lcm(a) * exponent(H): (N, 0) and (0, N) always lie in L~.
inline Int lattice_period(const ProblemSpec& spec) {
  Int l = 1;
  for (const auto& x : spec.a) l = boost::multiprecision::lcm(l, x);
  Int e = 1;
  if (spec.torsion) {
    for (const auto& m : spec.torsion->group.moduli) e = boost::multiprecision::lcm(e, m);
  }
  return l * e;
}

/// Every element of S with all coordinates <= bound, by exhaustive enumeration
/// of nonnegative generator combinations.
inline std::set<std::pair<std::vector<Int>, std::vector<Int>>> enumerate_semigroup(const ProblemSpec& spec,
                                                                                  long long bound) {
  const std::size_t n = spec.n();
  std::vector<SemigroupElement> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m{0, 0, std::vector<Int>(n, Int(0))};
    m.e_x[i] = 1;
    gens.push_back(monomial_image(m, spec));
  }
  gens.push_back(monomial_image({1, 0, std::vector<Int>(n, Int(0))}, spec));
  gens.push_back(monomial_image({0, 1, std::vector<Int>(n, Int(0))}, spec));

  using Key = std::pair<std::vector<Int>, std::vector<Int>>;
  auto key = [](const SemigroupElement& e) { return Key{e.coords, e.tors.value_or(std::vector<Int>{})}; };
  std::set<Key> seen;
  std::vector<SemigroupElement> frontier;
  SemigroupElement zero{std::vector<Int>(n, Int(0)), std::nullopt};
  if (spec.torsion) zero.tors = std::vector<Int>(spec.torsion->group.moduli.size(), Int(0));
  seen.insert(key(zero));
  frontier.push_back(zero);
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      SemigroupElement nx = cur;
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        nx.coords[i] += g.coords[i];
        if (nx.coords[i] > bound) ok = false;
      }
      if (!ok) continue;
      if (spec.torsion) {
        for (std::size_t k = 0; k < nx.tors->size(); ++k) {
          (*nx.tors)[k] = imod((*nx.tors)[k] + (*g.tors)[k], spec.torsion->group.moduli[k]);
        }
      }
      if (seen.insert(key(nx)).second) frontier.push_back(nx);
    }
  }
  return seen;
}

/// Binomials as an unordered set, up to the global sign of each binomial.
inline std::set<std::string> binomial_set(const std::vector<Binomial>& gens) {
  std::set<std::string> out;
  for (const auto& g : gens) {
    auto l = render(g.lhs), r = render(g.rhs);
    out.insert(l < r ? l + " | " + r : r + " | " + l);
  }
  return out;
}

inline std::set<std::string> binomial_set(const std::vector<std::pair<std::string, std::string>>& gens) {
  std::set<std::string> out;
  for (const auto& [l, r] : gens) out.insert(l < r ? l + " | " + r : r + " | " + l);
  return out;
}

/// x-monomial text x1^e1*x2^e2*... for an exponent list, as rendered by the library.
inline std::string xmono(const std::vector<int>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

/// The closed-form generator list of the power family for k >= 3.
inline std::vector<std::pair<std::string, std::string>> power_family_closed_form(int k) {
  std::vector<std::pair<std::string, std::string>> out;
  auto xs = [&](int e1, int e2) {
    std::vector<int> e(k, 1);
    e[0] = e1;
    e[1] = e2;
    return xmono(e);
  };
  out.push_back({"y^" + std::to_string(2 * k), xs(k + 1, 1)});
  out.push_back({"z^2*x1", "y^2*x2"});
  for (int j = 1; j <= k - 1; ++j) {
    out.push_back({"z^" + std::to_string(2 * j) + "*y^" + std::to_string(2 * k - 2 * j), xs(k - j + 1, j + 1)});
  }
  out.push_back({"z^" + std::to_string(2 * k), xs(1, k + 1)});
  return out;
}

}  // namespace toricmf::testing
