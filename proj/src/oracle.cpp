#include "toricmf/oracle.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "toricmf/error.hpp"

namespace toricmf {

namespace {

bool divides(const Exponents& d, const Exponents& t) {
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] > t[k]) return false;
  }
  return true;
}

bool coprime(const Exponents& u, const Exponents& v) {
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] > 0 && v[k] > 0) return false;
  }
  return true;
}

std::vector<EngineBinomial> oriented(std::span<const Binomial> gens, const TermOrder& order) {
  std::vector<EngineBinomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(orient(g, order));
  return out;
}

bool reduces_to_zero(const Exponents& u, const Exponents& v, std::span<const EngineBinomial> gb) {
  return normal_form(u, gb) == normal_form(v, gb);
}

}  // namespace

bool in_lattice(std::span<const Int> w, const ProblemSpec& spec) {
  const std::size_t n = spec.n();
  if (w.size() != n + 2) throw InvalidInput("in_lattice: vector must have length n + 2");
  const Int& wz = w[n];
  const Int& wy = w[n + 1];
  for (std::size_t j = 0; j < n; ++j) {
    if (w[j] * spec.a[j] + wz * spec.b[j] + wy * spec.c[j] != 0) return false;
  }
  if (!spec.torsion) return true;
  const auto& t = *spec.torsion;
  GroupElement acc = t.group.add(t.group.scale(wz, t.h_z), t.group.scale(wy, t.h_y));
  for (std::size_t j = 0; j < n; ++j) acc = t.group.add(acc, t.group.scale(w[j], t.h_x[j]));
  return t.group.is_zero(acc);
}

std::optional<EngineBinomial> orient(const Exponents& u, const Exponents& v, const TermOrder& order) {
  if (u == v) return std::nullopt;
  if (order.greater(u, v)) return EngineBinomial{u, v};
  return EngineBinomial{v, u};
}

EngineBinomial orient(const Binomial& b, const TermOrder& order) {
  auto e = orient(b.lhs.exponents(), b.rhs.exponents(), order);
  if (!e) throw InvalidInput("orient: binomial is zero");
  return *e;
}

Exponents normal_form(Exponents term, std::span<const EngineBinomial> basis) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& g : basis) {
      if (!divides(g.lead, term)) continue;
      for (std::size_t k = 0; k < term.size(); ++k) term[k] += g.trail[k] - g.lead[k];
      changed = true;
      break;
    }
  }
  return term;
}

std::optional<EngineBinomial> s_polynomial(const EngineBinomial& f, const EngineBinomial& g,
                                           const TermOrder& order) {
  const std::size_t len = f.lead.size();
  Exponents from_f(len), from_g(len);
  for (std::size_t k = 0; k < len; ++k) {
    const Int l = std::max(f.lead[k], g.lead[k]);
    from_f[k] = l - f.lead[k] + f.trail[k];
    from_g[k] = l - g.lead[k] + g.trail[k];
  }
  return orient(from_g, from_f, order);
}

ReductionResult spair_and_reduce(const EngineBinomial& f, const EngineBinomial& g,
                                 std::span<const EngineBinomial> basis, const TermOrder& order) {
  const auto s = s_polynomial(f, g, order);
  if (!s) return {};
  auto reduced = orient(normal_form(s->lead, basis), normal_form(s->trail, basis), order);
  if (!reduced) return {};
  return {false, std::move(reduced)};
}

std::vector<EngineBinomial> buchberger_complete(std::vector<EngineBinomial> basis, const TermOrder& order,
                                                std::size_t pair_limit) {
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::size_t examined = 0;
  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    if (++examined > pair_limit) {
      throw ResourceLimit("buchberger_complete: more than " + std::to_string(pair_limit) + " S-pairs");
    }
    // Coprime leading terms: the S-pair reduces to zero.
    if (coprime(basis[i].lead, basis[j].lead)) continue;
    auto r = spair_and_reduce(basis[i], basis[j], basis, order);
    if (r.zero) continue;
    basis.push_back(std::move(*r.remainder));
    const std::size_t k = basis.size() - 1;
    for (std::size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
  }
  return basis;
}

bool is_groebner(std::span<const EngineBinomial> basis, const TermOrder& order) {
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime(basis[i].lead, basis[j].lead)) continue;
      if (!spair_and_reduce(basis[i], basis[j], basis, order).zero) return false;
    }
  }
  return true;
}

std::vector<IntPair> enumerate_ltilde(const Basis2& basis, const Int& bound) {
  std::vector<IntPair> out;
  const Int& s_minus1 = basis.e_minus1.s;
  const Int& s0 = basis.e_0.s;
  const Int& p0 = basis.e_0.p;
  // p = l2*p0, s = l1*s_-1 + l2*s0.
  for (Int l2 = -(bound / p0); l2 <= bound / p0; ++l2) {
    const Int p = l2 * p0;
    const Int shift = l2 * s0;
    for (Int l1 = ceil_div(-shift, s_minus1); l1 * s_minus1 + shift <= bound; ++l1) {
      const Int s = l1 * s_minus1 + shift;
      if (s == 0 && p <= 0) continue;
      out.push_back({s, p});
    }
  }
  return out;
}

bool ideal_equality_bounded(std::span<const Binomial> emitted, const ProblemSpec& spec, const Int& bound,
                            const TermOrder& order, std::size_t pair_limit) {
  const auto gb = buchberger_complete(oriented(emitted, order), order, pair_limit);
  for (const auto& sp : enumerate_ltilde(lattice_ltilde(spec), bound)) {
    const auto [lhs, rhs] = pair_monomials(sp, spec);
    if (!reduces_to_zero(lhs.exponents(), rhs.exponents(), gb)) return false;
  }
  return true;
}

bool no_forbidden_form_scan(const ProblemSpec& spec, const Int& bound) {
  const auto slope = slope_permutation(spec);
  for (const auto& sp : enumerate_ltilde(lattice_ltilde(spec), bound)) {
    const auto [lhs, rhs] = pair_monomials(sp, spec);
    if (!classify_binomial(lhs, rhs, slope)) return false;
  }
  return true;
}

std::vector<bool> redundancy_probe(std::span<const Binomial> emitted, const TermOrder& order,
                                   std::size_t pair_limit) {
  const auto all = oriented(emitted, order);
  std::vector<bool> out;
  out.reserve(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    std::vector<EngineBinomial> rest;
    for (std::size_t t = 0; t < all.size(); ++t) {
      if (t != k) rest.push_back(all[t]);
    }
    const auto gb = buchberger_complete(std::move(rest), order, pair_limit);
    out.push_back(reduces_to_zero(all[k].lead, all[k].trail, gb));
  }
  return out;
}

VerificationReport verify(const GeneratorReport& gens, const FanDecomposition& fan, const ProblemSpec& spec,
                          const VerifyOptions& options) {
  if (options.orders.empty()) throw InvalidInput("verify: at least one term order is required");
  VerificationReport rep;
  rep.all_generators_in_lattice = std::all_of(gens.generators.begin(), gens.generators.end(),
                                              [&](const Binomial& b) {
                                                const auto d = exponent_difference(b);
                                                return in_lattice(d, spec);
                                              });
  const auto inv = fan_invariants(fan, spec);
  rep.fan_invariants_ok = inv.ok;
  rep.fan_failure = inv.first_failure;

  const auto w = weights(spec);
  for (TieBreak t : options.orders) {
    const TermOrder order{w, t};
    rep.gb_certified.push_back({t, is_groebner(oriented(gens.generators, order), order)});
  }
  const TermOrder primary{w, options.orders.front()};
  rep.ideal_equality_bound = options.bound;
  rep.ideal_equality_ok = ideal_equality_bounded(gens.generators, spec, options.bound, primary, options.pair_limit);
  rep.no_forbidden_forms = no_forbidden_form_scan(spec, options.bound);
  if (gens.generators.size() >= 2) {
    const auto flags = redundancy_probe(gens.generators, primary, options.pair_limit);
    for (std::size_t k = 0; k < flags.size(); ++k) rep.redundancy.push_back({render(gens.generators[k]), flags[k]});
  }
  return rep;
}

}  // namespace toricmf
