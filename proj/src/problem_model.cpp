#include "toricmf/problem_model.hpp"

#include <algorithm>
#include <numeric>

#include "toricmf/error.hpp"

namespace toricmf {

namespace {

GroupElement tors_or_zero(const SemigroupElement& g, const FiniteAbelianGroup& group) {
  if (!g.tors) return group.zero();
  return group.reduce(*g.tors);
}

std::string at(const char* name, std::size_t i) {
  return std::string(name) + "[" + std::to_string(i + 1) + "]";
}

}  // namespace

FiniteAbelianGroup ProblemSpec::group() const {
  return torsion ? torsion->group : FiniteAbelianGroup{};
}

bool operator==(const ProblemSpec& l, const ProblemSpec& r) {
  if (l.a != r.a || l.b != r.b || l.c != r.c) return false;
  if (l.torsion.has_value() != r.torsion.has_value()) return false;
  if (!l.torsion) return true;
  return l.torsion->group.moduli == r.torsion->group.moduli && l.torsion->h_x == r.torsion->h_x &&
         l.torsion->h_z == r.torsion->h_z && l.torsion->h_y == r.torsion->h_y;
}

const ProblemSpec& validate(const ProblemSpec& spec) {
  const std::size_t n = spec.n();
  if (n == 0) throw InvalidInput("n must be at least 1");
  if (spec.b.size() != n) throw InvalidInput("b has length " + std::to_string(spec.b.size()) +
                                             ", expected " + std::to_string(n));
  if (spec.c.size() != n) throw InvalidInput("c has length " + std::to_string(spec.c.size()) +
                                             ", expected " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.a[i] < 1) throw InvalidInput(at("a", i) + " must be >= 1");
    if (spec.b[i] < 0) throw InvalidInput(at("b", i) + " must be >= 0");
    if (spec.c[i] < 0) throw InvalidInput(at("c", i) + " must be >= 0");
    if (spec.b[i] == 0 && spec.c[i] == 0) {
      throw InvalidInput("(" + at("b", i) + ", " + at("c", i) + ") must not be (0, 0)");
    }
  }
  const auto nonzero = [](const std::vector<Int>& v) {
    return std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; });
  };
  if (!nonzero(spec.b)) throw InvalidInput("b must not be the zero vector");
  if (!nonzero(spec.c)) throw InvalidInput("c must not be the zero vector");

  if (spec.torsion) {
    const auto& t = *spec.torsion;
    for (std::size_t k = 0; k < t.group.arity(); ++k) {
      if (t.group.moduli[k] < 1) throw InvalidInput("torsion: " + at("moduli", k) + " must be >= 1");
    }
    if (t.h_x.size() != n) {
      throw InvalidInput("torsion: h_x must have one element per x-variable (" + std::to_string(n) + ")");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!t.group.is_reduced(t.h_x[i])) {
        throw InvalidInput("torsion: " + at("h_x", i) + " is not a reduced element of the group");
      }
    }
    if (!t.group.is_reduced(t.h_z)) throw InvalidInput("torsion: h_z is not a reduced element of the group");
    if (!t.group.is_reduced(t.h_y)) throw InvalidInput("torsion: h_y is not a reduced element of the group");
  }
  return spec;
}

std::vector<std::size_t> slope_permutation(const ProblemSpec& spec) {
  std::vector<std::size_t> order(spec.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // b_i/c_i < b_j/c_j  <=>  b_i*c_j < b_j*c_i for nonnegative, nonzero (b, c) pairs.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return spec.b[i] * spec.c[j] < spec.b[j] * spec.c[i];
  });
  return order;
}

std::vector<Int> x_exponents(const IntPair& sp, const ProblemSpec& spec) {
  std::vector<Int> v(spec.n());
  for (std::size_t i = 0; i < spec.n(); ++i) {
    const Int num = sp.s * spec.b[i] - sp.p * spec.c[i];
    if (num % spec.a[i] != 0) {
      throw InvalidInput("point " + sp.s.str() + "," + sp.p.str() + " is not in Ker(Phi)");
    }
    v[i] = num / spec.a[i];
  }
  return v;
}

GroupElement torsion_character(const IntPair& sp, const ProblemSpec& spec) {
  if (!spec.torsion) return {};
  const auto& t = *spec.torsion;
  const auto v = x_exponents(sp, spec);
  GroupElement acc = t.group.add(t.group.scale(sp.s, t.h_z), t.group.scale(-sp.p, t.h_y));
  for (std::size_t i = 0; i < spec.n(); ++i) acc = t.group.add(acc, t.group.scale(-v[i], t.h_x[i]));
  return acc;
}

bool in_ltilde(const IntPair& sp, const ProblemSpec& spec) {
  for (std::size_t i = 0; i < spec.n(); ++i) {
    if ((sp.s * spec.b[i] - sp.p * spec.c[i]) % spec.a[i] != 0) return false;
  }
  if (!spec.torsion) return true;
  return spec.torsion->group.is_zero(torsion_character(sp, spec));
}

Basis2 lattice_ltilde(const ProblemSpec& spec) {
  validate(spec);
  const FiniteAbelianGroup axis{spec.a};
  const Basis2 ker_phi = kernel_of_pair_map(spec.b, spec.c, axis);
  if (!spec.torsion) return ker_phi;

  // psi is linear on Ker(Phi); pull back its kernel through the basis
  // coordinates x*e_-1 + y*e_0.
  const auto& group = spec.torsion->group;
  const GroupElement psi1 = torsion_character(ker_phi.e_minus1, spec);
  const GroupElement psi2 = torsion_character(ker_phi.e_0, spec);
  const Basis2 local = kernel_of_pair_map(psi1, group.scale(-1, psi2), group);
  const auto lift = [&](const IntPair& c) { return c.s * ker_phi.e_minus1 + c.p * ker_phi.e_0; };
  return normalize_basis(lift(local.e_minus1), lift(local.e_0));
}

WeightVector weights(const ProblemSpec& spec) {
  WeightVector w{0, 0, spec.a};
  for (const auto& x : spec.b) w.w_z += x;
  for (const auto& x : spec.c) w.w_y += x;
  return w;
}

std::vector<SemigroupElement> semigroup_generators(const ProblemSpec& spec) {
  const std::size_t n = spec.n();
  std::vector<SemigroupElement> gens;
  gens.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    SemigroupElement e{std::vector<Int>(n, Int(0)), std::nullopt};
    e.coords[i] = spec.a[i];
    if (spec.torsion) e.tors = spec.torsion->h_x[i];
    gens.push_back(std::move(e));
  }
  gens.push_back({spec.b, spec.torsion ? std::optional(spec.torsion->h_z) : std::nullopt});
  gens.push_back({spec.c, spec.torsion ? std::optional(spec.torsion->h_y) : std::nullopt});
  return gens;
}

SemigroupElement evaluate(const SemigroupRepresentation& rep, const ProblemSpec& spec) {
  const std::size_t n = spec.n();
  SemigroupElement out{std::vector<Int>(n), std::nullopt};
  for (std::size_t j = 0; j < n; ++j) {
    out.coords[j] = rep.e_z * spec.b[j] + rep.e_y * spec.c[j] + rep.m.at(j) * spec.a[j];
  }
  if (spec.torsion) {
    const auto& t = *spec.torsion;
    GroupElement acc = t.group.add(t.group.scale(rep.e_z, t.h_z), t.group.scale(rep.e_y, t.h_y));
    for (std::size_t j = 0; j < n; ++j) acc = t.group.add(acc, t.group.scale(rep.m[j], t.h_x[j]));
    out.tors = std::move(acc);
  }
  return out;
}

std::optional<SemigroupRepresentation> semigroup_member(const SemigroupElement& g,
                                                        const ProblemSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n();
  if (g.coords.size() != n) throw InvalidInput("semigroup element has wrong dimension");
  if (g.tors && !spec.torsion && !g.tors->empty()) {
    throw InvalidInput("semigroup element carries torsion but the spec has none");
  }
  for (const auto& x : g.coords) {
    if (x < 0) return std::nullopt;
  }
  const FiniteAbelianGroup group = spec.group();
  const GroupElement target = tors_or_zero(g, group);

  // Integer solutions (e_z, e_y) of g = e_z b + e_y c + sum m_j a_j e_j (with
  // torsion) form a coset of K' = {(s, -p) : (s, p) in L~}. Find one coset
  // representative in the fundamental box, then scan e_y along the coset.
  const auto congruent = [&](const Int& ez, const Int& ey) {
    std::vector<Int> m(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Int rest = g.coords[j] - ez * spec.b[j] - ey * spec.c[j];
      if (rest % spec.a[j] != 0) return false;
      m[j] = rest / spec.a[j];
    }
    if (!spec.torsion) return true;
    const auto& t = *spec.torsion;
    GroupElement acc = t.group.add(t.group.scale(ez, t.h_z), t.group.scale(ey, t.h_y));
    for (std::size_t j = 0; j < n; ++j) acc = t.group.add(acc, t.group.scale(m[j], t.h_x[j]));
    return acc == target;
  };

  const Basis2 lt = lattice_ltilde(spec);
  const Int& s_minus1 = lt.e_minus1.s;
  const Int& s0 = lt.e_0.s;
  const Int& p0 = lt.e_0.p;
  std::optional<IntPair> rep;
  for (Int ey = 0; ey < p0 && !rep; ++ey) {
    for (Int ez = 0; ez < s_minus1; ++ez) {
      if (congruent(ez, ey)) {
        rep = IntPair{ez, ey};
        break;
      }
    }
  }
  if (!rep) return std::nullopt;

  std::optional<Int> y_max;
  for (std::size_t j = 0; j < n; ++j) {
    if (spec.c[j] > 0) {
      const Int bound = g.coords[j] / spec.c[j];
      if (!y_max || bound < *y_max) y_max = bound;
    }
  }
  // Solutions: e_y = rep.p - beta*p0, e_z = rep.s + beta*s0 (mod s_-1).
  const Int beta_lo = ceil_div(rep->p - *y_max, p0);
  const Int beta_hi = floor_div(rep->p, p0);
  std::optional<SemigroupRepresentation> best;
  for (Int beta = beta_lo; beta <= beta_hi; ++beta) {
    const Int ey = rep->p - beta * p0;
    std::optional<Int> z_max;
    bool feasible = true;
    for (std::size_t j = 0; j < n && feasible; ++j) {
      const Int room = g.coords[j] - ey * spec.c[j];
      if (room < 0) {
        feasible = false;
      } else if (spec.b[j] > 0) {
        const Int bound = room / spec.b[j];
        if (!z_max || bound < *z_max) z_max = bound;
      }
    }
    if (!feasible) continue;
    const Int residue = mod_floor(rep->s + beta * s0, s_minus1);
    const Int ez = *z_max - mod_floor(*z_max - residue, s_minus1);
    if (ez < 0) continue;
    if (best && (ez < best->e_z || (ez == best->e_z && ey < best->e_y))) continue;
    SemigroupRepresentation cand{ez, ey, std::vector<Int>(n)};
    for (std::size_t j = 0; j < n; ++j) {
      cand.m[j] = exact_div(g.coords[j] - ez * spec.b[j] - ey * spec.c[j], spec.a[j]);
    }
    best = std::move(cand);
  }
  return best;
}

ProblemSpec permuted(const ProblemSpec& spec, std::span<const std::size_t> perm) {
  if (perm.size() != spec.n()) throw InvalidInput("permutation has wrong length");
  ProblemSpec out;
  out.torsion = spec.torsion;
  if (out.torsion) out.torsion->h_x.clear();
  for (std::size_t i : perm) {
    out.a.push_back(spec.a.at(i));
    out.b.push_back(spec.b.at(i));
    out.c.push_back(spec.c.at(i));
    if (out.torsion) out.torsion->h_x.push_back(spec.torsion->h_x.at(i));
  }
  return out;
}

ProblemSpec mirrored(const ProblemSpec& spec) {
  ProblemSpec out = spec;
  std::swap(out.b, out.c);
  if (out.torsion) std::swap(out.torsion->h_z, out.torsion->h_y);
  return out;
}

}  // namespace toricmf
