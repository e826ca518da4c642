#include "toricmf/exact_lattice.hpp"

#include <utility>

#include "toricmf/error.hpp"

namespace toricmf {

namespace {

// Kernel of (x, y) -> x*u + y*v in Z/m, as a canonical basis.
Basis2 cyclic_kernel(const Int& u_raw, const Int& v_raw, const Int& m) {
  const Int u = mod_floor(u_raw, m);
  const Int v = mod_floor(v_raw, m);
  // <u> = g1*Z/mZ, so (m/g1, 0) is the shortest horizontal kernel vector.
  const Int g1 = gcd(u, m);
  const Int horizontal = m / g1;
  // Smallest y > 0 with y*v in <u>.
  const Int y0 = g1 / gcd(v, g1);
  // Solve x*(u/g1) = -y0*v/g1 (mod m/g1).
  Int x0 = 0;
  if (horizontal > 1) {
    const Int rhs = mod_floor(-(y0 * v / g1), horizontal);
    const GcdResult e = ext_gcd(u / g1, horizontal);
    x0 = mod_floor(rhs * e.u, horizontal);
  }
  return normalize_basis({horizontal, 0}, {x0, y0});
}

}  // namespace

bool Basis2::contains(const IntPair& v) const {
  if (v.p % e_0.p != 0) return false;
  const Int y = v.p / e_0.p;
  return (v.s - y * e_0.s) % e_minus1.s == 0;
}

GroupElement FiniteAbelianGroup::reduce(const GroupElement& g) const {
  if (g.size() != moduli.size()) throw InvalidInput("group element has wrong arity");
  GroupElement out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) out[k] = mod_floor(g[k], moduli[k]);
  return out;
}

bool FiniteAbelianGroup::is_reduced(const GroupElement& g) const {
  if (g.size() != moduli.size()) return false;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] < 0 || g[k] >= moduli[k]) return false;
  }
  return true;
}

bool FiniteAbelianGroup::is_zero(const GroupElement& g) const {
  if (g.size() != moduli.size()) throw InvalidInput("group element has wrong arity");
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] % moduli[k] != 0) return false;
  }
  return true;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& g, const GroupElement& h) const {
  if (g.size() != moduli.size() || h.size() != moduli.size()) {
    throw InvalidInput("group element has wrong arity");
  }
  GroupElement out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) out[k] = mod_floor(g[k] + h[k], moduli[k]);
  return out;
}

GroupElement FiniteAbelianGroup::scale(const Int& k, const GroupElement& g) const {
  if (g.size() != moduli.size()) throw InvalidInput("group element has wrong arity");
  GroupElement out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = mod_floor(k * g[i], moduli[i]);
  return out;
}

Int FiniteAbelianGroup::order() const {
  Int n = 1;
  for (const auto& m : moduli) n *= m;
  return n;
}

Int FiniteAbelianGroup::exponent() const {
  Int n = 1;
  for (const auto& m : moduli) n = lcm(n, m);
  return n;
}

GcdResult ext_gcd(const Int& a, const Int& b) {
  // Invariant: old_r = old_u*a + old_v*b, r = u*a + v*b.
  Int old_r = a, r = b;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, Int(old_r - q * r));
    old_u = std::exchange(u, Int(old_u - q * u));
    old_v = std::exchange(v, Int(old_v - q * v));
  }
  if (old_r < 0) return {-old_r, -old_u, -old_v};
  return {old_r, old_u, old_v};
}

Basis2 normalize_basis(const IntPair& v1, const IntPair& v2) {
  const Int d = abs(det(v1, v2));
  if (d == 0) throw InvalidInput("normalize_basis: vectors are linearly dependent");
  // Second coordinates of the lattice form p_0*Z with p_0 = gcd(p1, p2).
  const GcdResult e = ext_gcd(v1.p, v2.p);
  const Int p0 = e.g;
  const Int s_minus1 = d / p0;
  const IntPair w = e.u * v1 + e.v * v2;
  return {{s_minus1, 0}, {mod_floor(w.s, s_minus1), p0}};
}

Basis2 kernel_of_pair_map(const GroupElement& col_s, const GroupElement& col_p,
                          const FiniteAbelianGroup& group) {
  if (col_s.size() != group.arity() || col_p.size() != group.arity()) {
    throw InvalidInput("kernel_of_pair_map: element arity does not match the group");
  }
  for (const auto& m : group.moduli) {
    if (m < 1) throw InvalidInput("kernel_of_pair_map: moduli must be >= 1");
  }
  Basis2 basis{{1, 0}, {0, 1}};
  for (std::size_t k = 0; k < group.arity(); ++k) {
    // Restrict the k-th coordinate map to the current lattice and pull its
    // kernel back into Z^2.
    const auto& m = group.moduli[k];
    const auto value = [&](const IntPair& v) { return v.s * col_s[k] - v.p * col_p[k]; };
    const Basis2 local = cyclic_kernel(value(basis.e_minus1), value(basis.e_0), m);
    const auto lift = [&](const IntPair& c) { return c.s * basis.e_minus1 + c.p * basis.e_0; };
    basis = normalize_basis(lift(local.e_minus1), lift(local.e_0));
  }
  return basis;
}

}  // namespace toricmf
