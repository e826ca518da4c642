#include "toricmf/ideal_gens.hpp"

#include <algorithm>
#include <sstream>

#include "toricmf/error.hpp"

namespace toricmf {

namespace {

bool any_positive(const std::vector<Int>& v) {
  return std::any_of(v.begin(), v.end(), [](const Int& x) { return x > 0; });
}

bool has_x(const Monomial& m) { return any_positive(m.e_x); }
bool pure_z(const Monomial& m) { return m.e_z > 0 && m.e_y == 0 && !has_x(m); }
bool pure_y(const Monomial& m) { return m.e_y > 0 && m.e_z == 0 && !has_x(m); }
bool pure_x(const Monomial& m) { return m.e_z == 0 && m.e_y == 0; }

bool disjoint(const Monomial& l, const Monomial& r) {
  if ((l.e_z > 0 && r.e_z > 0) || (l.e_y > 0 && r.e_y > 0)) return false;
  for (std::size_t i = 0; i < l.e_x.size(); ++i) {
    if (l.e_x[i] > 0 && r.e_x[i] > 0) return false;
  }
  return true;
}

void append_power(std::ostringstream& os, bool& first, const std::string& var, const Int& e) {
  if (e == 0) return;
  if (!first) os << '*';
  first = false;
  os << var;
  if (e != 1) os << '^' << e;
}

}  // namespace

Exponents Monomial::exponents() const {
  Exponents e;
  e.reserve(e_x.size() + 2);
  e.push_back(e_z);
  e.push_back(e_y);
  e.insert(e.end(), e_x.begin(), e_x.end());
  return e;
}

Monomial Monomial::from_exponents(const Exponents& e) {
  if (e.size() < 2) throw InvalidInput("exponent vector too short");
  return {e[0], e[1], std::vector<Int>(e.begin() + 2, e.end())};
}

bool Monomial::is_one() const { return e_z == 0 && e_y == 0 && !has_x(*this); }

std::string to_string(BinomialForm f) {
  switch (f) {
    case BinomialForm::ZPure:
      return "Z_PURE";
    case BinomialForm::YPure:
      return "Y_PURE";
    case BinomialForm::ZYMixed:
      return "ZY_MIXED";
    case BinomialForm::Split:
      return "SPLIT";
  }
  return "?";
}

std::pair<Monomial, Monomial> pair_monomials(const IntPair& sp, const ProblemSpec& spec) {
  if (sp.s == 0 && sp.p == 0) throw InvalidInput("binomial_of_pair: zero vector gives no binomial");
  if (sp.s < 0) throw InvalidInput("binomial_of_pair: s must be >= 0");
  if (!in_ltilde(sp, spec)) {
    std::ostringstream msg;
    msg << "binomial_of_pair: " << sp << " is not in L~";
    throw InvalidInput(msg.str());
  }
  const auto v = x_exponents(sp, spec);
  std::vector<Int> v_plus(v.size()), v_minus(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v_plus[i] = v[i] > 0 ? v[i] : Int(0);
    v_minus[i] = v[i] < 0 ? Int(-v[i]) : Int(0);
  }
  Monomial first, second;
  if (sp.p >= 0) {
    first = {sp.s, 0, v_minus};
    second = {0, sp.p, v_plus};
  } else {
    first = {sp.s, -sp.p, v_minus};
    second = {0, 0, v_plus};
  }
  if (first.e_z == 0 && (second.e_z > 0 || pure_x(first))) std::swap(first, second);
  return {std::move(first), std::move(second)};
}

Binomial binomial_of_pair(const IntPair& sp, const ProblemSpec& spec) {
  auto [lhs, rhs] = pair_monomials(sp, spec);
  const auto order = slope_permutation(spec);
  const auto form = classify_binomial(lhs, rhs, order);
  if (!form) {
    std::ostringstream msg;
    msg << "binomial_of_pair: B" << sp << " = " << render(lhs) << " - " << render(rhs)
        << " fits none of the four binomial forms";
    throw InternalError(msg.str());
  }
  return {std::move(lhs), std::move(rhs), *form};
}

std::optional<BinomialForm> classify_binomial(const Monomial& lhs, const Monomial& rhs,
                                              std::span<const std::size_t> slope_order) {
  if (lhs == rhs || !disjoint(lhs, rhs)) return std::nullopt;
  if (pure_z(lhs) || pure_z(rhs)) return BinomialForm::ZPure;
  if (pure_y(lhs) || pure_y(rhs)) return BinomialForm::YPure;

  for (const auto* side : {&lhs, &rhs}) {
    const Monomial& zy = *side;
    const Monomial& other = side == &lhs ? rhs : lhs;
    if (zy.e_z > 0 && zy.e_y > 0) {
      // z^s y^p x^A - x^B is impossible for A != 0, and B must involve every x.
      if (has_x(zy)) return std::nullopt;
      const bool all_x = std::all_of(other.e_x.begin(), other.e_x.end(), [](const Int& x) { return x > 0; });
      return all_x ? std::optional(BinomialForm::ZYMixed) : std::nullopt;
    }
  }

  const Monomial* z_side = nullptr;
  const Monomial* y_side = nullptr;
  if (lhs.e_z > 0 && rhs.e_y > 0) {
    z_side = &lhs;
    y_side = &rhs;
  } else if (rhs.e_z > 0 && lhs.e_y > 0) {
    z_side = &rhs;
    y_side = &lhs;
  } else {
    return std::nullopt;
  }
  if (!has_x(*z_side) || !has_x(*y_side)) return std::nullopt;
  // Along increasing slope, x-variables go z-side (v < 0), absent (v = 0),
  // y-side (v > 0), never back.
  int last_sign = -1;
  for (std::size_t idx : slope_order) {
    const int sign = z_side->e_x.at(idx) > 0 ? -1 : (y_side->e_x.at(idx) > 0 ? 1 : 0);
    if (sign < last_sign) return std::nullopt;
    last_sign = sign;
  }
  return BinomialForm::Split;
}

bool is_cm(const FanDecomposition& fan) { return fan.mu_neg <= fan.nu + 1; }

GeneratorReport emit_generators(const FanDecomposition& fan, const ProblemSpec& spec) {
  GeneratorReport out;
  out.nu = fan.nu;
  out.mu_neg = fan.mu_neg;
  out.is_cm = is_cm(fan);

  const auto add = [&](const IntPair& v) {
    if (std::find(out.lattice_vectors.begin(), out.lattice_vectors.end(), v) == out.lattice_vectors.end()) {
      out.lattice_vectors.push_back(v);
    }
  };
  if (out.is_cm) {
    add(fan.epsilon(fan.nu));
    add(fan.epsilon(fan.nu + 1));
    add(fan.epsilon(fan.nu) - fan.epsilon(fan.nu + 1));
  } else {
    for (int i = fan.nu; i <= std::min(fan.mu_neg, fan.m + 1); ++i) add(fan.epsilon(i));
    for (int i = fan.nu; i <= std::min(fan.mu_neg - 2, fan.m - 1); ++i) {
      for (Int j = 1; j < fan.q_at(i + 2); ++j) add(fan.epsilon(i) - j * fan.epsilon(i + 1));
    }
  }
  for (const auto& v : out.lattice_vectors) out.generators.push_back(binomial_of_pair(v, spec));
  out.tau = out.generators.size();

  out.closed_form_tau = 3;
  for (int i = fan.nu + 2; i <= std::min(fan.mu_neg, fan.m + 1); ++i) out.closed_form_tau += fan.q_at(i) - 1;
  return out;
}

Monomial leading_monomial(const Binomial& b, const TermOrder& order) {
  return order.greater(b.lhs.exponents(), b.rhs.exponents()) ? b.lhs : b.rhs;
}

std::vector<Int> exponent_difference(const Binomial& b) {
  std::vector<Int> d;
  d.reserve(b.lhs.e_x.size() + 2);
  for (std::size_t i = 0; i < b.lhs.e_x.size(); ++i) d.push_back(b.lhs.e_x[i] - b.rhs.e_x[i]);
  d.push_back(b.lhs.e_z - b.rhs.e_z);
  d.push_back(b.lhs.e_y - b.rhs.e_y);
  return d;
}

std::string render(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  append_power(os, first, "z", m.e_z);
  append_power(os, first, "y", m.e_y);
  for (std::size_t i = 0; i < m.e_x.size(); ++i) append_power(os, first, "x" + std::to_string(i + 1), m.e_x[i]);
  if (first) os << '1';
  return os.str();
}

std::string render(const Binomial& b) { return render(b.lhs) + " - " + render(b.rhs); }

}  // namespace toricmf
