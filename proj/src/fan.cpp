#include "toricmf/fan.hpp"

#include <algorithm>
#include <sstream>

#include "toricmf/error.hpp"

namespace toricmf {

HjExpansion hj_expand(const Int& s_minus1, const Int& s_0) {
  if (s_minus1 <= 0 || s_0 < 0 || s_0 >= s_minus1) {
    throw InvalidInput("hj_expand: need s_-1 > 0 and 0 <= s_0 < s_-1");
  }
  HjExpansion out;
  out.s = {s_minus1, s_0};
  while (out.s.back() != 0) {
    const Int& prev = out.s[out.s.size() - 2];
    const Int& cur = out.s.back();
    const Int q = ceil_div(prev, cur);
    out.q.push_back(q);
    out.s.push_back(q * cur - prev);
  }
  return out;
}

std::vector<Int> FanDecomposition::r_column(int i) const {
  std::vector<Int> col;
  col.reserve(r.size());
  for (const auto& row : r) col.push_back(row.at(static_cast<std::size_t>(i + 1)));
  return col;
}

FanDecomposition build_fan(const ProblemSpec& spec, const Basis2& basis) {
  const HjExpansion hj = hj_expand(basis.e_minus1.s, basis.e_0.s);
  FanDecomposition fan;
  fan.m = hj.m();
  fan.q = hj.q;
  fan.s_seq = hj.s;
  fan.p_seq = {0, basis.e_0.p};
  for (std::size_t k = 0; k < hj.q.size(); ++k) {
    const auto sz = fan.p_seq.size();
    fan.p_seq.push_back(hj.q[k] * fan.p_seq[sz - 1] - fan.p_seq[sz - 2]);
  }
  for (std::size_t k = 0; k < fan.s_seq.size(); ++k) fan.eps.push_back({fan.s_seq[k], fan.p_seq[k]});

  const std::size_t n = spec.n();
  fan.r.assign(n, {});
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& e : fan.eps) {
      const Int num = e.s * spec.b[j] - e.p * spec.c[j];
      if (num % spec.a[j] != 0) {
        std::ostringstream msg;
        msg << "build_fan: fan vector " << e << " is not in Ker(Phi); basis is broken";
        throw InternalError(msg.str());
      }
      fan.r[j].push_back(num / spec.a[j]);
    }
  }

  const auto all_of_col = [&](int i, auto pred) {
    return std::all_of(fan.r.begin(), fan.r.end(),
                       [&](const auto& row) { return pred(row[static_cast<std::size_t>(i + 1)]); });
  };
  fan.nu = -1;
  for (int i = fan.first(); i <= fan.last(); ++i) {
    if (all_of_col(i, [](const Int& x) { return x >= 0; })) fan.nu = i;
  }
  fan.mu_neg = fan.last();
  for (int i = fan.last(); i >= fan.first(); --i) {
    if (all_of_col(i, [](const Int& x) { return x <= 0; })) fan.mu_neg = i;
  }
  return fan;
}

InvariantReport fan_invariants(const FanDecomposition& fan, const ProblemSpec& spec) {
  InvariantReport rep;
  const auto fail = [&](const std::string& what) {
    rep.ok = false;
    rep.first_failure = what;
    return rep;
  };
  const std::size_t count = static_cast<std::size_t>(fan.m + 3);
  if (fan.m < -1 || fan.q.size() != static_cast<std::size_t>(fan.m + 1) || fan.s_seq.size() != count ||
      fan.p_seq.size() != count || fan.eps.size() != count) {
    return fail("sequence lengths disagree with m");
  }
  if (fan.r.size() != spec.n()) return fail("r-table has wrong number of rows");
  for (const auto& row : fan.r) {
    if (row.size() != count) return fail("r-table row has wrong length");
  }
  for (int i = 1; i <= fan.m + 1; ++i) {
    if (fan.q_at(i) < 2) return fail("q_" + std::to_string(i) + " < 2");
  }
  for (int i = fan.first(); i <= fan.last(); ++i) {
    if (fan.epsilon(i) != IntPair{fan.s(i), fan.p(i)}) return fail("eps_" + std::to_string(i) + " != (s_i, p_i)");
    if (!in_ltilde(fan.epsilon(i), spec)) return fail("eps_" + std::to_string(i) + " is not in L~");
  }
  if (fan.p(-1) != 0 || fan.s(-1) <= 0) return fail("eps_-1 is not (s_-1, 0) with s_-1 > 0");
  if (fan.s(fan.last()) != 0) return fail("s_{m+1} != 0");
  const Int d = fan.s(-1) * fan.p(0);
  if (d <= 0) return fail("s_-1 * p_0 is not positive");
  for (int i = fan.first(); i < fan.last(); ++i) {
    if (det(fan.epsilon(i), fan.epsilon(i + 1)) != d) {
      return fail("det(eps_" + std::to_string(i) + ", eps_" + std::to_string(i + 1) + ") != s_-1 p_0");
    }
  }
  for (int i = -1; i <= fan.m - 1; ++i) {
    const Int& q = fan.q_at(i + 2);
    if (fan.s(i + 2) != q * fan.s(i + 1) - fan.s(i)) return fail("s recurrence fails at i=" + std::to_string(i));
    if (fan.p(i + 2) != q * fan.p(i + 1) - fan.p(i)) return fail("p recurrence fails at i=" + std::to_string(i));
    for (std::size_t j = 0; j < spec.n(); ++j) {
      if (fan.r_at(j, i + 2) != q * fan.r_at(j, i + 1) - fan.r_at(j, i)) {
        return fail("r recurrence fails for x" + std::to_string(j + 1) + " at i=" + std::to_string(i));
      }
    }
  }
  for (int i = fan.first(); i < fan.last(); ++i) {
    if (!(fan.s(i) > fan.s(i + 1))) return fail("s is not strictly decreasing at i=" + std::to_string(i));
    if (!(fan.p(i) < fan.p(i + 1))) return fail("p is not strictly increasing at i=" + std::to_string(i));
    for (std::size_t j = 0; j < spec.n(); ++j) {
      if (!(fan.r_at(j, i) > fan.r_at(j, i + 1))) {
        return fail("r row x" + std::to_string(j + 1) + " is not strictly decreasing at i=" + std::to_string(i));
      }
    }
  }
  for (std::size_t j = 0; j < spec.n(); ++j) {
    if (fan.r_at(j, -1) * spec.a[j] != fan.s(-1) * spec.b[j]) return fail("r_{.,-1} is not proportional to b");
    if (fan.r_at(j, fan.last()) * spec.a[j] != -fan.p(fan.last()) * spec.c[j]) {
      return fail("r_{.,m+1} is not proportional to -c");
    }
  }
  for (int i = fan.first(); i < fan.last(); ++i) {
    for (std::size_t j = 0; j < spec.n(); ++j) {
      if (fan.r_at(j, i + 1) > 0 && !(fan.r_at(j, i) > 0)) {
        return fail("support nesting supp r_{i+1,+} in supp r_{i,+} fails at i=" + std::to_string(i));
      }
    }
  }
  if (fan.nu < -1 || fan.mu_neg > fan.last()) return fail("nu or mu_neg out of range");
  if (fan.nu > fan.mu_neg) return fail("nu > mu_neg");
  if (fan.nu == fan.mu_neg) {
    const auto col = fan.r_column(fan.nu);
    if (!std::all_of(col.begin(), col.end(), [](const Int& x) { return x == 0; })) {
      return fail("nu == mu_neg without a zero r-column");
    }
  }
  for (int i = fan.first(); i <= fan.last(); ++i) {
    const auto col = fan.r_column(i);
    const bool nonneg = std::all_of(col.begin(), col.end(), [](const Int& x) { return x >= 0; });
    const bool nonpos = std::all_of(col.begin(), col.end(), [](const Int& x) { return x <= 0; });
    if (nonneg != (i <= fan.nu)) return fail("nu is not the last nonnegative column");
    if (nonpos != (i >= fan.mu_neg)) return fail("mu_neg is not the first nonpositive column");
  }
  return rep;
}

}  // namespace toricmf
