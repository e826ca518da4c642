#include "toricmf/integer.hpp"

#include <cctype>

#include "toricmf/error.hpp"

namespace toricmf {

Int floor_div(const Int& n, const Int& d) {
  Int q = n / d;
  Int r = n % d;
  if (r != 0 && ((r < 0) != (d < 0))) --q;
  return q;
}

Int ceil_div(const Int& n, const Int& d) { return -floor_div(-n, d); }

Int mod_floor(const Int& n, const Int& m) {
  Int mm = abs(m);
  Int r = n % mm;
  if (r < 0) r += mm;
  return r;
}

Int exact_div(const Int& n, const Int& d) {
  if (d == 0) throw InternalError("exact_div: division by zero");
  if (n % d != 0) {
    throw InternalError("exact_div: " + n.str() + " is not divisible by " + d.str());
  }
  return n / d;
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InvalidInput("not an integer: '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw InvalidInput("not an integer: '" + std::string(text) + "'");
    }
  }
  Int v(std::string(text.substr(i)));
  return text[0] == '-' ? Int(-v) : v;
}

}  // namespace toricmf
