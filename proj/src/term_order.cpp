#include "toricmf/term_order.hpp"

#include "toricmf/error.hpp"

namespace toricmf {

Int TermOrder::weight(const Exponents& e) const {
  Int w = e.at(0) * weights.w_z + e.at(1) * weights.w_y;
  for (std::size_t i = 0; i < weights.w_x.size(); ++i) w += e.at(i + 2) * weights.w_x[i];
  return w;
}

bool TermOrder::greater(const Exponents& lhs, const Exponents& rhs) const {
  const Int wl = weight(lhs);
  const Int wr = weight(rhs);
  if (wl != wr) return wl > wr;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (lhs[k] == rhs[k]) continue;
    switch (tie_break) {
      case TieBreak::RevlexZSmallest:
        return lhs[k] < rhs[k];
      case TieBreak::LexZLargest:
        return lhs[k] > rhs[k];
    }
  }
  return false;
}

std::string TermOrder::name() const { return to_string(tie_break); }

std::string to_string(TieBreak t) {
  switch (t) {
    case TieBreak::RevlexZSmallest:
      return "revlex_z_smallest";
    case TieBreak::LexZLargest:
      return "lex_z_largest";
  }
  return "?";
}

TieBreak parse_tie_break(const std::string& name) {
  if (name == "revlex" || name == "revlex_z_smallest") return TieBreak::RevlexZSmallest;
  if (name == "lex" || name == "lex_z_largest") return TieBreak::LexZLargest;
  throw InvalidInput("unknown term order '" + name + "' (expected revlex_z_smallest or lex_z_largest)");
}

std::vector<TieBreak> all_tie_breaks() { return {TieBreak::RevlexZSmallest, TieBreak::LexZLargest}; }

}  // namespace toricmf
