#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricmf {

/// Arbitrary-precision signed integer used for every exponent and lattice
/// coordinate in the library.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Floor division (rounds toward negative infinity). `d` must be nonzero.
Int floor_div(const Int& n, const Int& d);

/// Ceiling division. `d` must be nonzero.
Int ceil_div(const Int& n, const Int& d);

/// Least nonnegative residue of `n` modulo `|m|`. `m` must be nonzero.
Int mod_floor(const Int& n, const Int& m);

/// Division that must be exact; throws InternalError otherwise.
Int exact_div(const Int& n, const Int& d);

Int lcm(const Int& a, const Int& b);

/// Parses an optionally signed decimal string. Throws InvalidInput.
Int parse_int(std::string_view text);

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace toricmf
