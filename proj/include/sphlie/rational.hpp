#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "sphlie/error.hpp"

namespace sphlie {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int rat_sign(const Rat& r) { return r.sign(); }

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string rat_str(const Rat& r);

/// Parses "p" or "p/q" with optional sign. Throws errc::parse_error.
Rat rat_parse(std::string_view s);

} // namespace sphlie
