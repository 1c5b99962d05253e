#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ccdet {

// Exact arbitrary-precision rational scalar. cpp_rational keeps values
// reduced with positive denominator, which is exactly the canonical form
// the rest of the kernel relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace ccdet
