#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Under C++20 rewritten comparisons, boost 1.74's `integer == rational`
// template resolves back to itself and recurses forever. These exact
// non-template overloads win overload resolution and call the member directly.
namespace boost {
inline bool operator==(int b, const rational<std::int64_t>& a) { return a.operator==(b); }
inline bool operator==(long b, const rational<std::int64_t>& a) { return a.operator==(b); }
inline bool operator==(long long b, const rational<std::int64_t>& a) { return a.operator==(b); }
}  // namespace boost

namespace weylcert {

using Rational = boost::rational<std::int64_t>;

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

/// "3", "-1/2"
std::string to_string(const Rational& q);

/// Parses "n" or "n/d". Throws ParseError; `offset` shifts reported positions.
Rational parse_rational(std::string_view text, std::size_t offset = 0);

}  // namespace weylcert
