#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "nlsa/errors.hpp"

namespace nlsa {

// Exact arithmetic only: arbitrary-precision integers and rationals.
// Rat is always stored in lowest terms with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rat>;

/// Parse a decimal integer string (optional leading '-'). Throws ParseError.
Int parse_int(const std::string& text);

/// Build a rational from decimal numerator/denominator strings.
/// The denominator may be negative (the sign is normalized) but not zero.
Rat make_rational(const std::string& num, const std::string& den);

Vec zero_vec(int n);
bool is_zero(const Vec& v);

/// dst += c * src (componentwise, exact).
void add_scaled(Vec& dst, const Rat& c, const Vec& src);

Vec scaled(Vec v, const Rat& c);

/// Narrow an Int known to be small (report fields, table output).
long long to_int64(const Int& value);

}  // namespace nlsa
