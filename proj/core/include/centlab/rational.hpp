#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace centlab {

/// Arbitrary-precision integer (shortest-path counts, canonical keys, ...).
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational score value. All measures except eigenvector centrality
/// produce these, so axiom inequalities are decided without rounding.
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational in lowest terms as "p/q", or "p" when q == 1.
std::string rational_to_string(const Rational &value);

/// Parses "p", "p/q" or a plain decimal such as "0.25" into an exact rational.
/// Throws InvalidParameter on malformed input.
Rational rational_from_string(const std::string &text);

/// Decimal rendering with `digits` places after the point, round-half-up.
std::string rational_to_decimal(const Rational &value, int digits);

} // namespace centlab
