#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace egal {

// Exact arithmetic everywhere: all solver guarantees in this library are
// equalities/inequalities over rationals, never float tolerances.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formats a rational as "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& r);

/// Parses "p", "p/q" or a decimal string like "0.25" into an exact rational.
/// Returns std::nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Floor of a rational as an arbitrary-precision integer.
inline Int floor_div(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

/// Ceiling of a rational as an arbitrary-precision integer.
inline Int ceil_div(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

}  // namespace egal
