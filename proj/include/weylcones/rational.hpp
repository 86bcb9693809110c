#ifndef WEYLCONES_RATIONAL_HPP
#define WEYLCONES_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylcones {

// Exact arithmetic carriers for all geometric predicates. GMP keeps the
// fractions canonical (reduced, positive denominator) on every operation.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact conversion of a finite double to its dyadic rational value.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
    return Rational(x);
}

/// Parses "p/q", "p", or a plain decimal string ("-0.25" -> -1/4).
Rational parse_rational(const std::string& text);

/// Renders q in decimal with the given number of significant digits.
std::string rational_to_decimal(const Rational& q, int significant_digits = 12);

inline std::string rational_to_string(const Rational& q) { return q.str(); }

}  // namespace weylcones

#endif
