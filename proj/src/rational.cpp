#include "weylcones/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace weylcones {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Rational parse_decimal(const std::string& s) {
    // sign, integer part, optional fraction, optional exponent
    std::size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    std::string digits;
    long frac_len = 0;
    bool seen_digit = false, seen_dot = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    long expo = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        expo = std::stol(s.substr(pos + 1));
        pos = s.size();
    }
    if (!seen_digit || pos != s.size())
        throw std::invalid_argument("parse_rational: bad number '" + s + "'");
    Integer num(digits.empty() ? "0" : digits);
    num *= sign;
    long ten_power = expo - frac_len;
    Integer den = 1;
    if (ten_power >= 0) {
        Integer scale = 1;
        for (long i = 0; i < ten_power; ++i) scale *= 10;
        num *= scale;
    } else {
        for (long i = 0; i < -ten_power; ++i) den *= 10;
    }
    return Rational(num, den);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num(trim(s.substr(0, slash)));
        Integer den(trim(s.substr(slash + 1)));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(num, den);
    }
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        return parse_decimal(s);
    return Rational(Integer(s));
}

std::string rational_to_decimal(const Rational& q, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    if (q == 0) return "0";
    Integer a = boost::multiprecision::abs(numerator(q));
    Integer b = denominator(q);
    // decimal exponent e with 10^e <= a/b < 10^(e+1)
    long e = 0;
    Integer lo = a, hi = b;
    while (lo >= hi * 10) { hi *= 10; ++e; }
    while (lo < hi) { lo *= 10; --e; }
    // round a/b * 10^(sig-1-e) to an integer of sig digits
    long shift = significant_digits - 1 - e;
    Integer num = a, den = b;
    if (shift >= 0)
        for (long i = 0; i < shift; ++i) num *= 10;
    else
        for (long i = 0; i < -shift; ++i) den *= 10;
    Integer digits = (num + den / 2) / den;  // round half up
    std::string ds = digits.str();
    if (static_cast<int>(ds.size()) > significant_digits) {  // rounding carried over
        ds.pop_back();
        ++e;
    }
    while (ds.size() > 1 && ds.back() == '0') ds.pop_back();
    std::string sign = q < 0 ? "-" : "";
    if (e >= 0 && e < significant_digits + 3) {
        if (static_cast<long>(ds.size()) <= e) ds.append(e + 1 - ds.size(), '0');
        std::string head = ds.substr(0, e + 1);
        std::string tail = ds.substr(e + 1);
        return sign + head + (tail.empty() ? "" : "." + tail);
    }
    if (e < 0 && e > -5) {
        std::string out = "0.";
        out.append(-e - 1, '0');
        return sign + out + ds;
    }
    std::string mant = ds.substr(0, 1) + (ds.size() > 1 ? "." + ds.substr(1) : "");
    std::ostringstream os;
    os << sign << mant << "e" << (e >= 0 ? "+" : "") << e;
    return os.str();
}

}  // namespace weylcones
