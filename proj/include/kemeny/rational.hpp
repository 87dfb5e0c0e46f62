#pragma once

#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "kemeny/error.hpp"

namespace kemeny {

// Arbitrary-precision integers and rationals. Rationals are kept reduced with
// a positive denominator by the backend, so exact comparisons are plain
// operator comparisons.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// num/den for any sign of den. The backend rejects negative denominators at
/// construction, so the sign is folded into the numerator here.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) fail(ErrorKind::Singular, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

/// Lossless "p/q" rendering; the denominator is always present.
inline std::string fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {

inline Integer pow10(int exponent) {
    Integer result = 1;
    for (int i = 0; i < exponent; ++i) result *= 10;
    return result;
}

// floor(log10(num/den)) for positive num, den.
inline int decimal_exponent(const Integer& num, const Integer& den) {
    int estimate = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
    // num < den * 10^e, kept in integers for either sign of e.
    auto below = [&](int e) { return e >= 0 ? num < den * pow10(e) : num * pow10(-e) < den; };
    // The digit-count estimate can be off by one in either direction.
    while (!below(estimate + 1)) ++estimate;
    while (below(estimate)) --estimate;
    return estimate;
}

} // namespace detail

/// Decimal rendering of an exact rational, rounded to `significant_digits`
/// significant digits (half away from zero). Falls back to exponent notation
/// outside a comfortable fixed-point range.
inline std::string decimal_string(const Rational& value, int significant_digits = 12) {
    if (significant_digits < 1) fail(ErrorKind::InvalidArgument, "significant_digits must be >= 1");
    if (value == 0) return "0";

    Integer num = numerator(value);
    Integer den = denominator(value);
    const bool negative = num < 0;
    if (negative) num = -num;

    int e10 = detail::decimal_exponent(num, den);

    // Scale so the quotient has exactly `significant_digits` digits, then round.
    const int shift = significant_digits - 1 - e10;
    Integer scaled_num = num;
    Integer scaled_den = den;
    if (shift >= 0) {
        scaled_num *= detail::pow10(shift);
    } else {
        scaled_den *= detail::pow10(-shift);
    }
    Integer digits = scaled_num / scaled_den;
    const Integer remainder = scaled_num - digits * scaled_den;
    if (2 * remainder >= scaled_den) ++digits;
    if (digits == detail::pow10(significant_digits)) {
        digits /= 10;
        ++e10;
    }

    std::string ds = digits.str();
    // Trim trailing zeros; at least one digit stays.
    std::size_t last = ds.find_last_not_of('0');
    ds.erase(last + 1);

    std::string body;
    if (e10 >= 0 && e10 < 18) {
        if (static_cast<std::size_t>(e10) + 1 >= ds.size()) {
            body = ds + std::string(static_cast<std::size_t>(e10) + 1 - ds.size(), '0');
        } else {
            body = ds.substr(0, static_cast<std::size_t>(e10) + 1) + "." + ds.substr(static_cast<std::size_t>(e10) + 1);
        }
    } else if (e10 < 0 && e10 > -5) {
        body = "0." + std::string(static_cast<std::size_t>(-e10) - 1, '0') + ds;
    } else {
        body = ds.substr(0, 1);
        if (ds.size() > 1) body += "." + ds.substr(1);
        body += "e" + std::to_string(e10);
    }
    return negative ? "-" + body : body;
}

} // namespace kemeny
