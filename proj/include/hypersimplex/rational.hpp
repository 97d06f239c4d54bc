// Exact scalar types shared by every module.

#ifndef HYPERSIMPLEX_RATIONAL_HPP
#define HYPERSIMPLEX_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypersimplex {

using BigInt = boost::multiprecision::cpp_int;

// cpp_rational keeps every value in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

/// Largest integer not exceeding q (rounds toward negative infinity).
inline BigInt floor_of(const Rational& q)
{
    BigInt num = numerator_of(q);
    BigInt den = denominator_of(q);
    BigInt quot = num / den;  // truncates toward zero
    if (num < 0 && quot * den != num)
        quot -= 1;
    return quot;
}

/// Fractional part q - floor(q), always in [0, 1).
inline Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

inline std::int64_t to_int64(const BigInt& value)
{
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer coordinate " + value.str() + " exceeds 64 bits");
    return static_cast<std::int64_t>(value);
}

/// Parses `a` or `a/b` with b > 0; surrounding blanks are allowed.
inline Rational parse_rational(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == digits_from)
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        for (std::size_t k = digits_from; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        if (s[0] == '+')
            s.remove_prefix(1);
        return BigInt(std::string(s));
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    std::string_view den_text = trim(text.substr(slash + 1));
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("denominator must be a positive integer in '" + std::string(text) + "'");
    BigInt den = parse_int(den_text);
    if (den <= 0)
        throw std::invalid_argument("denominator must be a positive integer in '" + std::string(text) + "'");
    return Rational(num, den);
}

/// Formats as `a` or `a/b`; parse_rational(format_rational(q)) == q.
inline std::string format_rational(const Rational& q)
{
    if (is_integer(q))
        return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

}  // namespace hypersimplex

#endif  // HYPERSIMPLEX_RATIONAL_HPP
