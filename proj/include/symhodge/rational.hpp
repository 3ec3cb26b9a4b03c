#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace symhodge {

// Exact rational scalar. Expression templates are disabled so arithmetic
// yields plain values; the backend keeps num/den coprime with den > 0.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::cpp_int;

inline BigInt rational_num(const Rational& r) { return numerator(r); }
inline BigInt rational_den(const Rational& r) { return denominator(r); }

/// Parse "p" or "p/q" (optional leading '-'). Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    auto check_int = [](std::string_view s) {
        if (s.empty())
            return false;
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    if (slash == std::string_view::npos) {
        if (!check_int(text))
            throw std::invalid_argument("bad rational literal: " + std::string(text));
        return Rational(BigInt(std::string(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
        throw std::invalid_argument("bad rational literal: " + std::string(text));
    BigInt q{std::string(den)};
    if (q == 0)
        throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(BigInt(std::string(num)), q);
}

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
inline std::string rational_str(const Rational& r)
{
    if (rational_den(r) == 1)
        return rational_num(r).str();
    return rational_num(r).str() + "/" + rational_den(r).str();
}

} // namespace symhodge
