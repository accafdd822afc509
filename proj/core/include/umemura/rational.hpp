#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace umemura {

// Arbitrary-precision rationals, kept canonical by GMP: gcd(|num|, den) = 1
// and den >= 1 after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Canonical text form: "num" when den == 1, otherwise "num/den".
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

// Accepts "num", "num/den" and plain decimals such as "-3.7" (converted
// exactly, e.g. -37/10).
inline Rational rational_from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        bool negative = false;
        std::string digits = s;
        if (digits[0] == '+' || digits[0] == '-') {
            negative = digits[0] == '-';
            digits.erase(0, 1);
            --dot;
        }
        std::string intpart = digits.substr(0, dot);
        std::string fracpart = digits.substr(dot + 1);
        if (intpart.empty() && fracpart.empty())
            throw ParseError("bad rational literal: " + s);
        for (char c : intpart + fracpart)
            if (c < '0' || c > '9') throw ParseError("bad rational literal: " + s);
        Integer num(intpart.empty() ? "0" : intpart);
        Integer scale = 1;
        for (char c : fracpart) {
            num = num * 10 + (c - '0');
            scale *= 10;
        }
        Rational q(num, scale);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }
    try {
        Rational q(s);
        q.canonicalize();
        if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

}  // namespace umemura
