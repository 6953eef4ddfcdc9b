#include "rbook/rational.hpp"

#include <cctype>

#include "rbook/errors.hpp"

namespace rbook {

BigRational pow(const BigRational& q, std::int64_t e) {
    if (e < 0) {
        if (q == 0) throw InvalidInput("zero to a negative power");
        return BigRational(1) / pow(q, -e);
    }
    const auto ue = static_cast<unsigned>(e);
    BigInt num = boost::multiprecision::pow(numerator_of(q), ue);
    BigInt den = boost::multiprecision::pow(denominator_of(q), ue);
    return BigRational(num, den);
}

BigInt pow(const BigInt& b, std::uint64_t e) {
    return boost::multiprecision::pow(b, static_cast<unsigned>(e));
}

BigInt factorial(std::uint64_t n) {
    BigInt out = 1;
    for (std::uint64_t i = 2; i <= n; ++i) out *= i;
    return out;
}

std::string to_string(const BigRational& q) {
    const BigInt den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

namespace {

// Boost reads a leading 0 as an octal prefix, so strip it first.
BigInt decimal_digits(std::string_view digits, bool negative) {
    const std::size_t nz = digits.find_first_not_of('0');
    BigInt v = nz == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(nz)));
    return negative ? BigInt(-v) : v;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            throw InvalidInput("malformed rational '" + std::string(whole) + "'");
        }
    }
    return decimal_digits(s.substr(i), s[0] == '-');
}

}  // namespace

BigRational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), text);
        BigInt den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
        return BigRational(num, den);
    }
    std::string_view mantissa = text;
    std::int64_t exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        exponent = static_cast<std::int64_t>(parse_integer(text.substr(e + 1), text));
    }
    std::string digits;
    bool negative = false;
    std::size_t i = 0;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
        negative = mantissa[0] == '-';
        i = 1;
    }
    bool seen_point = false;
    for (; i < mantissa.size(); ++i) {
        const char ch = mantissa[i];
        if (ch == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits += ch;
            if (seen_point) --exponent;
        } else {
            throw InvalidInput("malformed rational '" + std::string(text) + "'");
        }
    }
    if (digits.empty()) throw InvalidInput("malformed rational '" + std::string(text) + "'");
    return BigRational(decimal_digits(digits, negative)) * pow(BigRational(10), exponent);
}

double to_double(const BigRational& q) { return q.convert_to<double>(); }

}  // namespace rbook
