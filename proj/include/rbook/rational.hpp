#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace rbook {

using BigInt = boost::multiprecision::mpz_int;
/// Canonical arbitrary-precision rational: gcd(num, den) = 1, den > 0.
using BigRational = boost::multiprecision::mpq_rational;

inline BigInt numerator_of(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline BigRational make_rational(const BigInt& num, const BigInt& den) { return BigRational(num, den); }
inline BigRational make_rational(std::int64_t num, std::int64_t den) { return BigRational(BigInt(num), BigInt(den)); }

/// q^e for integer e (negative allowed when q != 0).
BigRational pow(const BigRational& q, std::int64_t e);
BigInt pow(const BigInt& b, std::uint64_t e);

BigInt factorial(std::uint64_t n);

/// "num/den", or just "num" when den == 1.
std::string to_string(const BigRational& q);

/// Accepts "a", "a/b", and finite decimals like "-0.125" or "1e-3"; exact.
BigRational parse_rational(std::string_view text);

/// Nearest double (for human-facing output only).
double to_double(const BigRational& q);

}  // namespace rbook
