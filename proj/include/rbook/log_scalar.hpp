#pragma once

#include <string>

#include "rbook/interval.hpp"
#include "rbook/rational.hpp"

namespace rbook {

/// Sign plus natural-log magnitude, for quantities like r^{rk} or
/// (mu^2/p)^{mu r t} that overflow every fixed-width format.
///
/// The log-magnitude is carried as an outward-rounded Interval, so its width
/// is the tracked relative error of the value and every comparison is
/// rigorous: certainly_ge(a, b) is true only if a >= b holds exactly.
class LogScalar {
public:
    LogScalar() = default;  // zero

    static LogScalar zero() { return {}; }
    static LogScalar one() { return from_log(Interval::exact(0)); }
    static LogScalar from_integer(const BigInt& v);
    static LogScalar from_rational(const BigRational& q);
    /// e^x for x >= any sign.
    static LogScalar from_log(const Interval& log_magnitude, int sign = 1);
    static LogScalar exp(const Interval& x) { return from_log(x); }

    int sign() const noexcept { return sign_; }
    bool is_zero() const noexcept { return sign_ == 0; }
    /// Enclosure of ln|x|; throws InvalidInput for zero.
    const Interval& log_magnitude() const;
    /// Upper bound on the relative error, i.e. the width of the log enclosure.
    double relative_error_bound() const;

    LogScalar operator-() const;
    friend LogScalar operator*(const LogScalar& a, const LogScalar& b);
    friend LogScalar operator/(const LogScalar& a, const LogScalar& b);
    friend LogScalar operator+(const LogScalar& a, const LogScalar& b);
    friend LogScalar operator-(const LogScalar& a, const LogScalar& b) { return a + (-b); }

    /// |base|^e with the sign of base^e; base must be positive unless e is an integer.
    friend LogScalar pow(const LogScalar& base, const Interval& exponent);
    friend LogScalar pow(const LogScalar& base, const BigRational& exponent);

    friend bool certainly_ge(const LogScalar& a, const LogScalar& b);
    friend bool certainly_le(const LogScalar& a, const LogScalar& b) { return certainly_ge(b, a); }

    /// Approximate value as a double (may be +-inf or 0 for extreme magnitudes).
    double to_double() const;
    std::string to_string() const;

private:
    int sign_ = 0;
    Interval log_;
};

/// ln(a) - ln(b) for positive a, b.
Interval log_gap(const LogScalar& a, const LogScalar& b);

/// One verified inequality "lhs >= rhs" (or "lhs <= rhs" for kind Le) with
/// enclosures of both logs; `slack` is the midpoint log-gap in the passing direction.
struct InequalityCheck {
    std::string name;
    std::string relation;  // ">=" or "<="
    double lhs_log = 0;
    double rhs_log = 0;
    double slack = 0;
    bool pass = false;
    bool exact = false;  // decided in exact rational arithmetic
};

InequalityCheck check_ge(std::string name, const LogScalar& lhs, const LogScalar& rhs);
InequalityCheck check_le(std::string name, const LogScalar& lhs, const LogScalar& rhs);
InequalityCheck check_ge_exact(std::string name, const BigRational& lhs, const BigRational& rhs);
InequalityCheck check_le_exact(std::string name, const BigRational& lhs, const BigRational& rhs);

}  // namespace rbook
