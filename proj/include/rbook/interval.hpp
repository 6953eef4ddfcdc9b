#pragma once

#include <string>

#include <mpfr.h>

#include "rbook/rational.hpp"

namespace rbook {

/// Working precision in bits for all real-valued bound arithmetic. Defaults
/// to 128; the RF_PRECISION_BITS environment variable overrides it on first use.
mpfr_prec_t precision_bits();
void set_precision_bits(mpfr_prec_t bits);

/// Owning MPFR value.
class Real {
public:
    Real();
    explicit Real(mpfr_prec_t prec);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Decimal rendering with `digits` significant digits.
    std::string to_string(int digits = 30) const;

private:
    mpfr_t value_;
    bool owned_ = false;
};

/// Closed interval [lo, hi] of reals with outward-rounded endpoints. Every
/// operation returns an enclosure of the exact result, so a comparison made
/// through certainly_le / certainly_ge never reports a false pass.
class Interval {
public:
    Interval();  // [0, 0]

    static Interval exact(long v);
    static Interval from_double(double v);
    static Interval from_integer(const BigInt& v);
    static Interval from_rational(const BigRational& q);
    static Interval hull(const Interval& a, const Interval& b);
    static Interval pi();
    static Interval from_bounds(Real lo, Real hi);

    const Real& lo() const noexcept { return lo_; }
    const Real& hi() const noexcept { return hi_; }
    double lo_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
    double mid_double() const;
    /// hi - lo, rounded up.
    Real width() const;

    bool contains_zero() const;
    bool is_point() const;

    Interval operator-() const;
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws InvalidInput when b contains zero.
    friend Interval operator/(const Interval& a, const Interval& b);

    Interval& operator+=(const Interval& b) { return *this = *this + b; }
    Interval& operator-=(const Interval& b) { return *this = *this - b; }
    Interval& operator*=(const Interval& b) { return *this = *this * b; }

    friend Interval sqrt(const Interval& a);  // clamps a negative lower end to 0
    friend Interval exp(const Interval& a);
    friend Interval log(const Interval& a);    // requires a > 0
    friend Interval log1p(const Interval& a);  // requires a > -1
    friend Interval cosh(const Interval& a);
    friend Interval cos(const Interval& a);

    friend bool certainly_le(const Interval& a, const Interval& b);
    friend bool certainly_ge(const Interval& a, const Interval& b) { return certainly_le(b, a); }
    friend bool certainly_lt(const Interval& a, const Interval& b);

    std::string to_string(int digits = 20) const;

private:
    Real lo_;
    Real hi_;
};

Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

}  // namespace rbook
