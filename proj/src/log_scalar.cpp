#include "rbook/log_scalar.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "rbook/errors.hpp"

namespace rbook {

LogScalar LogScalar::from_integer(const BigInt& v) { return from_rational(BigRational(v)); }

LogScalar LogScalar::from_rational(const BigRational& q) {
    LogScalar out;
    if (q == 0) return out;
    out.sign_ = q > 0 ? 1 : -1;
    const BigRational mag = q > 0 ? q : BigRational(-q);
    out.log_ = log(Interval::from_rational(mag));
    return out;
}

LogScalar LogScalar::from_log(const Interval& log_magnitude, int sign) {
    if (sign != 1 && sign != -1) throw InvalidInput("LogScalar::from_log needs sign +1 or -1");
    LogScalar out;
    out.sign_ = sign;
    out.log_ = log_magnitude;
    return out;
}

const Interval& LogScalar::log_magnitude() const {
    if (sign_ == 0) throw InvalidInput("log-magnitude of zero");
    return log_;
}

double LogScalar::relative_error_bound() const {
    if (sign_ == 0) return 0.0;
    return mpfr_get_d(log_.width().get(), MPFR_RNDU);
}

LogScalar LogScalar::operator-() const {
    LogScalar out = *this;
    out.sign_ = -sign_;
    return out;
}

LogScalar operator*(const LogScalar& a, const LogScalar& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return {};
    return LogScalar::from_log(a.log_ + b.log_, a.sign_ * b.sign_);
}

LogScalar operator/(const LogScalar& a, const LogScalar& b) {
    if (b.sign_ == 0) throw InvalidInput("LogScalar division by zero");
    if (a.sign_ == 0) return {};
    return LogScalar::from_log(a.log_ - b.log_, a.sign_ * b.sign_);
}

LogScalar operator+(const LogScalar& a, const LogScalar& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    // Larger magnitude first so the exponent below stays <= about 0.
    const bool a_big = a.log_.mid_double() >= b.log_.mid_double();
    const LogScalar& big = a_big ? a : b;
    const LogScalar& small = a_big ? b : a;
    const Interval ratio = exp(small.log_ - big.log_);
    if (a.sign_ == b.sign_) {
        return LogScalar::from_log(big.log_ + log1p(ratio), big.sign_);
    }
    if (big.log_.is_point() && small.log_.is_point() && mpfr_equal_p(big.log_.lo().get(), small.log_.lo().get())) {
        return {};
    }
    if (!certainly_lt(ratio, Interval::exact(1))) {
        throw InvalidInput("LogScalar subtraction with indeterminate sign at current precision");
    }
    return LogScalar::from_log(big.log_ + log1p(-ratio), big.sign_);
}

LogScalar pow(const LogScalar& base, const Interval& exponent) {
    if (base.sign_ <= 0) throw InvalidInput("real power of a non-positive LogScalar");
    return LogScalar::from_log(base.log_ * exponent);
}

LogScalar pow(const LogScalar& base, const BigRational& exponent) {
    if (base.sign_ == 0) {
        if (exponent > 0) return {};
        if (exponent == 0) return LogScalar::one();
        throw InvalidInput("zero to a negative power");
    }
    int sign = 1;
    if (base.sign_ < 0) {
        if (denominator_of(exponent) != 1) throw InvalidInput("fractional power of a negative LogScalar");
        if (boost::multiprecision::bit_test(numerator_of(exponent) < 0 ? BigInt(-numerator_of(exponent)) : numerator_of(exponent), 0)) {
            sign = -1;
        }
    }
    return LogScalar::from_log(base.log_ * Interval::from_rational(exponent), sign);
}

bool certainly_ge(const LogScalar& a, const LogScalar& b) {
    if (a.sign_ != b.sign_) return a.sign_ > b.sign_;
    if (a.sign_ == 0) return true;
    if (a.sign_ > 0) return certainly_ge(a.log_, b.log_);
    return certainly_le(a.log_, b.log_);
}

double LogScalar::to_double() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::exp(log_.mid_double());
}

std::string LogScalar::to_string() const {
    if (sign_ == 0) return "0";
    return std::string(sign_ < 0 ? "-" : "") + "exp(" + log_.to_string(25) + ")";
}

Interval log_gap(const LogScalar& a, const LogScalar& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw InvalidInput("log_gap needs positive operands");
    return a.log_magnitude() - b.log_magnitude();
}

namespace {

double signed_log(const LogScalar& x) {
    if (x.is_zero()) return -std::numeric_limits<double>::infinity();
    return x.log_magnitude().mid_double();
}

}  // namespace

InequalityCheck check_ge(std::string name, const LogScalar& lhs, const LogScalar& rhs) {
    InequalityCheck out;
    out.name = std::move(name);
    out.relation = ">=";
    out.lhs_log = signed_log(lhs);
    out.rhs_log = signed_log(rhs);
    out.pass = certainly_ge(lhs, rhs);
    if (lhs.sign() > 0 && rhs.sign() > 0) {
        out.slack = log_gap(lhs, rhs).mid_double();
    } else {
        out.slack = lhs.to_double() - rhs.to_double();
    }
    return out;
}

InequalityCheck check_le(std::string name, const LogScalar& lhs, const LogScalar& rhs) {
    InequalityCheck out = check_ge(std::move(name), rhs, lhs);
    std::swap(out.lhs_log, out.rhs_log);
    out.relation = "<=";
    return out;
}

InequalityCheck check_ge_exact(std::string name, const BigRational& lhs, const BigRational& rhs) {
    InequalityCheck out = check_ge(std::move(name), LogScalar::from_rational(lhs), LogScalar::from_rational(rhs));
    out.pass = lhs >= rhs;
    out.exact = true;
    return out;
}

InequalityCheck check_le_exact(std::string name, const BigRational& lhs, const BigRational& rhs) {
    InequalityCheck out = check_le(std::move(name), LogScalar::from_rational(lhs), LogScalar::from_rational(rhs));
    out.pass = lhs <= rhs;
    out.exact = true;
    return out;
}

}  // namespace rbook
