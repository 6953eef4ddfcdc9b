#include "rbook/interval.hpp"

#include <atomic>
#include <cstdlib>
#include <utility>

#include "rbook/errors.hpp"

namespace rbook {

namespace {

std::atomic<mpfr_prec_t> g_precision{0};

mpfr_prec_t precision_from_env() {
    if (const char* env = std::getenv("RF_PRECISION_BITS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long bits = std::strtol(env, &end, 10);
        if (end != nullptr && *end == '\0' && bits >= 64 && bits <= 1 << 16) return static_cast<mpfr_prec_t>(bits);
        throw InvalidInput("RF_PRECISION_BITS must be an integer in [64, 65536]");
    }
    return 128;
}

}  // namespace

mpfr_prec_t precision_bits() {
    mpfr_prec_t p = g_precision.load();
    if (p == 0) {
        p = precision_from_env();
        g_precision.store(p);
    }
    return p;
}

void set_precision_bits(mpfr_prec_t bits) {
    if (bits < MPFR_PREC_MIN || bits > 1 << 16) throw InvalidInput("precision out of range");
    g_precision.store(bits);
}

Real::Real() : Real(precision_bits()) {}

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
    owned_ = true;
}

Real::Real(const Real& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    owned_ = true;
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
    owned_ = true;
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() {
    if (owned_) mpfr_clear(value_);
}

std::string Real::to_string(int digits) const {
    char* buf = nullptr;
    const std::string fmt = "%." + std::to_string(digits) + "Rg";
    if (mpfr_asprintf(&buf, fmt.c_str(), value_) < 0) return "?";
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

Interval::Interval() = default;

Interval Interval::exact(long v) {
    Interval out;
    mpfr_set_si(out.lo_.get(), v, MPFR_RNDD);
    mpfr_set_si(out.hi_.get(), v, MPFR_RNDU);
    return out;
}

Interval Interval::from_double(double v) {
    Interval out;
    mpfr_set_d(out.lo_.get(), v, MPFR_RNDD);
    mpfr_set_d(out.hi_.get(), v, MPFR_RNDU);
    return out;
}

Interval Interval::from_integer(const BigInt& v) {
    Interval out;
    mpfr_set_z(out.lo_.get(), v.backend().data(), MPFR_RNDD);
    mpfr_set_z(out.hi_.get(), v.backend().data(), MPFR_RNDU);
    return out;
}

Interval Interval::from_rational(const BigRational& q) {
    Interval out;
    mpfr_set_q(out.lo_.get(), q.backend().data(), MPFR_RNDD);
    mpfr_set_q(out.hi_.get(), q.backend().data(), MPFR_RNDU);
    return out;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval out;
    mpfr_min(out.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_max(out.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return out;
}

Interval Interval::pi() {
    Interval out;
    mpfr_const_pi(out.lo_.get(), MPFR_RNDD);
    mpfr_const_pi(out.hi_.get(), MPFR_RNDU);
    return out;
}

double Interval::mid_double() const {
    Real m;
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m.to_double();
}

Real Interval::width() const {
    Real w;
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

bool Interval::is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }

Interval Interval::operator-() const {
    Interval out;
    mpfr_neg(out.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(out.hi_.get(), lo_.get(), MPFR_RNDU);
    return out;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval out;
    mpfr_add(out.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(out.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return out;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval out;
    mpfr_sub(out.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(out.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return out;
}

Interval operator*(const Interval& a, const Interval& b) {
    Interval out;
    Real tmp;
    bool first = true;
    for (const Real* x : {&a.lo_, &a.hi_}) {
        for (const Real* y : {&b.lo_, &b.hi_}) {
            mpfr_mul(tmp.get(), x->get(), y->get(), MPFR_RNDD);
            if (first || mpfr_less_p(tmp.get(), out.lo_.get())) mpfr_set(out.lo_.get(), tmp.get(), MPFR_RNDD);
            mpfr_mul(tmp.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || mpfr_greater_p(tmp.get(), out.hi_.get())) mpfr_set(out.hi_.get(), tmp.get(), MPFR_RNDU);
            first = false;
        }
    }
    return out;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw InvalidInput("interval division by an interval containing zero");
    Interval inv;
    // 1/b is monotone decreasing on each sign branch
    mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
    mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
    return a * inv;
}

Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.hi_.get()) < 0) throw InvalidInput("sqrt of a negative interval");
    Interval out;
    if (mpfr_sgn(a.lo_.get()) <= 0) {
        mpfr_set_zero(out.lo_.get(), 1);
    } else {
        mpfr_sqrt(out.lo_.get(), a.lo_.get(), MPFR_RNDD);
    }
    mpfr_sqrt(out.hi_.get(), a.hi_.get(), MPFR_RNDU);
    return out;
}

Interval exp(const Interval& a) {
    Interval out;
    mpfr_exp(out.lo_.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_exp(out.hi_.get(), a.hi_.get(), MPFR_RNDU);
    return out;
}

Interval log(const Interval& a) {
    if (mpfr_sgn(a.lo_.get()) <= 0) throw InvalidInput("log of an interval not strictly positive");
    Interval out;
    mpfr_log(out.lo_.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_log(out.hi_.get(), a.hi_.get(), MPFR_RNDU);
    return out;
}

Interval log1p(const Interval& a) {
    if (mpfr_cmp_si(a.lo_.get(), -1) <= 0) throw InvalidInput("log1p of an interval not above -1");
    Interval out;
    mpfr_log1p(out.lo_.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_log1p(out.hi_.get(), a.hi_.get(), MPFR_RNDU);
    return out;
}

Interval cosh(const Interval& a) {
    Interval out;
    if (a.contains_zero()) {
        mpfr_set_ui(out.lo_.get(), 1, MPFR_RNDD);
        Real c1, c2;
        mpfr_cosh(c1.get(), a.lo_.get(), MPFR_RNDU);
        mpfr_cosh(c2.get(), a.hi_.get(), MPFR_RNDU);
        mpfr_max(out.hi_.get(), c1.get(), c2.get(), MPFR_RNDU);
    } else if (mpfr_sgn(a.lo_.get()) > 0) {
        mpfr_cosh(out.lo_.get(), a.lo_.get(), MPFR_RNDD);
        mpfr_cosh(out.hi_.get(), a.hi_.get(), MPFR_RNDU);
    } else {
        mpfr_cosh(out.lo_.get(), a.hi_.get(), MPFR_RNDD);
        mpfr_cosh(out.hi_.get(), a.lo_.get(), MPFR_RNDU);
    }
    return out;
}

Interval cos(const Interval& a) {
    // cos is 1-Lipschitz: cos([lo, hi]) lies within cos(lo) +- (hi - lo), clamped to [-1, 1].
    Interval out;
    const Real w = a.width();
    mpfr_cos(out.lo_.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_sub(out.lo_.get(), out.lo_.get(), w.get(), MPFR_RNDD);
    mpfr_cos(out.hi_.get(), a.lo_.get(), MPFR_RNDU);
    mpfr_add(out.hi_.get(), out.hi_.get(), w.get(), MPFR_RNDU);
    if (mpfr_cmp_si(out.lo_.get(), -1) < 0) mpfr_set_si(out.lo_.get(), -1, MPFR_RNDD);
    if (mpfr_cmp_si(out.hi_.get(), 1) > 0) mpfr_set_si(out.hi_.get(), 1, MPFR_RNDU);
    return out;
}

bool certainly_le(const Interval& a, const Interval& b) { return mpfr_lessequal_p(a.hi_.get(), b.lo_.get()) != 0; }

bool certainly_lt(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi_.get(), b.lo_.get()) != 0; }

std::string Interval::to_string(int digits) const {
    return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

Interval Interval::from_bounds(Real lo, Real hi) {
    if (mpfr_greater_p(lo.get(), hi.get())) throw InvalidInput("interval bounds out of order");
    Interval out;
    out.lo_ = std::move(lo);
    out.hi_ = std::move(hi);
    return out;
}

Interval max(const Interval& a, const Interval& b) {
    Real lo, hi;
    mpfr_max(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
    mpfr_max(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
    return Interval::from_bounds(std::move(lo), std::move(hi));
}

Interval min(const Interval& a, const Interval& b) {
    Real lo, hi;
    mpfr_min(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
    mpfr_min(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
    return Interval::from_bounds(std::move(lo), std::move(hi));
}

}  // namespace rbook
