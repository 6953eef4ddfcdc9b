#include "rbook/special_function.hpp"

#include "rbook/errors.hpp"

namespace rbook {

Interval cosh_sqrt(const Interval& x) {
    if (mpfr_sgn(x.lo().get()) >= 0) return cosh(sqrt(x));
    if (mpfr_sgn(x.hi().get()) <= 0) return cos(sqrt(-x));
    // straddles zero: both pieces meet at 1 and are monotone away from it
    return Interval::hull(cosh(sqrt(max(x, Interval::exact(0)))), cos(sqrt(-min(x, Interval::exact(0)))));
}

Interval cosh_sqrt_series(const Interval& x, unsigned terms) {
    Interval sum = Interval::exact(0);
    Interval term = Interval::exact(1);
    for (unsigned n = 0; n < terms; ++n) {
        if (n > 0) {
            const long denom = static_cast<long>((2 * n - 1) * (2 * n));
            term = term * x / Interval::exact(denom);
        }
        sum += term;
    }
    return sum;
}

namespace {

template <class G>
Interval f_with(std::span<const Interval> xs, G&& g) {
    const std::size_t r = xs.size();
    std::vector<Interval> factors;
    factors.reserve(r);
    for (const auto& x : xs) factors.push_back(Interval::exact(2) + g(x));
    Interval total = Interval::exact(0);
    for (std::size_t j = 0; j < r; ++j) {
        Interval term = xs[j];
        for (std::size_t i = 0; i < r; ++i) {
            if (i != j) term *= factors[i];
        }
        total += term;
    }
    return total;
}

std::vector<Interval> to_intervals(std::span<const double> xs) {
    std::vector<Interval> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(Interval::from_double(x));
    return out;
}

}  // namespace

Interval special_f(std::span<const Interval> xs) {
    return f_with(xs, [](const Interval& x) { return cosh_sqrt(x); });
}

Interval special_f(std::span<const double> xs) {
    const auto iv = to_intervals(xs);
    return special_f(std::span<const Interval>(iv));
}

Interval special_f_series(std::span<const double> xs, unsigned terms) {
    const auto iv = to_intervals(xs);
    return f_with(std::span<const Interval>(iv), [terms](const Interval& x) { return cosh_sqrt_series(x, terms); });
}

SpecialBoundsResult check_special_bounds(std::span<const double> xs) {
    const std::size_t r = xs.size();
    if (r == 0) throw InvalidInput("special_f needs at least one coordinate");
    const double floor_value = -3.0 * static_cast<double>(r);
    bool all_above = true;
    for (double x : xs) all_above = all_above && x >= floor_value;

    SpecialBoundsResult out;
    out.f = special_f(xs);
    if (all_above) {
        out.branch = SpecialBranch::UpperBoundHolds;
        Interval exponent = Interval::exact(0);
        const Interval shift = Interval::exact(3 * static_cast<long>(r));
        for (double x : xs) exponent += sqrt(Interval::from_double(x) + shift);
        Interval pow3 = Interval::exact(1);
        for (std::size_t i = 0; i < r; ++i) pow3 *= Interval::exact(3);
        out.bound = pow3 * Interval::exact(static_cast<long>(r)) * exp(exponent);
    } else {
        out.branch = SpecialBranch::NegativeCaseHolds;
        out.bound = Interval::exact(-1);
    }
    const Interval gap = out.bound - out.f;
    out.margin = gap.lo_double();
    if (!certainly_le(out.f, out.bound)) {
        throw LemmaViolation("special function bound fails: f = " + out.f.to_string() + ", bound = " + out.bound.to_string());
    }
    return out;
}

}  // namespace rbook
