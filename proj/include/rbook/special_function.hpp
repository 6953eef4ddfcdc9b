#pragma once

#include <span>
#include <vector>

#include "rbook/interval.hpp"

namespace rbook {

/// cosh(sqrt(x)) continued to x < 0 as cos(sqrt(-x)); an entire function
/// with Taylor series sum x^n / (2n)!.
Interval cosh_sqrt(const Interval& x);

/// sum_{n < terms} x^n / (2n)!, evaluated in interval arithmetic (truncation error excluded).
Interval cosh_sqrt_series(const Interval& x, unsigned terms = 40);

/// f(x_1..x_r) = sum_j x_j prod_{i != j} (2 + cosh sqrt(x_i)).
Interval special_f(std::span<const double> xs);
Interval special_f(std::span<const Interval> xs);

/// f with each cosh sqrt replaced by its truncated series.
Interval special_f_series(std::span<const double> xs, unsigned terms = 40);

enum class SpecialBranch { UpperBoundHolds, NegativeCaseHolds };

struct SpecialBoundsResult {
    SpecialBranch branch = SpecialBranch::UpperBoundHolds;
    Interval f;
    Interval bound;  // 3^r r exp(sum sqrt(x_i + 3r)), or -1
    /// Lower end of (bound - f): >= 0 means the inequality holds under adverse rounding.
    double margin = 0;
};

/// If every x_i >= -3r, verifies f <= 3^r r exp(sum_i sqrt(x_i + 3r)); otherwise
/// verifies f <= -1. Throws LemmaViolation when the checked inequality fails.
SpecialBoundsResult check_special_bounds(std::span<const double> xs);

}  // namespace rbook
