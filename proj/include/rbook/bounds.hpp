#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rbook/log_scalar.hpp"
#include "rbook/rational.hpp"

namespace rbook {

/// Multinomial (k_1 + ... + k_r choose k_1, ..., k_r), exactly.
BigInt es_upper(const std::vector<std::size_t>& ks);
/// The crude form r^{k_1 + ... + k_r}.
BigInt es_upper_crude(std::size_t r, const std::vector<std::size_t>& ks);

/// A named group of verified inequalities.
struct BoundReport {
    std::string name;
    std::vector<InequalityCheck> checks;

    bool pass() const;
    const InequalityCheck* find(const std::string& check_name) const;
};

/// (rk - t choose k, ..., k, k - t) <= e^{-(r-1) t^2 / 3rk} r^{rk - t}, for 3 <= t <= k,
/// plus the exact identity (rk - t choose k, ..., k - t) / (rk choose k, ..., k) = prod_{i<t} (k - i)/(rk - i)
/// and (rk choose k, ..., k) <= r^{rk}. Throws InvalidInput outside the hypotheses.
BoundReport appendix_check(std::size_t k, std::size_t t, std::size_t r);

/// Multinomial (rk - t choose k, ..., k, k - t) with r - 1 parts equal to k.
BigInt appendix_lhs(std::size_t k, std::size_t t, std::size_t r);

/// The four hypotheses of the book theorem: mu >= 2^10 r^3, t >= mu^5 / p,
/// |X| >= (mu^2/p)^{mu r t} and |Y_i| >= (e^{2^13 r^3 / mu^2} / p)^t m.
BoundReport thm_book_hypotheses(const BigRational& p, const BigRational& mu, const BigRational& t,
                                const BigRational& m, std::size_t r, const LogScalar& size_x,
                                const std::vector<LogScalar>& size_ys);

/// Constants of the final Ramsey bound at colour count r.
struct ChainConstants {
    BigRational delta;  // 2^-160 r^-12
    BigRational eps;    // 2^-50 r^-4
    BigRational mu;     // 2^30 r^3
    BigRational k;      // 2^160 r^16, the smallest admissible k
    BigRational t;      // 2^-40 r^-3 k
    BigRational p;      // 1/r - 2 eps

    static ChainConstants for_colours(std::size_t r);
};

/// Every finite inequality in the deduction of the Ramsey bound from the book
/// theorem, at k = 2^160 r^16. Checks are grouped by link:
///   i    t >= mu^5 / p
///   ii   the |X| chain
///   iii  t/8k = 2^-43 r^-3 >= 2^-47 r^-3 + 2^-48 r^-3 = 2^13 r^3 / mu^2 + 4 eps r
///   iv   delta <= 2^-10 t^2 / k^2
///   v    p = 1/r - 2 eps >= e^{-3 eps r} / r
///   vi   the |Y_i| chain, ending in |Y_i| >= (e^{2^13 r^3/mu^2}/p)^t m
/// Requires r >= 2.
struct ChainReport {
    std::size_t r = 0;
    std::vector<BoundReport> links;
    /// Smallest k (as log2) for which link i holds with t = 2^-40 r^-3 k.
    double link_i_min_log2_k = 0;

    bool pass() const;
};

ChainReport thm51_chain(std::size_t r);

struct BookTargetBounds {
    LogScalar m_coefficient;  // e^{-t^2/8k} r^{-t}; the page target is this times n
    LogScalar es_bound;       // e^{-t^2/6k} r^{rk - t}
    LogScalar n_min;          // e^{-delta k} r^{rk} with delta = 2^-160 r^-12
    /// m_coefficient * n_min >= es_bound.
    InequalityCheck relation;
};

/// Requires 0 <= t <= k and r >= 1.
BookTargetBounds book_target_bounds(std::size_t r, const BigRational& k, const BigRational& t);

}  // namespace rbook
