#include "rbook/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "rbook/errors.hpp"

namespace rbook {

namespace {

BigRational q(std::int64_t v) { return BigRational(v); }

BigRational pow2(std::int64_t e) { return rbook::pow(BigRational(2), e); }

LogScalar ls(const BigRational& v) { return LogScalar::from_rational(v); }

LogScalar ls_exp(const BigRational& v) { return LogScalar::exp(Interval::from_rational(v)); }

InequalityCheck check_eq_exact(std::string name, const BigRational& lhs, const BigRational& rhs) {
    InequalityCheck out = check_ge_exact(std::move(name), lhs, rhs);
    out.relation = "==";
    out.pass = lhs == rhs;
    return out;
}

BigInt multinomial(const std::vector<std::size_t>& parts) {
    const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    BigInt out = factorial(total);
    for (std::size_t k : parts) out /= factorial(k);
    return out;
}

}  // namespace

BigInt es_upper(const std::vector<std::size_t>& ks) {
    if (ks.empty()) throw InvalidInput("need at least one clique size");
    if (std::any_of(ks.begin(), ks.end(), [](std::size_t k) { return k < 1; })) {
        throw InvalidInput("clique sizes must be at least 1");
    }
    return multinomial(ks);
}

BigInt es_upper_crude(std::size_t r, const std::vector<std::size_t>& ks) {
    const std::size_t total = std::accumulate(ks.begin(), ks.end(), std::size_t{0});
    return rbook::pow(BigInt(r), static_cast<std::uint64_t>(total));
}

bool BoundReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.pass; });
}

const InequalityCheck* BoundReport::find(const std::string& check_name) const {
    for (const auto& c : checks) {
        if (c.name == check_name) return &c;
    }
    return nullptr;
}

BigInt appendix_lhs(std::size_t k, std::size_t t, std::size_t r) {
    std::vector<std::size_t> parts(r - 1, k);
    parts.push_back(k - t);
    return multinomial(parts);
}

BoundReport appendix_check(std::size_t k, std::size_t t, std::size_t r) {
    if (t < 3 || t > k) throw InvalidInput("need 3 <= t <= k");
    if (r < 1) throw InvalidInput("need r >= 1");
    const auto ki = static_cast<std::int64_t>(k), ti = static_cast<std::int64_t>(t), ri = static_cast<std::int64_t>(r);
    BoundReport rep;
    rep.name = "appendix";

    const BigInt lhs = appendix_lhs(k, t, r);
    const BigInt central = multinomial(std::vector<std::size_t>(r, k));
    const BigRational exponent = BigRational((ri - 1) * ti * ti, 3 * ri * ki);
    const LogScalar r_ls = ls(q(ri));

    BigRational product = 1;
    BigRational rewritten = 1;
    for (std::int64_t i = 0; i < ti; ++i) {
        product *= BigRational(ki - i, ri * ki - i);
        rewritten *= 1 - BigRational((ri - 1) * i, ri * ki - i);
    }
    rewritten *= rbook::pow(q(ri), -ti);

    rep.checks.push_back(check_le("bound", LogScalar::from_integer(lhs),
                                  LogScalar::exp(-Interval::from_rational(exponent)) * pow(r_ls, q(ri * ki - ti))));
    rep.checks.push_back(check_eq_exact("product_identity", BigRational(lhs) / BigRational(central), product));
    rep.checks.push_back(check_eq_exact("product_rewrite", product, rewritten));
    rep.checks.push_back(check_le("product_bound", ls(rewritten),
                                  LogScalar::exp(-Interval::from_rational(exponent)) * pow(r_ls, q(-ti))));
    rep.checks.push_back(check_le_exact("central_multinomial", BigRational(central),
                                        BigRational(rbook::pow(BigInt(r), static_cast<std::uint64_t>(r * k)))));
    return rep;
}

BoundReport thm_book_hypotheses(const BigRational& p, const BigRational& mu, const BigRational& t,
                                const BigRational& m, std::size_t r, const LogScalar& size_x,
                                const std::vector<LogScalar>& size_ys) {
    if (p <= 0 || p > 1) throw InvalidInput("p must lie in (0, 1]");
    if (t < 1 || m < 1) throw InvalidInput("t and m must be at least 1");
    if (mu <= 0) throw InvalidInput("mu must be positive");
    const auto ri = static_cast<std::int64_t>(r);
    const BigRational r3 = q(ri * ri * ri);
    BoundReport rep;
    rep.name = "book_hypotheses";
    rep.checks.push_back(check_ge_exact("mu_min", mu, 1024 * r3));
    rep.checks.push_back(check_ge_exact("t_min", t, rbook::pow(mu, 5) / p));
    rep.checks.push_back(check_ge("x_size", size_x, pow(ls(mu * mu / p), mu * q(ri) * t)));
    const LogScalar y_threshold = ls_exp(8192 * r3 * t / (mu * mu)) * pow(ls(1 / p), t) * ls(m);
    for (std::size_t i = 0; i < size_ys.size(); ++i) {
        rep.checks.push_back(check_ge("y_size_" + std::to_string(i), size_ys[i], y_threshold));
    }
    return rep;
}

ChainConstants ChainConstants::for_colours(std::size_t r) {
    const BigRational rq(static_cast<std::int64_t>(r));
    ChainConstants c;
    c.delta = pow2(-160) * rbook::pow(rq, -12);
    c.eps = pow2(-50) * rbook::pow(rq, -4);
    c.mu = pow2(30) * rbook::pow(rq, 3);
    c.k = pow2(160) * rbook::pow(rq, 16);
    c.t = pow2(-40) * rbook::pow(rq, -3) * c.k;
    c.p = 1 / rq - 2 * c.eps;
    return c;
}

bool ChainReport::pass() const {
    return std::all_of(links.begin(), links.end(), [](const BoundReport& l) { return l.pass(); });
}

ChainReport thm51_chain(std::size_t r) {
    if (r < 2) throw InvalidInput("the chain needs r >= 2");
    const ChainConstants c = ChainConstants::for_colours(r);
    const BigRational rq(static_cast<std::int64_t>(r));
    const BigRational r3 = rbook::pow(rq, 3);
    const BigRational rk = rq * c.k;
    const LogScalar r_ls = ls(rq);
    ChainReport rep;
    rep.r = r;

    BoundReport i{"i", {}};
    const BigRational t_needed = rbook::pow(c.mu, 5) / c.p;
    i.checks.push_back(check_ge_exact("t_ge_mu5_over_p", c.t, t_needed));
    const BigRational k_needed = pow2(40) * r3 * t_needed;
    rep.link_i_min_log2_k = (log(Interval::from_rational(k_needed)) / log(Interval::exact(2))).mid_double();
    rep.links.push_back(std::move(i));

    BoundReport ii{"ii", {}};
    const LogScalar r_rk = pow(r_ls, rk);
    ii.checks.push_back(check_ge("n_ge_r_pow_half_rk", ls_exp(-c.delta * c.k) * r_rk, pow(r_ls, rk / 2)));
    ii.checks.push_back(check_le_exact("removed_le_quarter_rk", c.eps * c.eps * c.k, rk / 4));
    ii.checks.push_back(check_ge("x_ge_r_pow_quarter_rk", pow(ls((1 + c.eps) / rq), rk / 4) * pow(r_ls, rk / 2),
                                 pow(r_ls, rk / 4)));
    const LogScalar middle = pow(ls(pow2(61) * rbook::pow(rq, 7)), pow2(-10) * rk);
    ii.checks.push_back(check_ge("r_pow_quarter_rk", pow(r_ls, rk / 4), middle));
    ii.checks.push_back(check_ge("x_threshold", middle, pow(ls(c.mu * c.mu / c.p), c.mu * rq * c.t)));
    rep.links.push_back(std::move(ii));

    BoundReport iii{"iii", {}};
    const BigRational mu_term = 8192 * r3 / (c.mu * c.mu);
    const BigRational eps_term = 4 * c.eps * rq;
    iii.checks.push_back(check_eq_exact("t_over_8k", c.t / (8 * c.k), pow2(-43) / r3));
    iii.checks.push_back(check_ge_exact("powers_of_two", pow2(-43), pow2(-47) + pow2(-48)));
    iii.checks.push_back(check_eq_exact("mu_term", mu_term, pow2(-47) / r3));
    iii.checks.push_back(check_eq_exact("eps_term", eps_term, pow2(-48) / r3));
    iii.checks.push_back(check_ge_exact("t_over_8k_ge_sum", c.t / (8 * c.k), mu_term + eps_term));
    rep.links.push_back(std::move(iii));

    BoundReport iv{"iv", {}};
    iv.checks.push_back(check_le_exact("delta", c.delta, pow2(-10) * c.t * c.t / (c.k * c.k)));
    rep.links.push_back(std::move(iv));

    BoundReport v{"v", {}};
    v.checks.push_back(check_ge("p_ge_exp", ls(c.p), ls_exp(-3 * c.eps * rq) / r_ls));
    rep.links.push_back(std::move(v));

    // The common factor r^{rk} is cancelled from both sides of the end-to-end check.
    BoundReport vi{"vi", {}};
    const BigRational t2k = c.t * c.t / c.k;
    vi.checks.push_back(check_le_exact("delta_le_t2_over_24k2", c.delta, t2k / (24 * c.k)));
    vi.checks.push_back(check_ge_exact("appendix_exponent", (rq - 1) / (3 * rq), BigRational(1, 6)));
    vi.checks.push_back(check_ge("p_power", pow(ls(rq * c.p), c.t), ls_exp(-3 * c.eps * rq * c.t)));
    vi.checks.push_back(check_le_exact("removed_le_eps_t", c.eps * c.eps * c.k, c.eps * c.t));
    vi.checks.push_back(check_ge("regularised_factor", pow(ls((1 + c.eps) / rq), c.eps * c.t), ls_exp(-c.eps * rq * c.t)));
    vi.checks.push_back(check_ge_exact("terminal_exponent", t2k / 8 - 4 * c.eps * rq * c.t, mu_term * c.t));
    const LogScalar y_lower = pow(ls((1 + c.eps) / rq), c.eps * c.t) * ls_exp(-c.delta * c.k);
    const LogScalar y_needed = pow(ls_exp(mu_term) / ls(c.p), c.t) * ls_exp(-t2k / 6) * pow(r_ls, -c.t);
    vi.checks.push_back(check_ge("end_to_end", y_lower, y_needed));
    rep.links.push_back(std::move(vi));
    return rep;
}

BookTargetBounds book_target_bounds(std::size_t r, const BigRational& k, const BigRational& t) {
    if (r < 1) throw InvalidInput("need r >= 1");
    if (k < 1 || t < 0 || t > k) throw InvalidInput("need 0 <= t <= k and k >= 1");
    const BigRational rq(static_cast<std::int64_t>(r));
    const LogScalar r_ls = ls(rq);
    const BigRational delta = pow2(-160) * rbook::pow(rq, -12);
    BookTargetBounds out;
    out.m_coefficient = ls_exp(-t * t / (8 * k)) * pow(r_ls, -t);
    out.es_bound = ls_exp(-t * t / (6 * k)) * pow(r_ls, rq * k - t);
    out.n_min = ls_exp(-delta * k) * pow(r_ls, rq * k);
    out.relation = check_ge("target_ge_es_bound", out.m_coefficient * out.n_min, out.es_bound);
    return out;
}

}  // namespace rbook
