#include <algorithm>

#include "rbook/book_engine.hpp"
#include "rbook/errors.hpp"

namespace rbook {

namespace {

/// Per-state view of a trace: state 0 comes from the header, state s > 0 from step s - 1.
struct StateView {
    std::size_t x_size = 0;
    const std::vector<std::size_t>* y_sizes = nullptr;
    const std::vector<BigRational>* p = nullptr;  // null when X was empty
};

std::vector<StateView> states(const Trace& trace) {
    std::vector<StateView> out;
    out.reserve(trace.steps.size() + 1);
    out.push_back({trace.header.x0, &trace.header.y0, &trace.header.p_initial});
    for (const auto& rec : trace.steps) {
        out.push_back({rec.x_size, &rec.y_sizes, rec.densities ? &*rec.densities : nullptr});
    }
    return out;
}

bool is_boost_in(const StepRecord& rec, Colour i) { return rec.kind == StepKind::Boost && rec.witness_colour == i; }

[[noreturn]] void violation(const std::string& what, std::size_t s, std::optional<Colour> i, const std::string& lhs,
                            const std::string& rhs) {
    std::string where = "s = " + std::to_string(s);
    if (i) where += ", i = " + std::to_string(*i);
    throw LemmaViolation(what + " fails at " + where + ": lhs = " + lhs + ", rhs = " + rhs);
}

BigRational t_of(const Trace& trace) { return BigRational(static_cast<std::int64_t>(trace.header.params.t)); }

}  // namespace

MonitorReport check_lemma_41(const Trace& trace) {
    MonitorReport rep;
    rep.lemma = "density_lower_bound";
    const auto& prm = trace.header.params;
    const BigRational t = t_of(trace);
    const BigRational base = prm.delta * rbook::pow(1 - 1 / t, static_cast<std::int64_t>(prm.t));
    const auto view = states(trace);
    const std::size_t r = trace.header.r;
    for (Colour i = 0; i < r; ++i) {
        BigRational rhs = base;
        for (std::size_t s = 0; s < view.size(); ++s) {
            if (s > 0 && is_boost_in(trace.steps[s - 1], i)) rhs *= 1 + trace.steps[s - 1].lambda / t;
            if (!view[s].p) continue;
            const BigRational lhs = (*view[s].p)[i] - trace.header.p0 + prm.delta;
            ++rep.checks;
            if (lhs < rhs) violation("density lower bound", s, i, to_string(lhs), to_string(rhs));
        }
    }
    return rep;
}

MonitorReport check_lemma_42(const Trace& trace) {
    MonitorReport rep;
    rep.lemma = "density_minimum";
    const auto& prm = trace.header.params;
    if (prm.t < 2) {
        rep.applicable = false;
        rep.skipped_because = "t < 2";
        return rep;
    }
    const BigRational t = t_of(trace);
    const BigRational p_floor = trace.header.p0 - 3 * prm.delta / 4;
    const BigRational alpha_floor = prm.delta / (4 * t);
    const auto view = states(trace);
    for (std::size_t s = 0; s < view.size(); ++s) {
        if (!view[s].p) continue;
        for (Colour i = 0; i < trace.header.r; ++i) {
            const BigRational& p = (*view[s].p)[i];
            const BigRational alpha = (p - trace.header.p0 + prm.delta) / t;
            rep.checks += 2;
            if (p < p_floor) violation("density minimum", s, i, to_string(p), to_string(p_floor));
            if (alpha < alpha_floor) violation("alpha minimum", s, i, to_string(alpha), to_string(alpha_floor));
        }
    }
    return rep;
}

MonitorReport check_lemma_43(const Trace& trace) {
    MonitorReport rep;
    rep.lemma = "boost_count";
    const auto& prm = trace.header.params;
    const BigRational t = t_of(trace);
    if (!(prm.lambda0 > 0) || t < prm.lambda0 || prm.delta > BigRational(1, 4)) {
        rep.applicable = false;
        rep.skipped_because = "requires t >= lambda0 > 0 and delta <= 1/4";
        return rep;
    }
    const Interval bound = Interval::exact(4) * log(Interval::from_rational(1 / prm.delta)) * Interval::from_rational(t) /
                           Interval::from_rational(prm.lambda0);
    for (Colour i = 0; i < trace.header.r; ++i) {
        long count = 0;
        for (std::size_t s = 0; s <= trace.steps.size(); ++s) {
            if (s > 0 && is_boost_in(trace.steps[s - 1], i)) ++count;
            ++rep.checks;
            if (!certainly_le(Interval::exact(count), bound)) {
                violation("boost count bound", s, i, std::to_string(count), bound.to_string());
            }
        }
    }
    return rep;
}

MonitorReport check_lemma_44(const Trace& trace) {
    MonitorReport rep;
    rep.lemma = "page_size";
    const auto& prm = trace.header.params;
    const BigRational base = trace.header.p0 - 3 * prm.delta / 4;
    if (prm.t < 2 || base <= 0) {
        rep.applicable = false;
        rep.skipped_because = "requires t >= 2 and p0 > 3 delta / 4";
        return rep;
    }
    const auto view = states(trace);
    for (Colour i = 0; i < trace.header.r; ++i) {
        std::int64_t boosts = 0;
        const BigRational y0(static_cast<std::int64_t>(trace.header.y0[i]));
        for (std::size_t s = 0; s < view.size(); ++s) {
            if (s > 0 && is_boost_in(trace.steps[s - 1], i)) ++boosts;
            const BigRational rhs = rbook::pow(base, static_cast<std::int64_t>(prm.t) + boosts) * y0;
            const BigRational lhs(static_cast<std::int64_t>((*view[s].y_sizes)[i]));
            ++rep.checks;
            if (lhs < rhs) violation("page size bound", s, i, to_string(lhs), to_string(rhs));
        }
    }
    return rep;
}

namespace {

struct ReservoirOutcome {
    MonitorReport reservoir;
    MonitorReport lambdas;
    std::optional<std::string> reservoir_failure;
    std::optional<std::string> lambda_failure;
};

std::string violation_text(const std::string& what, std::size_t s, const std::string& lhs, const std::string& rhs) {
    try {
        violation(what, s, std::nullopt, lhs, rhs);
    } catch (const LemmaViolation& e) {
        return e.what();
    }
}

ReservoirOutcome reservoir_monitors(const Trace& trace) {
    ReservoirOutcome out;
    MonitorReport& reservoir = out.reservoir;
    reservoir.lemma = "reservoir_size";
    MonitorReport& lambdas = out.lambdas;
    lambdas.lemma = "boost_lambda_sum";
    const auto& prm = trace.header.params;
    const auto r = static_cast<long>(trace.header.r);
    const auto t = static_cast<long>(prm.t);
    const BigRational t_rat = t_of(trace);
    const Interval rt = Interval::exact(r * t);

    // log eps = log beta - log r - C sqrt(lambda0 + 1)
    const Interval log_eps = log(Interval::from_rational(prm.constants.beta)) - log(Interval::exact(r)) -
                             c_sqrt_lambda_plus_one(prm.constants, prm.lambda0);
    const Interval log_x0 = log(Interval::exact(static_cast<long>(trace.header.x0)));

    const bool sum_applicable = prm.lambda0 > 0 && t_rat >= prm.lambda0 / prm.delta && prm.delta <= BigRational(1, 4);
    Interval sum_bound;
    if (sum_applicable) {
        sum_bound = Interval::exact(7 * r) * log(Interval::from_rational(1 / prm.delta)) * Interval::exact(t) /
                    sqrt(Interval::from_rational(prm.lambda0));
    } else {
        lambdas.applicable = false;
        lambdas.skipped_because = "requires t >= lambda0 / delta > 0 and delta <= 1/4";
    }

    long boosts = 0;
    Interval c_sum = Interval::exact(0);     // C sum sqrt(lambda(j) + 1)
    Interval sqrt_sum = Interval::exact(0);  // sum sqrt(lambda(j))
    for (std::size_t s = 0; s <= trace.steps.size(); ++s) {
        if (s > 0 && trace.steps[s - 1].kind == StepKind::Boost) {
            const BigRational& lambda = trace.steps[s - 1].lambda;
            ++boosts;
            c_sum += c_sqrt_lambda_plus_one(prm.constants, lambda);
            sqrt_sum += sqrt(Interval::from_rational(lambda));
        }
        const std::size_t x_size = s == 0 ? trace.header.x0 : trace.steps[s - 1].x_size;
        const Interval log_rhs = Interval::exact(r * t + boosts) * log_eps - c_sum + log_x0;
        const Interval rhs = exp(log_rhs) - rt;
        const Interval lhs = Interval::exact(static_cast<long>(x_size));
        ++reservoir.checks;
        if (!out.reservoir_failure && !certainly_ge(lhs, rhs)) {
            out.reservoir_failure = violation_text("reservoir size bound", s, lhs.to_string(), rhs.to_string());
        }
        if (sum_applicable) {
            ++lambdas.checks;
            if (!out.lambda_failure && !certainly_le(sqrt_sum, sum_bound)) {
                out.lambda_failure =
                    violation_text("boost lambda sum bound", s, sqrt_sum.to_string(), sum_bound.to_string());
            }
        }
    }
    return out;
}

}  // namespace

std::vector<MonitorReport> check_lemma_45_46(const Trace& trace) {
    ReservoirOutcome out = reservoir_monitors(trace);
    if (out.reservoir_failure) throw LemmaViolation(*out.reservoir_failure);
    if (out.lambda_failure) throw LemmaViolation(*out.lambda_failure);
    return {std::move(out.reservoir), std::move(out.lambdas)};
}

MonitorSummary run_all_monitors(const Trace& trace) {
    MonitorSummary out;
    auto guard = [&](const std::string& name, auto&& f) {
        try {
            f();
        } catch (const LemmaViolation& e) {
            out.failures.push_back({name, e.what()});
        }
    };
    guard("density_lower_bound", [&] { out.reports.push_back(check_lemma_41(trace)); });
    guard("density_minimum", [&] { out.reports.push_back(check_lemma_42(trace)); });
    guard("boost_count", [&] { out.reports.push_back(check_lemma_43(trace)); });
    guard("page_size", [&] { out.reports.push_back(check_lemma_44(trace)); });
    ReservoirOutcome res = reservoir_monitors(trace);
    if (res.reservoir_failure) {
        out.failures.push_back({res.reservoir.lemma, *res.reservoir_failure});
    } else {
        out.reports.push_back(std::move(res.reservoir));
    }
    if (res.lambda_failure) {
        out.failures.push_back({res.lambdas.lemma, *res.lambda_failure});
    } else {
        out.reports.push_back(std::move(res.lambdas));
    }
    return out;
}

}  // namespace rbook
