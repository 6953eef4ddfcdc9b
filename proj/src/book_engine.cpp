#include "rbook/book_engine.hpp"

#include <algorithm>

#include "rbook/errors.hpp"

namespace rbook {

void EngineParams::validate() const {
    if (t < 1) throw InvalidInput("t must be at least 1");
    if (lambda0 < -1) throw InvalidInput("lambda0 must be >= -1, got " + to_string(lambda0));
    if (delta <= 0 || delta > BigRational(1, 4)) throw InvalidInput("delta must lie in (0, 1/4], got " + to_string(delta));
    if (constants.beta <= 0 || constants.c_squared <= 0) throw InvalidInput("witness constants must be positive");
}

EngineParams EngineParams::with_defaults(std::size_t r, std::size_t t, BigRational lambda0, BigRational delta) {
    EngineParams p;
    p.t = t;
    p.lambda0 = std::move(lambda0);
    p.delta = std::move(delta);
    p.constants = WitnessConstants::for_colours(r);
    return p;
}

EngineParams EngineParams::from_mu_p(std::size_t r, std::size_t t, const BigRational& mu, const BigRational& p) {
    if (mu <= 0 || p <= 0) throw InvalidInput("mu and p must be positive");
    EngineParams out;
    out.t = t;
    out.constants = WitnessConstants::for_colours(r);
    out.delta = p / (mu * mu);
    const Interval log_inv_delta = log(Interval::from_rational(1 / out.delta));
    const Interval root = Interval::from_rational(mu) * log_inv_delta;
    const Interval lambda0 = root * root / (Interval::exact(64) * Interval::from_rational(out.constants.c_squared));
    out.lambda0 = parse_rational(lambda0.lo().to_string(40));
    return out;
}

namespace {

std::vector<BigRational> densities(const EdgeColouring& c, const VertexSet& x, const std::vector<VertexSet>& ys) {
    std::vector<BigRational> out;
    out.reserve(ys.size());
    for (Colour i = 0; i < ys.size(); ++i) out.push_back(min_density(c, x, ys[i], i));
    return out;
}

std::vector<std::size_t> sizes(const std::vector<VertexSet>& sets) {
    std::vector<std::size_t> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.size());
    return out;
}

void finish(EngineOutcome& out, EngineState state) { out.final_state = std::move(state); }

}  // namespace

EngineOutcome run_book_engine(const EdgeColouring& c, const VertexSet& x, const std::vector<VertexSet>& ys,
                              const EngineParams& params, const StepObserver& observer) {
    params.validate();
    const std::size_t r = c.r();
    if (ys.size() != r) throw InvalidInput("need exactly r = " + std::to_string(r) + " sets Y_i");
    if (x.universe() != c.n()) throw InvalidInput("X has the wrong universe size");
    if (x.empty()) throw InvalidInput("X is empty");
    for (Colour i = 0; i < r; ++i) {
        if (ys[i].universe() != c.n()) throw InvalidInput("Y_" + std::to_string(i) + " has the wrong universe size");
        if (ys[i].empty()) throw InvalidInput("Y_" + std::to_string(i) + " is empty");
    }

    EngineOutcome out;
    Trace& trace = out.trace;
    trace.header.n = c.n();
    trace.header.r = r;
    trace.header.colouring_fingerprint = c.fingerprint();
    trace.header.params = params;
    trace.header.x0 = x.size();
    trace.header.y0 = sizes(ys);
    trace.header.p_initial = densities(c, x, ys);
    for (Colour i = 0; i < r; ++i) {
        if (trace.header.p_initial[i] == 0) throw InvalidInput("p_" + std::to_string(i) + "(X, Y_" + std::to_string(i) + ") = 0");
    }
    trace.header.p0 = *std::min_element(trace.header.p_initial.begin(), trace.header.p_initial.end());
    const BigRational& p0 = trace.header.p0;
    const BigRational t_rat(static_cast<std::int64_t>(params.t));

    EngineState state;
    state.x = x;
    state.y = ys;
    state.t.assign(r, VertexSet(c.n()));
    std::vector<BigRational> p = trace.header.p_initial;

    while (true) {
        for (Colour i = 0; i < r; ++i) {
            if (state.t[i].size() == params.t) {
                out.result = EngineResult::BookFound;
                out.colour = i;
                out.spine = state.t[i];
                out.pages = state.y[i];
                if (!is_mono_book(c, out.spine, out.pages, i)) {
                    throw LemmaViolation("engine produced an invalid book in colour " + std::to_string(i));
                }
                finish(out, std::move(state));
                return out;
            }
        }
        if (state.x.empty()) {
            out.result = EngineResult::ReservoirExhausted;
            finish(out, std::move(state));
            return out;
        }
        if (std::any_of(p.begin(), p.end(), [](const BigRational& v) { return v == 0; })) {
            out.result = EngineResult::Aborted;
            out.abort_reason = "DegenerateDensity";
            finish(out, std::move(state));
            return out;
        }

        std::vector<BigRational> alphas;
        alphas.reserve(r);
        for (Colour i = 0; i < r; ++i) alphas.push_back((p[i] - p0 + params.delta) / t_rat);

        KeyStepResult key = key_lemma_step(c, state.x, state.y, alphas, params.constants);

        EngineState next = state;
        next.s = state.s + 1;
        StepRecord rec;
        rec.s = state.s;
        rec.witness_colour = key.colour;
        rec.lambda = key.lambda;
        rec.q = key.witness.q;

        if (key.lambda <= params.lambda0) {
            rec.kind = StepKind::Colour;
            rec.pivot = key.pivot;
            Colour best = 0;
            std::size_t best_size = 0;
            for (Colour j = 0; j < r; ++j) {
                const std::size_t size = intersection_size(c.neighbourhood(key.pivot, j), key.x_prime);
                if (j == 0 || size > best_size) {
                    best = j;
                    best_size = size;
                }
            }
            rec.chosen_colour = best;
            next.x = c.neighbourhood(key.pivot, best) & key.x_prime;
            next.y[best] = key.y_prime[best];
            next.t[best].insert(key.pivot);
        } else {
            rec.kind = StepKind::Boost;
            const Colour l = key.colour;
            if (key.x_prime == state.x && key.y_prime[l] == state.y[l]) {
                out.result = EngineResult::Aborted;
                out.abort_reason = "Stalled";
                finish(out, std::move(state));
                return out;
            }
            next.x = key.x_prime;
            next.y[l] = key.y_prime[l];
        }

        rec.x_size = next.x.size();
        rec.y_sizes = sizes(next.y);
        rec.t_sizes = sizes(next.t);
        if (!next.x.empty()) {
            p = densities(c, next.x, next.y);
            rec.densities = p;
        }
        trace.steps.push_back(rec);
        if (observer) observer(state, key, trace.steps.back(), next);
        state = std::move(next);
    }
}

}  // namespace rbook
