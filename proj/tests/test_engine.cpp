#include <algorithm>

#include <gtest/gtest.h>

#include "rbook/book_engine.hpp"
#include "rbook/errors.hpp"
#include "rbook/oracle.hpp"

using namespace rbook;

namespace {

bool failed(const MonitorSummary& m, const std::string& name) {
    return std::any_of(m.failures.begin(), m.failures.end(), [&](const MonitorFailure& f) { return f.lemma == name; });
}

const MonitorReport* report(const MonitorSummary& m, const std::string& name) {
    for (const auto& r : m.reports) {
        if (r.lemma == name) return &r;
    }
    return nullptr;
}

/// Checks the state invariants after every round from the colouring itself.
struct SoundnessObserver {
    explicit SoundnessObserver(const EdgeColouring& col) : c(&col) {}

    const EdgeColouring* c;
    std::size_t rounds = 0;
    std::vector<std::string> problems;

    void operator()(const EngineState& before, const KeyStepResult& key, const StepRecord& rec, const EngineState& after) {
        ++rounds;
        const std::size_t r = c->r();
        std::size_t y_changed = 0, t_grown = 0;
        for (Colour i = 0; i < r; ++i) {
            if (!is_mono_clique(*c, after.t[i], i)) problems.push_back("spine not monochromatic");
            if (after.t[i].intersects(after.y[i])) problems.push_back("spine meets pages");
            after.t[i].for_each([&](Vertex u) {
                if (!after.y[i].is_subset_of(c->neighbourhood(u, i))) problems.push_back("Y_i outside N_i(T_i)");
                if (!after.x.is_subset_of(c->neighbourhood(u, i))) problems.push_back("X outside N_i(T_i)");
            });
            if (after.y[i] != before.y[i]) ++y_changed;
            if (after.t[i] != before.t[i]) {
                ++t_grown;
                if (after.t[i].size() != before.t[i].size() + 1 || !before.t[i].is_subset_of(after.t[i])) {
                    problems.push_back("spine grew by more than one vertex");
                }
            }
        }
        if (y_changed > 1) problems.push_back("more than one Y_i changed");
        if (t_grown > 1) problems.push_back("more than one spine grew");
        if (!after.x.is_subset_of(before.x)) problems.push_back("X grew");
        if (rec.kind == StepKind::Colour) {
            if (t_grown != 1) problems.push_back("colour step without spine growth");
            const Colour j = *rec.chosen_colour;
            const std::size_t got = intersection_size(c->neighbourhood(key.pivot, j), key.x_prime);
            if (r * got + 1 < key.x_prime.size()) problems.push_back("pigeonhole guarantee fails");
            if (rec.lambda != key.lambda) problems.push_back("lambda mismatch");
        } else if (t_grown != 0) {
            problems.push_back("boost step grew a spine");
        }
    }
};

Trace fabricated_header(std::size_t r, std::size_t t, BigRational lambda0, BigRational delta) {
    Trace tr;
    tr.header.n = 100;
    tr.header.r = r;
    tr.header.params = EngineParams::with_defaults(r, t, std::move(lambda0), std::move(delta));
    tr.header.p0 = BigRational(1, 2);
    tr.header.x0 = 100;
    tr.header.y0.assign(r, 100);
    tr.header.p_initial.assign(r, BigRational(1, 2));
    return tr;
}

StepRecord fabricated_step(std::size_t s, StepKind kind, std::size_t r, BigRational lambda, std::size_t x_size,
                           std::size_t y_size, BigRational p) {
    StepRecord rec;
    rec.s = s;
    rec.kind = kind;
    rec.witness_colour = 0;
    if (kind == StepKind::Colour) {
        rec.pivot = static_cast<Vertex>(s);
        rec.chosen_colour = 0;
    }
    rec.lambda = std::move(lambda);
    rec.q = BigRational(1, 2);
    rec.x_size = x_size;
    rec.y_sizes.assign(r, y_size);
    rec.t_sizes.assign(r, 0);
    rec.densities = std::vector<BigRational>(r, p);
    return rec;
}

}  // namespace

TEST(Params, Validation) {
    EXPECT_THROW(EngineParams::with_defaults(2, 0, 1, BigRational(1, 8)).validate(), InvalidInput);
    EXPECT_THROW(EngineParams::with_defaults(2, 1, -2, BigRational(1, 8)).validate(), InvalidInput);
    EXPECT_THROW(EngineParams::with_defaults(2, 1, 1, BigRational(1, 2)).validate(), InvalidInput);
    EXPECT_THROW(EngineParams::with_defaults(2, 1, 1, BigRational(0)).validate(), InvalidInput);
    EXPECT_NO_THROW(EngineParams::with_defaults(2, 1, -1, BigRational(1, 4)).validate());
}

TEST(Params, FromMuAndP) {
    const EngineParams p = EngineParams::from_mu_p(2, 5, BigRational(8), BigRational(1, 2));
    EXPECT_EQ(p.delta, BigRational(1, 128));
    // (8 log 128)^2 / (64 * 128) = (log 128)^2 / 128
    EXPECT_NEAR(to_double(p.lambda0), std::log(128.0) * std::log(128.0) / 128.0, 1e-12);
}

TEST(Engine, PentagonFindsSingleVertexSpine) {
    const EdgeColouring c5 = pentagon_colouring();
    const VertexSet all = c5.all_vertices();
    const EngineParams params = EngineParams::with_defaults(2, 1, 1000, BigRational(1, 8));
    const EngineOutcome out = run_book_engine(c5, all, {all, all}, params);
    ASSERT_EQ(out.result, EngineResult::BookFound);
    EXPECT_EQ(out.spine.size(), 1u);
    EXPECT_TRUE(is_mono_book(c5, out.spine, out.pages, out.colour));
    EXPECT_TRUE(out.pages.is_subset_of(c5.neighbourhood(out.spine.first(), out.colour)));
    EXPECT_TRUE(run_all_monitors(out.trace).ok());
}

TEST(Engine, SingletonReservoir) {
    const EdgeColouring c = random_colouring(12, 2, 8);
    const VertexSet all = c.all_vertices();
    const EngineParams params = EngineParams::with_defaults(2, 1, 1000, BigRational(1, 8));
    const EngineOutcome out = run_book_engine(c, VertexSet(12, {5}), {all, all}, params);
    ASSERT_EQ(out.result, EngineResult::BookFound);
    ASSERT_EQ(out.trace.steps.size(), 1u);
    EXPECT_EQ(out.spine, VertexSet(12, {5}));
    EXPECT_EQ(*out.trace.steps[0].pivot, 5u);
    EXPECT_TRUE(is_mono_book(c, out.spine, out.pages, out.colour));
}

TEST(Engine, RandomSixtyVerticesPassesMonitors) {
    const EdgeColouring c = random_colouring(60, 2, 2026);
    const VertexSet all = c.all_vertices();
    const EngineParams params = EngineParams::with_defaults(2, 3, 10, BigRational(1, 16));
    SoundnessObserver obs(c);
    const EngineOutcome out = run_book_engine(c, all, {all, all}, params, std::ref(obs));
    EXPECT_TRUE(obs.problems.empty()) << obs.problems.front();
    EXPECT_EQ(obs.rounds, out.trace.steps.size());
    if (out.result == EngineResult::BookFound) {
        EXPECT_TRUE(is_mono_book(c, out.spine, out.pages, out.colour));
    }
    const MonitorSummary m = run_all_monitors(out.trace);
    EXPECT_TRUE(m.ok()) << m.failures.front().message;
}

TEST(Engine, StateSoundnessAcrossSeeds) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t r = 2 + seed % 2;
        const EdgeColouring c = random_colouring(20 + seed, r, seed * 7 + 1);
        const VertexSet all = c.all_vertices();
        const EngineParams params =
            EngineParams::with_defaults(r, 1 + seed % 4, seed % 3 == 0 ? BigRational(-1) : BigRational(5),
                                        BigRational(1, 8));
        SoundnessObserver obs(c);
        const EngineOutcome out = run_book_engine(c, all, std::vector<VertexSet>(r, all), params, std::ref(obs));
        EXPECT_TRUE(obs.problems.empty()) << "seed " << seed << ": " << obs.problems.front();
        if (out.result == EngineResult::BookFound) {
            EXPECT_EQ(out.spine.size(), params.t);
            EXPECT_TRUE(is_mono_book(c, out.spine, out.pages, out.colour));
        }
        EXPECT_TRUE(run_all_monitors(out.trace).ok()) << "seed " << seed;
    }
}

TEST(Engine, SmallThresholdExercisesBoostMonitors) {
    const EdgeColouring c = random_colouring(40, 2, 77);
    const VertexSet all = c.all_vertices();
    const EngineParams params = EngineParams::with_defaults(2, 4, 1, BigRational(1, 4));
    const EngineOutcome out = run_book_engine(c, all, {all, all}, params);
    const MonitorSummary m = run_all_monitors(out.trace);
    EXPECT_TRUE(m.ok());
    ASSERT_NE(report(m, "boost_count"), nullptr);
    EXPECT_TRUE(report(m, "boost_count")->applicable);
    EXPECT_TRUE(report(m, "boost_lambda_sum")->applicable);
    EXPECT_TRUE(report(m, "page_size")->applicable);
}

TEST(Engine, PreconditionErrors) {
    const EdgeColouring c5 = pentagon_colouring();
    const VertexSet all = c5.all_vertices();
    const EngineParams params = EngineParams::with_defaults(2, 1, 1, BigRational(1, 8));
    EXPECT_THROW(run_book_engine(c5, VertexSet(5), {all, all}, params), InvalidInput);
    EXPECT_THROW(run_book_engine(c5, all, {all}, params), InvalidInput);
    const EdgeColouring mono = constant_colouring(5, 2);
    EXPECT_THROW(run_book_engine(mono, all, {all, all}, params), InvalidInput);
}

TEST(Engine, DeterministicTrace) {
    const EdgeColouring c = random_colouring(50, 3, 4242);
    const VertexSet all = c.all_vertices();
    const EngineParams params = EngineParams::with_defaults(3, 2, 5, BigRational(1, 16));
    const std::string a = trace_to_jsonl(run_book_engine(c, all, {all, all, all}, params));
    const std::string b = trace_to_jsonl(run_book_engine(c, all, {all, all, all}, params));
    EXPECT_EQ(a, b);
}

TEST(Engine, ValidationAgainstOracle) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const EdgeColouring c = random_colouring(10 + seed % 4, 2, seed + 31);
        const EngineValidation v =
            validate_book_engine(c, EngineParams::with_defaults(2, 1 + seed % 2, 1000, BigRational(1, 8)));
        if (v.result == EngineResult::BookFound) {
            EXPECT_TRUE(v.book_valid);
            EXPECT_TRUE(v.within_optimum);
            EXPECT_LE(v.m_engine, v.m_max);
        }
    }
    EXPECT_THROW(validate_book_engine(random_colouring(15, 2, 1), EngineParams::with_defaults(2, 1, 1, BigRational(1, 8))),
                 BudgetExceeded);
}

TEST(Trace, RoundTrip) {
    const EdgeColouring c = random_colouring(45, 2, 9);
    const VertexSet all = c.all_vertices();
    const EngineOutcome out = run_book_engine(c, all, {all, all}, EngineParams::with_defaults(2, 4, 1, BigRational(1, 4)));
    const std::string text = trace_to_jsonl(out.trace);
    const Trace back = trace_from_jsonl(trace_to_jsonl(out));
    EXPECT_EQ(trace_to_jsonl(back), text);
    EXPECT_EQ(back.header.colouring_fingerprint, c.fingerprint());
    EXPECT_EQ(back.steps.size(), out.trace.steps.size());
}

TEST(Trace, ParseErrors) {
    EXPECT_THROW(trace_from_jsonl("{not json"), ParseError);
    EXPECT_THROW(trace_from_jsonl("{\"type\":\"step\",\"s\":0}\n"), ParseError);
    try {
        trace_from_jsonl("\n{\"type\":\"header\"}\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(Monitors, InitialStateOnlyTracePasses) {
    const Trace tr = fabricated_header(2, 2, 1, BigRational(1, 8));
    const MonitorSummary m = run_all_monitors(tr);
    EXPECT_TRUE(m.ok());
    EXPECT_EQ(m.reports.size(), 6u);
}

TEST(Monitors, DensityViolationsAreNamed) {
    Trace tr = fabricated_header(2, 2, 1, BigRational(1, 8));
    tr.steps.push_back(fabricated_step(0, StepKind::Colour, 2, BigRational(0), 90, 100, BigRational(0)));
    const MonitorSummary m = run_all_monitors(tr);
    EXPECT_TRUE(failed(m, "density_lower_bound"));
    EXPECT_TRUE(failed(m, "density_minimum"));
    EXPECT_THROW(check_lemma_41(tr), LemmaViolation);
    EXPECT_THROW(check_lemma_42(tr), LemmaViolation);
}

TEST(Monitors, BoostCountViolation) {
    Trace tr = fabricated_header(2, 2, 1, BigRational(1, 4));
    for (std::size_t s = 0; s < 12; ++s) {
        tr.steps.push_back(fabricated_step(s, StepKind::Boost, 2, BigRational(0), 100, 100, BigRational(1, 2)));
    }
    EXPECT_THROW(check_lemma_43(tr), LemmaViolation);
    EXPECT_TRUE(failed(run_all_monitors(tr), "boost_count"));
    tr.steps.resize(11);
    EXPECT_NO_THROW(check_lemma_43(tr));
}

TEST(Monitors, PageSizeViolation) {
    Trace tr = fabricated_header(2, 2, 1, BigRational(1, 8));
    tr.steps.push_back(fabricated_step(0, StepKind::Colour, 2, BigRational(0), 90, 1, BigRational(1, 2)));
    const MonitorSummary m = run_all_monitors(tr);
    EXPECT_TRUE(failed(m, "page_size"));
    EXPECT_FALSE(failed(m, "density_lower_bound"));
}

TEST(Monitors, ReservoirViolation) {
    Trace tr = fabricated_header(2, 1, 0, BigRational(1, 8));
    tr.header.x0 = 1000;
    tr.header.params.constants.beta = 1;
    tr.header.params.constants.c_squared = 0;
    tr.steps.push_back(fabricated_step(0, StepKind::Colour, 2, BigRational(0), 0, 100, BigRational(1, 2)));
    const MonitorSummary m = run_all_monitors(tr);
    EXPECT_TRUE(failed(m, "reservoir_size"));
    EXPECT_FALSE(failed(m, "boost_lambda_sum"));
    EXPECT_THROW(check_lemma_45_46(tr), LemmaViolation);
}

TEST(Monitors, LambdaSumViolation) {
    Trace tr = fabricated_header(2, 4, 1, BigRational(1, 4));
    tr.steps.push_back(fabricated_step(0, StepKind::Boost, 2, BigRational(10000), 100, 100, BigRational(1, 2)));
    const MonitorSummary m = run_all_monitors(tr);
    EXPECT_TRUE(failed(m, "boost_lambda_sum"));
    EXPECT_THROW(check_lemma_45_46(tr), LemmaViolation);
}

TEST(Monitors, SkipsWhenHypothesesFail) {
    const Trace tr = fabricated_header(2, 1, 10, BigRational(1, 16));
    const MonitorSummary m = run_all_monitors(tr);
    EXPECT_FALSE(report(m, "density_minimum")->applicable);
    EXPECT_FALSE(report(m, "boost_count")->applicable);
    EXPECT_FALSE(report(m, "page_size")->applicable);
    EXPECT_FALSE(report(m, "boost_lambda_sum")->applicable);
    EXPECT_TRUE(report(m, "density_lower_bound")->applicable);
    EXPECT_TRUE(report(m, "reservoir_size")->applicable);
}
