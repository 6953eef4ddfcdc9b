#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rbook/colouring.hpp"
#include "rbook/geometry.hpp"
#include "rbook/rational.hpp"

namespace rbook {

struct EngineParams {
    std::size_t t = 1;          // target spine size
    BigRational lambda0 = 0;    // colour step iff lambda <= lambda0
    BigRational delta = BigRational(1, 8);
    WitnessConstants constants;

    /// Throws InvalidInput unless t >= 1, lambda0 >= -1 and delta in (0, 1/4].
    void validate() const;

    /// beta = 3^{-4r}, C = 4 r^{3/2}.
    static EngineParams with_defaults(std::size_t r, std::size_t t, BigRational lambda0, BigRational delta);

    /// delta = p / mu^2 and lambda0 = (mu log(1/delta) / (8C))^2, the latter rounded
    /// to 40 significant decimal digits.
    static EngineParams from_mu_p(std::size_t r, std::size_t t, const BigRational& mu, const BigRational& p);
};

enum class StepKind { Colour, Boost };

struct StepRecord {
    std::size_t s = 0;  // round index; the state after this round is state s + 1
    StepKind kind = StepKind::Colour;
    std::optional<Vertex> pivot;          // colour steps only
    Colour witness_colour = 0;            // l(s)
    std::optional<Colour> chosen_colour;  // j, colour steps only
    BigRational lambda;
    BigRational q;  // witness pair probability
    std::size_t x_size = 0;
    std::vector<std::size_t> y_sizes;
    std::vector<std::size_t> t_sizes;
    /// p_i after the round; absent when X became empty.
    std::optional<std::vector<BigRational>> densities;
};

struct TraceHeader {
    std::size_t n = 0;
    std::size_t r = 0;
    std::uint64_t colouring_fingerprint = 0;
    EngineParams params;
    BigRational p0;
    std::size_t x0 = 0;
    std::vector<std::size_t> y0;
    std::vector<BigRational> p_initial;
};

struct Trace {
    TraceHeader header;
    std::vector<StepRecord> steps;
};

struct EngineState {
    std::size_t s = 0;
    VertexSet x;
    std::vector<VertexSet> y;
    std::vector<VertexSet> t;
};

enum class EngineResult { BookFound, ReservoirExhausted, Aborted };

struct EngineOutcome {
    EngineResult result = EngineResult::ReservoirExhausted;
    Colour colour = 0;  // BookFound only
    VertexSet spine;
    VertexSet pages;
    std::string abort_reason;  // Aborted only: DegenerateDensity or Stalled
    EngineState final_state;
    Trace trace;
};

using StepObserver = std::function<void(const EngineState& before, const KeyStepResult& key, const StepRecord& record,
                                        const EngineState& after)>;

/// The multicolour book algorithm. Repeats key-lemma rounds until X is empty
/// or some spine reaches t vertices. Throws InvalidInput on bad preconditions
/// (empty sets, some p_i(X, Y_i) = 0, invalid params); a density collapsing to
/// zero mid-run ends the run as Aborted with the partial trace.
EngineOutcome run_book_engine(const EdgeColouring& c, const VertexSet& x, const std::vector<VertexSet>& ys,
                              const EngineParams& params, const StepObserver& observer = {});

// ---- invariant monitors over completed traces ----

struct MonitorReport {
    std::string lemma;
    bool applicable = true;
    std::string skipped_because;
    std::size_t checks = 0;
};

/// p_i(s) - p0 + delta >= delta (1 - 1/t)^t prod_{j in B_i(s)} (1 + lambda(j)/t), exact.
MonitorReport check_lemma_41(const Trace& trace);
/// t >= 2: p_i(s) >= p0 - 3 delta / 4 and alpha_i(s) >= delta / 4t, exact.
MonitorReport check_lemma_42(const Trace& trace);
/// t >= lambda0 > 0, delta <= 1/4: |B_i(s)| <= 4 log(1/delta) t / lambda0.
MonitorReport check_lemma_43(const Trace& trace);
/// t >= 2, p0 > 3 delta / 4: |Y_i(s)| >= (p0 - 3 delta / 4)^{t + |B_i(s)|} |Y_i(0)|, exact.
MonitorReport check_lemma_44(const Trace& trace);
/// |X(s)| >= eps^{rt + |B(s)|} exp(-C sum sqrt(lambda(j) + 1)) |X(0)| - rt, and when
/// t >= lambda0 / delta > 0, delta <= 1/4: sum sqrt(lambda(j)) <= 7 r log(1/delta) t / sqrt(lambda0).
std::vector<MonitorReport> check_lemma_45_46(const Trace& trace);

struct MonitorFailure {
    std::string lemma;
    std::string message;
};

struct MonitorSummary {
    std::vector<MonitorReport> reports;
    std::vector<MonitorFailure> failures;
    bool ok() const noexcept { return failures.empty(); }
};

/// Runs every monitor, collecting LemmaViolations instead of throwing.
MonitorSummary run_all_monitors(const Trace& trace);

// ---- trace file (JSON lines) ----

/// Header line, one line per StepRecord, then an outcome line. Rationals are "num/den" strings.
std::string trace_to_jsonl(const EngineOutcome& outcome);
std::string trace_to_jsonl(const Trace& trace);
/// Reads header and step lines; other line types are ignored. Throws ParseError.
Trace trace_from_jsonl(const std::string& text);

}  // namespace rbook
