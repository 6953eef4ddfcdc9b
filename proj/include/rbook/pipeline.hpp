#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbook/book_engine.hpp"
#include "rbook/colouring.hpp"
#include "rbook/log_scalar.hpp"
#include "rbook/oracle.hpp"
#include "rbook/rational.hpp"

namespace rbook {

struct RegularisationResult {
    std::vector<VertexSet> s;  // S_1..S_r, pairwise disjoint
    VertexSet w;
    BigRational eps;

    std::size_t removed() const;  // sum |S_i|
};

/// Erdős–Szekeres regularisation. While some vertex x of the current set V has
/// |N_l(x) ∩ V| < (1/r - eps)|V| - 1 (smallest x, then smallest l), move x into
/// S_j for the colour j != l of largest |N_j(x) ∩ V| (smallest j on ties) and
/// recurse into N_j(x) ∩ V. Stops when |V| <= r, r = 1, or no vertex violates.
RegularisationResult regularise(const EdgeColouring& c, const BigRational& eps);

/// Returns a description of each violated output invariant; empty when all hold.
std::vector<std::string> regularisation_failures(const EdgeColouring& c, const RegularisationResult& res);

struct Lemma53Report {
    std::vector<InequalityCheck> checks;
    bool pass = false;
};

/// R_r(k - s_1, ..., k - s_r) <= r^{rk - s} <= e^{-eps^3 k / 2} ((1 + eps)/r)^s r^{rk},
/// reduced to (1 + eps)^s >= e^{eps^3 k / 2}, together with the proof's
/// (1 + eps)^{eps^2 k} >= e^{eps^3 k / 2}. Throws InvalidInput on failed hypotheses.
Lemma53Report lemma53_check(std::size_t r, std::size_t k, const BigRational& eps, const std::vector<std::size_t>& s);

struct DriverConfig {
    BigRational eps = BigRational(1, 20);
    std::size_t t = 1;
    std::optional<BigRational> delta;
    std::optional<BigRational> lambda0;
    /// With delta or lambda0 unset, both come from mu and p = 1/r - 2 eps.
    std::optional<BigRational> mu;
    /// Escape branch when sum |S_i| >= this; default eps^2 k.
    std::optional<BigRational> escape_threshold;
    /// Splits W uniformly into X, Y_1..Y_r instead of X = Y_i = W.
    std::optional<std::uint64_t> partition_seed;
    SearchBudget budget;
};

enum class DriverPhase { Trivial, Escape, BookSkipped, BookPhase };

struct DriverReport {
    DriverPhase phase = DriverPhase::BookPhase;
    std::size_t k = 0;
    std::optional<Colour> clique_colour;
    std::optional<VertexSet> clique;  // verified monochromatic K_k
    RegularisationResult regularisation;
    EngineParams params;
    std::optional<EngineOutcome> engine;
    std::size_t page_clique_size = 0;  // largest clique found inside the pages
    std::string note;
};

/// Desk-scale assembly of the full argument: regularise, then either the escape
/// branch (clique search for K_{k - |S_i|} in W) or the book algorithm on W
/// followed by a search for K_{k - t} among the pages. Throws ScaleError for k > 6.
DriverReport desk_ramsey_driver(const EdgeColouring& c, std::size_t k, const DriverConfig& config = {});

}  // namespace rbook
