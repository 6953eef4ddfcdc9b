#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rbook/book_engine.hpp"
#include "rbook/colouring.hpp"

namespace rbook {

struct SearchBudget {
    std::size_t n_cap = 256;
    std::size_t k_cap = 64;
    std::uint64_t node_limit = 100'000'000;
};

struct CliqueResult {
    std::size_t size = 0;
    VertexSet witness;
    std::uint64_t nodes = 0;
};

/// Exact maximum clique of the colour-i graph, optionally restricted to `within`.
/// Bitset branch and bound with a greedy-colouring bound. Throws BudgetExceeded.
CliqueResult max_mono_clique(const EdgeColouring& c, Colour i, const SearchBudget& budget = {},
                             const std::optional<VertexSet>& within = std::nullopt);

struct BookResult {
    bool found = false;  // false when no colour has a t-clique
    std::size_t m_max = 0;
    Colour colour = 0;
    VertexSet spine;
    VertexSet pages;
    std::uint64_t nodes = 0;
};

/// Largest common neighbourhood of a monochromatic t-clique over all colours;
/// smallest colour, then lexicographically first spine, on ties. Throws BudgetExceeded.
BookResult best_book(const EdgeColouring& c, std::size_t t, const SearchBudget& budget = {});

enum class RamseyVerdict { AllColouringsContainMono, CounterexampleFound };

struct RamseyResult {
    RamseyVerdict verdict = RamseyVerdict::AllColouringsContainMono;
    std::optional<EdgeColouring> counterexample;
    std::uint64_t nodes = 0;
};

/// Decides whether every r-colouring of K_n has a colour-i K_{k_i} for some i.
/// Backtracks over edges in column order with a canonical first row (colours of
/// the edges at vertex 0 non-decreasing, and interchangeable colours used in
/// non-increasing multiplicity). Throws BudgetExceeded, InvalidInput.
RamseyResult ramsey_exhaustive(std::size_t r, const std::vector<std::size_t>& ks, std::size_t n,
                               const SearchBudget& budget = {});

struct EngineValidation {
    EngineResult result = EngineResult::ReservoirExhausted;
    bool book_valid = false;  // meaningful for BookFound only
    std::size_t m_engine = 0;
    std::size_t m_max = 0;
    double ratio = 0;  // m_engine / m_max, 0 when m_max == 0
    bool within_optimum = false;
};

/// Runs the engine on X = Y_i = V and compares a found book against best_book.
/// Throws BudgetExceeded when n exceeds 14 or the oracle budget.
EngineValidation validate_book_engine(const EdgeColouring& c, const EngineParams& params,
                                      const SearchBudget& budget = {});

}  // namespace rbook
