#include "rbook/oracle.hpp"

#include <algorithm>
#include <functional>

#include "rbook/errors.hpp"

namespace rbook {

namespace {

class CliqueSearch {
public:
    CliqueSearch(const EdgeColouring& c, Colour i, const SearchBudget& budget) : c_(c), i_(i), budget_(budget) {}

    CliqueResult run(const VertexSet& candidates) {
        best_ = VertexSet(c_.n());
        std::vector<Vertex> current;
        if (!candidates.empty()) expand(current, candidates);
        return {best_.size(), best_, nodes_};
    }

private:
    void expand(std::vector<Vertex>& current, VertexSet p) {
        if (++nodes_ > budget_.node_limit) throw BudgetExceeded("clique search exceeded its node limit");
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        colour_sort(p, order, bound);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (current.size() + bound[k] <= best_size_) return;
            const Vertex v = order[k];
            current.push_back(v);
            const VertexSet next = p & c_.neighbourhood(v, i_);
            if (next.empty()) {
                if (current.size() > best_size_) {
                    best_size_ = current.size();
                    best_ = VertexSet::from_vector(c_.n(), current);
                }
            } else {
                expand(current, next);
            }
            current.pop_back();
            p.erase(v);
        }
    }

    /// Greedy colouring of p; order lists vertices by colour class, bound[k] the class number of order[k].
    void colour_sort(const VertexSet& p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
        VertexSet uncoloured = p;
        std::size_t klass = 0;
        while (!uncoloured.empty()) {
            ++klass;
            VertexSet q = uncoloured;
            while (!q.empty()) {
                const Vertex v = q.first();
                q.erase(v);
                q -= c_.neighbourhood(v, i_);
                uncoloured.erase(v);
                order.push_back(v);
                bound.push_back(klass);
            }
        }
    }

    const EdgeColouring& c_;
    Colour i_;
    const SearchBudget& budget_;
    VertexSet best_;
    std::size_t best_size_ = 0;
    std::uint64_t nodes_ = 0;
};

void check_colour(const EdgeColouring& c, Colour i) {
    if (i >= c.r()) throw InvalidColour("colour " + std::to_string(i) + " out of range");
}

}  // namespace

CliqueResult max_mono_clique(const EdgeColouring& c, Colour i, const SearchBudget& budget,
                             const std::optional<VertexSet>& within) {
    check_colour(c, i);
    if (c.n() > budget.n_cap) throw BudgetExceeded("n = " + std::to_string(c.n()) + " exceeds the oracle cap");
    VertexSet candidates = c.all_vertices();
    if (within) candidates &= *within;
    CliqueSearch search(c, i, budget);
    return search.run(candidates);
}

BookResult best_book(const EdgeColouring& c, std::size_t t, const SearchBudget& budget) {
    if (t < 1) throw InvalidInput("best_book needs t >= 1");
    if (c.n() > budget.n_cap) throw BudgetExceeded("n = " + std::to_string(c.n()) + " exceeds the oracle cap");
    BookResult best;
    std::vector<Vertex> spine;
    const std::size_t n = c.n();

    for (Colour i = 0; i < c.r(); ++i) {
        std::function<void(const VertexSet&, Vertex)> extend = [&](const VertexSet& common, Vertex from) {
            if (++best.nodes > budget.node_limit) throw BudgetExceeded("book search exceeded its node limit");
            if (spine.size() == t) {
                if (!best.found || common.size() > best.m_max) {
                    best.found = true;
                    best.m_max = common.size();
                    best.colour = i;
                    best.spine = VertexSet::from_vector(n, spine);
                    best.pages = common;
                }
                return;
            }
            // pages only shrink as the spine grows
            if (best.found && common.size() <= best.m_max) return;
            for (Vertex v = from; v < n; ++v) {
                if (!spine.empty() && !common.contains(v)) continue;
                spine.push_back(v);
                VertexSet next = common & c.neighbourhood(v, i);
                extend(next, v + 1);
                spine.pop_back();
            }
        };
        extend(c.all_vertices(), 0);
    }
    return best;
}

namespace {

class RamseySearch {
public:
    RamseySearch(std::size_t r, const std::vector<std::size_t>& ks, std::size_t n, const SearchBudget& budget)
        : r_(r), ks_(ks), n_(n), budget_(budget), col_(n * n, 0), nb_(r * n, 0) {
        for (std::size_t v = 1; v < n; ++v) {
            for (std::size_t u = 0; u < v; ++u) edges_.emplace_back(u, v);
        }
    }

    bool search(std::size_t e) {
        if (e == edges_.size()) return true;
        if (++nodes_ > budget_.node_limit) throw BudgetExceeded("Ramsey search exceeded its node limit");
        const auto [u, v] = edges_[e];
        for (Colour c = 0; c < r_; ++c) {
            if (u == 0 && v >= 2 && c < col_[v - 1]) continue;  // first row non-decreasing
            if (creates_clique(u, v, c)) continue;
            assign(u, v, c);
            const bool ok = !(u == 0 && v == n_ - 1) || row_multiplicities_canonical();
            if (ok && search(e + 1)) return true;
            unassign(u, v, c);
        }
        return false;
    }

    EdgeColouring colouring() const {
        return EdgeColouring::from_function(n_, r_, [&](Vertex a, Vertex b) { return col_[a * n_ + b]; });
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t& mask(Colour c, std::size_t x) { return nb_[c * n_ + x]; }
    std::uint64_t mask(Colour c, std::size_t x) const { return nb_[c * n_ + x]; }

    void assign(std::size_t u, std::size_t v, Colour c) {
        col_[u * n_ + v] = col_[v * n_ + u] = c;
        mask(c, u) |= std::uint64_t{1} << v;
        mask(c, v) |= std::uint64_t{1} << u;
    }

    void unassign(std::size_t u, std::size_t v, Colour c) {
        mask(c, u) &= ~(std::uint64_t{1} << v);
        mask(c, v) &= ~(std::uint64_t{1} << u);
    }

    /// Every earlier vertex w < u has both (w, u) and (w, v) coloured in column order.
    bool creates_clique(std::size_t u, std::size_t v, Colour c) const {
        if (ks_[c] <= 2) return true;
        const std::uint64_t below = (std::uint64_t{1} << u) - 1;
        return has_clique(mask(c, u) & mask(c, v) & below, ks_[c] - 2, c);
    }

    bool has_clique(std::uint64_t cand, std::size_t need, Colour c) const {
        if (need == 0) return true;
        if (static_cast<std::size_t>(std::popcount(cand)) < need) return false;
        while (cand != 0) {
            const int w = std::countr_zero(cand);
            cand &= cand - 1;
            if (has_clique(cand & mask(c, static_cast<std::size_t>(w)), need - 1, c)) return true;
        }
        return false;
    }

    bool row_multiplicities_canonical() const {
        std::vector<std::size_t> count(r_, 0);
        for (std::size_t v = 1; v < n_; ++v) ++count[col_[v]];
        for (Colour a = 0; a < r_; ++a) {
            for (Colour b = a + 1; b < r_; ++b) {
                if (ks_[a] == ks_[b] && count[a] < count[b]) return false;
            }
        }
        return true;
    }

    std::size_t r_;
    const std::vector<std::size_t>& ks_;
    std::size_t n_;
    const SearchBudget& budget_;
    std::vector<Colour> col_;
    std::vector<std::uint64_t> nb_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

RamseyResult ramsey_exhaustive(std::size_t r, const std::vector<std::size_t>& ks, std::size_t n,
                               const SearchBudget& budget) {
    if (r < 1 || r > EdgeColouring::max_colours) throw InvalidInput("colour count must lie in [1, 64]");
    if (ks.size() != r) throw InvalidInput("need one clique size per colour");
    if (n < 1) throw InvalidInput("n must be at least 1");
    if (n > 64 || n > budget.n_cap) throw BudgetExceeded("n = " + std::to_string(n) + " is beyond exhaustive search");
    RamseyResult out;
    if (std::any_of(ks.begin(), ks.end(), [](std::size_t k) { return k <= 1; })) return out;
    RamseySearch search(r, ks, n, budget);
    if (search.search(0)) {
        out.verdict = RamseyVerdict::CounterexampleFound;
        out.counterexample = search.colouring();
    }
    out.nodes = search.nodes();
    return out;
}

EngineValidation validate_book_engine(const EdgeColouring& c, const EngineParams& params, const SearchBudget& budget) {
    if (c.n() > 14) throw BudgetExceeded("validate_book_engine is limited to n <= 14");
    const VertexSet all = c.all_vertices();
    const EngineOutcome outcome = run_book_engine(c, all, std::vector<VertexSet>(c.r(), all), params);
    EngineValidation v;
    v.result = outcome.result;
    if (outcome.result != EngineResult::BookFound) return v;
    v.book_valid = is_mono_book(c, outcome.spine, outcome.pages, outcome.colour) && outcome.spine.size() == params.t;
    v.m_engine = outcome.pages.size();
    const BookResult oracle = best_book(c, params.t, budget);
    v.m_max = oracle.m_max;
    v.within_optimum = oracle.found && v.m_engine <= v.m_max;
    v.ratio = v.m_max == 0 ? 0.0 : static_cast<double>(v.m_engine) / static_cast<double>(v.m_max);
    return v;
}

}  // namespace rbook
