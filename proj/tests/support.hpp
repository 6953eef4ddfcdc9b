#pragma once

// Independent recomputation of geometry results straight from edge colours.
// Nothing here reuses the cached neighbourhoods or the Embedding class.

#include <string>
#include <vector>

#include "rbook/colouring.hpp"
#include "rbook/geometry.hpp"
#include "rbook/interval.hpp"
#include "rbook/rational.hpp"

namespace rbook::testing {

inline std::size_t count_colour_neighbours(const EdgeColouring& c, Vertex x, const VertexSet& y, Colour i) {
    std::size_t d = 0;
    y.for_each([&](Vertex v) {
        if (v != x && c.colour_unchecked(x, v) == i) ++d;
    });
    return d;
}

inline BigRational density(const EdgeColouring& c, const VertexSet& x, const VertexSet& y, Colour i) {
    BigRational best = -1;
    x.for_each([&](Vertex u) {
        const BigRational p = make_rational(static_cast<std::int64_t>(count_colour_neighbours(c, u, y, i)),
                                            static_cast<std::int64_t>(y.size()));
        if (best < 0 || p < best) best = p;
    });
    return best;
}

/// The `count` smallest members of N_i(x) ∩ Y.
inline VertexSet trimmed_neighbourhood(const EdgeColouring& c, Vertex x, const VertexSet& y, Colour i,
                                       std::size_t count) {
    VertexSet out(c.n());
    y.for_each([&](Vertex v) {
        if (out.size() < count && v != x && c.colour_unchecked(x, v) == i) out.insert(v);
    });
    return out;
}

/// Inner products of the sigma-embedding rebuilt from first principles.
struct NaiveEmbedding {
    std::vector<Vertex> members;
    std::vector<BigRational> p;
    // ip[i][a * |X| + b]
    std::vector<std::vector<BigRational>> ip;

    NaiveEmbedding(const EdgeColouring& c, const VertexSet& x, const std::vector<VertexSet>& ys,
                   const std::vector<BigRational>& alphas)
        : members(x.elements()) {
        const std::size_t m = members.size();
        for (Colour i = 0; i < c.r(); ++i) {
            const BigRational pi = density(c, x, ys[i], i);
            p.push_back(pi);
            const BigRational y_size(static_cast<std::int64_t>(ys[i].size()));
            const BigRational d = pi * y_size;
            const auto d_int = static_cast<std::size_t>(numerator_of(d).convert_to<long long>());
            std::vector<VertexSet> trimmed;
            for (Vertex v : members) trimmed.push_back(trimmed_neighbourhood(c, v, ys[i], i, d_int));
            std::vector<BigRational> row(m * m);
            for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t b = 0; b < m; ++b) {
                    const BigRational codeg(static_cast<std::int64_t>(intersection_size(trimmed[a], trimmed[b])));
                    // (codeg/|Y| - p^2) / (alpha p)
                    row[a * m + b] = (codeg / y_size - pi * pi) / (alphas[i] * pi);
                }
            }
            ip.push_back(std::move(row));
        }
    }

    std::size_t size() const { return members.size(); }

    std::uint64_t count_pairs(Colour l, const BigRational& lambda) const {
        const std::size_t m = size();
        std::uint64_t count = 0;
        for (std::size_t idx = 0; idx < m * m; ++idx) {
            bool ok = ip[l][idx] >= lambda;
            for (Colour j = 0; ok && j < ip.size(); ++j) {
                if (j != l && ip[j][idx] < -1) ok = false;
            }
            count += ok;
        }
        return count;
    }
};

/// Re-verifies a witness report; returns failure descriptions.
inline std::vector<std::string> witness_failures(const NaiveEmbedding& e, const WitnessReport& w,
                                                 const WitnessConstants& k) {
    std::vector<std::string> out;
    const std::uint64_t total = e.size() * e.size();
    if (w.lambda < -1) out.push_back("lambda below -1");
    if (w.total_pairs != total) out.push_back("total pair count mismatch");
    const std::uint64_t pairs = e.count_pairs(w.colour, w.lambda);
    if (pairs != w.pair_count) out.push_back("pair recount " + std::to_string(pairs) + " vs " + std::to_string(w.pair_count));
    const BigRational q = make_rational(static_cast<std::int64_t>(pairs), static_cast<std::int64_t>(total));
    if (q != w.q) out.push_back("q mismatch");
    if (!certainly_ge(Interval::from_rational(q), witness_bound(k, w.lambda))) out.push_back("q below bound");
    return out;
}

/// Re-verifies a key-lemma step against the colouring; returns failure descriptions.
inline std::vector<std::string> key_step_failures(const EdgeColouring& c, const VertexSet& x,
                                                  const std::vector<VertexSet>& ys,
                                                  const std::vector<BigRational>& alphas, const WitnessConstants& k,
                                                  const KeyStepResult& res) {
    std::vector<std::string> out;
    const std::size_t r = c.r();
    if (!x.contains(res.pivot)) out.push_back("pivot outside X");
    if (!res.x_prime.is_subset_of(x)) out.push_back("X' not inside X");
    if (res.colour >= r) out.push_back("colour out of range");
    if (res.y_prime.size() != r) {
        out.push_back("wrong number of Y' sets");
        return out;
    }
    std::vector<BigRational> p(r);
    for (Colour i = 0; i < r; ++i) {
        p[i] = density(c, x, ys[i], i);
        const BigRational expected_size = p[i] * BigRational(static_cast<std::int64_t>(ys[i].size()));
        if (BigRational(static_cast<std::int64_t>(res.y_prime[i].size())) != expected_size) {
            out.push_back("|Y'_" + std::to_string(i) + "| != p_i |Y_i|");
        }
        const auto d = static_cast<std::size_t>(numerator_of(expected_size).convert_to<long long>());
        if (res.y_prime[i] != trimmed_neighbourhood(c, res.pivot, ys[i], i, d)) {
            out.push_back("Y'_" + std::to_string(i) + " is not the trimmed neighbourhood of the pivot");
        }
    }
    // |X'| >= beta e^{-C sqrt(lambda + 1)} |X|
    const Interval needed = witness_bound(k, res.lambda) * Interval::from_integer(BigInt(x.size()));
    if (!certainly_le(needed, Interval::from_integer(BigInt(res.x_prime.size())))) out.push_back("|X'| below bound");
    if (res.x_prime.empty()) return out;
    for (Colour i = 0; i < r; ++i) {
        const BigRational after = density(c, res.x_prime, res.y_prime[i], i);
        const BigRational floor = i == res.colour ? BigRational(p[i] + res.lambda * alphas[i]) : BigRational(p[i] - alphas[i]);
        if (after < floor) {
            out.push_back("p_" + std::to_string(i) + "(X', Y'_i) = " + to_string(after) + " below " + to_string(floor));
        }
    }
    return out;
}

}  // namespace rbook::testing
