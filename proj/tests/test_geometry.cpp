#include <gtest/gtest.h>

#include "rbook/errors.hpp"
#include "rbook/geometry.hpp"
#include "support.hpp"

using namespace rbook;
using rbook::testing::NaiveEmbedding;

namespace {

const BigRational tenth = make_rational(1, 10);

Embedding c5_embedding() {
    const EdgeColouring c5 = pentagon_colouring();
    const VertexSet all = c5.all_vertices();
    return build_embedding(c5, all, {all, all}, {tenth, tenth});
}

}  // namespace

TEST(Density, PentagonValues) {
    const EdgeColouring c5 = pentagon_colouring();
    const VertexSet all = c5.all_vertices();
    EXPECT_EQ(min_density(c5, all, all, 0), make_rational(2, 5));
    EXPECT_EQ(min_density(c5, VertexSet(5, {0}), VertexSet(5, {1, 4}), 0), BigRational(1));
    EXPECT_EQ(min_density(c5, VertexSet(5, {3}), VertexSet(5, {3}), 0), BigRational(0));
    EXPECT_THROW(min_density(c5, VertexSet(5), all, 0), EmptySet);
}

TEST(Embedding, PentagonInnerProducts) {
    const Embedding e = c5_embedding();
    for (Colour i = 0; i < 2; ++i) {
        EXPECT_EQ(e.colour(i).p, make_rational(2, 5));
        for (Vertex x = 0; x < 5; ++x) EXPECT_EQ(e.trimmed(i, x).size(), 2u);
    }
    EXPECT_EQ(e.trimmed(0, 0), VertexSet(5, {1, 4}));
    EXPECT_EQ(e.trimmed(0, 2), VertexSet(5, {1, 3}));
    EXPECT_EQ(inner_product(e, 0, 0, 1), BigRational(-4));
    EXPECT_EQ(inner_product(e, 0, 0, 2), BigRational(1));
    // self inner product (1 - p) / alpha
    for (Vertex x = 0; x < 5; ++x) EXPECT_EQ(inner_product(e, 1, x, x), BigRational(6));
}

TEST(Embedding, CodegreeEquivalence) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const std::size_t r = 2 + seed % 2;
        const EdgeColouring c = random_colouring(18 + seed, r, seed);
        const VertexSet all = c.all_vertices();
        const std::vector<VertexSet> ys(r, all);
        const std::vector<BigRational> alphas(r, make_rational(1, 7 + static_cast<std::int64_t>(seed)));
        const Embedding e = build_embedding(c, all, ys, alphas);
        const NaiveEmbedding naive(c, all, ys, alphas);
        for (Colour i = 0; i < r; ++i) {
            const auto& cd = e.colour(i);
            const BigRational ysz(static_cast<std::int64_t>(cd.y_size));
            for (std::size_t a = 0; a < naive.size(); ++a) {
                for (std::size_t b = 0; b < naive.size(); ++b) {
                    const Vertex x = naive.members[a], y = naive.members[b];
                    const BigRational ip = e.inner_product(i, x, y);
                    ASSERT_EQ(ip, naive.ip[i][a * naive.size() + b]);
                    const BigRational codeg(static_cast<std::int64_t>(intersection_size(e.trimmed(i, x), e.trimmed(i, y))));
                    for (const BigRational& lambda : {BigRational(-1), BigRational(0), make_rational(1, 2), BigRational(3)}) {
                        EXPECT_EQ(ip >= lambda, codeg >= (cd.p + lambda * alphas[i]) * cd.p * ysz);
                    }
                }
            }
        }
    }
}

TEST(Embedding, Errors) {
    const EdgeColouring c5 = pentagon_colouring();
    const VertexSet all = c5.all_vertices();
    EXPECT_THROW(build_embedding(c5, all, {all}, {tenth}), InvalidInput);
    EXPECT_THROW(build_embedding(c5, all, {all, all}, {tenth, BigRational(0)}), InvalidInput);
    EXPECT_THROW(build_embedding(c5, VertexSet(5), {all, all}, {tenth, tenth}), EmptySet);
    const EdgeColouring mono = constant_colouring(4, 2);
    EXPECT_THROW(build_embedding(mono, mono.all_vertices(), {mono.all_vertices(), mono.all_vertices()}, {tenth, tenth}),
                 DegenerateDensity);
}

TEST(Witness, ConstantsForTwoColours) {
    const WitnessConstants k = WitnessConstants::for_colours(2);
    EXPECT_EQ(k.beta, make_rational(1, 6561));
    EXPECT_EQ(k.c_squared, BigRational(128));
}

TEST(Witness, PentagonRecount) {
    const Embedding e = c5_embedding();
    const WitnessConstants k = WitnessConstants::for_colours(2);
    const WitnessReport w = find_lambda_witness(e, k);
    const EdgeColouring c5 = pentagon_colouring();
    const VertexSet all = c5.all_vertices();
    const NaiveEmbedding naive(c5, all, {all, all}, {tenth, tenth});
    EXPECT_TRUE(rbook::testing::witness_failures(naive, w, k).empty());
    EXPECT_EQ(w.total_pairs, 25u);
    // The diagonal alone carries 5/25; every self inner product is 6, so lambda = 6 is reached.
    EXPECT_EQ(w.lambda, BigRational(6));
    EXPECT_EQ(w.colour, 0);
}

TEST(Witness, SingletonUsesSelfInnerProduct) {
    const EdgeColouring c = random_colouring(9, 2, 3);
    const VertexSet x(9, {4});
    const VertexSet all = c.all_vertices();
    const Embedding e = build_embedding(c, x, {all, all}, {tenth, tenth});
    const WitnessReport w = find_lambda_witness(e, WitnessConstants::for_colours(2));
    EXPECT_EQ(w.q, BigRational(1));
    const BigRational self0 = e.inner_product(0, 4, 4), self1 = e.inner_product(1, 4, 4);
    EXPECT_EQ(w.lambda, self0 >= self1 ? self0 : self1);
}

TEST(Witness, LambdaIsMaximal) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const EdgeColouring c = random_colouring(14, 2, 100 + seed);
        const VertexSet all = c.all_vertices();
        const std::vector<BigRational> alphas{make_rational(1, 9), make_rational(1, 9)};
        const WitnessConstants k = WitnessConstants::for_colours(2);
        const WitnessReport w = find_lambda_witness(build_embedding(c, all, {all, all}, alphas), k);
        const NaiveEmbedding naive(c, all, {all, all}, alphas);
        EXPECT_TRUE(rbook::testing::witness_failures(naive, w, k).empty());
        const auto total = static_cast<std::int64_t>(naive.size() * naive.size());
        for (Colour l = 0; l < 2; ++l) {
            for (const auto& value : naive.ip[l]) {
                if (value < w.lambda || (value == w.lambda && l >= w.colour)) continue;
                const auto pairs = static_cast<std::int64_t>(naive.count_pairs(l, value));
                EXPECT_FALSE(certainly_ge(Interval::from_rational(make_rational(pairs, total)), witness_bound(k, value)))
                    << "larger lambda " << to_string(value) << " also qualifies";
            }
        }
    }
}

TEST(Witness, BoundIsDecreasingInLambda) {
    const WitnessConstants k = WitnessConstants::for_colours(3);
    Interval prev = witness_bound(k, BigRational(-1));
    EXPECT_FALSE(certainly_lt(prev, Interval::from_rational(k.beta)));
    EXPECT_FALSE(certainly_lt(Interval::from_rational(k.beta), prev));
    EXPECT_LT(prev.width().to_double(), 1e-35);
    for (int l = 0; l < 20; ++l) {
        const Interval cur = witness_bound(k, BigRational(l));
        EXPECT_TRUE(certainly_le(cur, prev));
        prev = cur;
    }
}

TEST(KeyStep, PentagonPostconditions) {
    const EdgeColouring c5 = pentagon_colouring();
    const VertexSet all = c5.all_vertices();
    const WitnessConstants k = WitnessConstants::for_colours(2);
    const std::vector<BigRational> alphas{tenth, tenth};
    const KeyStepResult res = key_lemma_step(c5, all, {all, all}, alphas, k);
    EXPECT_TRUE(rbook::testing::key_step_failures(c5, all, {all, all}, alphas, k, res).empty());
    EXPECT_EQ(res.pivot, 0u);
    EXPECT_EQ(res.x_prime, VertexSet(5, {0}));
}

TEST(KeyStep, TriangleSingleColour) {
    const EdgeColouring tri = constant_colouring(3, 1);
    const VertexSet all = tri.all_vertices();
    const WitnessConstants k = WitnessConstants::for_colours(1);
    const std::vector<BigRational> alphas{make_rational(1, 4)};
    const KeyStepResult res = key_lemma_step(tri, all, {all}, alphas, k);
    EXPECT_EQ(res.p[0], make_rational(2, 3));
    EXPECT_EQ(res.y_prime[0].size(), 2u);
    EXPECT_TRUE(rbook::testing::key_step_failures(tri, all, {all}, alphas, k, res).empty());
}

TEST(KeyStep, TwoPointInstance) {
    const EdgeColouring c5 = pentagon_colouring();
    const VertexSet x(5, {0, 2});
    const VertexSet all = c5.all_vertices();
    const WitnessConstants k = WitnessConstants::for_colours(2);
    const std::vector<BigRational> alphas{tenth, tenth};
    const KeyStepResult res = key_lemma_step(c5, x, {all, all}, alphas, k);
    EXPECT_TRUE(rbook::testing::key_step_failures(c5, x, {all, all}, alphas, k, res).empty());
    if (!res.x_prime.empty()) {
        EXPECT_GE(rbook::testing::density(c5, res.x_prime, res.y_prime[res.colour], res.colour),
                  res.p[res.colour] + res.lambda * alphas[res.colour]);
    }
}

TEST(KeyStep, RandomSoundnessAndMembership) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const std::size_t r = 2 + seed % 2;
        const EdgeColouring c = random_colouring(20 + 3 * seed, r, 500 + seed);
        const VertexSet all = c.all_vertices();
        std::vector<VertexSet> ys;
        for (Colour i = 0; i < r; ++i) {
            VertexSet y(c.n());
            for (Vertex v = 0; v < c.n(); ++v) {
                if ((v + i) % 3 != 0) y.insert(v);
            }
            ys.push_back(y);
        }
        bool degenerate = false;
        for (Colour i = 0; i < r; ++i) degenerate = degenerate || rbook::testing::density(c, all, ys[i], i) == 0;
        if (degenerate) continue;
        std::vector<BigRational> alphas;
        for (Colour i = 0; i < r; ++i) alphas.push_back(make_rational(1, 5 + static_cast<std::int64_t>(i + seed % 4)));
        const WitnessConstants k = WitnessConstants::for_colours(r);
        const KeyStepResult res = key_lemma_step(c, all, ys, alphas, k);
        const auto failures = rbook::testing::key_step_failures(c, all, ys, alphas, k, res);
        EXPECT_TRUE(failures.empty()) << "seed " << seed << ": " << failures.front();

        const NaiveEmbedding naive(c, all, ys, alphas);
        const std::size_t m = naive.size();
        const std::size_t a = res.pivot;  // X = V, so position equals label
        VertexSet expected(c.n());
        for (std::size_t b = 0; b < m; ++b) {
            bool in = naive.ip[res.colour][a * m + b] >= res.lambda;
            for (Colour j = 0; j < r; ++j) {
                if (j != res.colour && naive.ip[j][a * m + b] < -1) in = false;
            }
            if (in) expected.insert(static_cast<Vertex>(b));
        }
        EXPECT_EQ(res.x_prime, expected);
        EXPECT_TRUE(rbook::testing::witness_failures(naive, res.witness, k).empty());
        EXPECT_GE(BigRational(static_cast<std::int64_t>(res.x_prime.size())),
                  res.witness.q * BigRational(static_cast<std::int64_t>(m)) - 1);
    }
}
