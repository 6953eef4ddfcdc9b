#include <gtest/gtest.h>

#include "rbook/errors.hpp"
#include "rbook/oracle.hpp"
#include "rbook/pipeline.hpp"

using namespace rbook;

namespace {

EdgeColouring star_heavy() {
    return EdgeColouring::from_function(8, 2, [](Vertex u, Vertex) -> Colour { return u == 0 ? 0 : 1; });
}

}  // namespace

TEST(Regularise, PentagonIsAlreadyRegular) {
    const EdgeColouring c5 = pentagon_colouring();
    const RegularisationResult res = regularise(c5, make_rational(1, 20));
    EXPECT_EQ(res.removed(), 0u);
    EXPECT_EQ(res.w, c5.all_vertices());
    EXPECT_TRUE(regularisation_failures(c5, res).empty());
}

TEST(Regularise, SingleColourReturnsEverything) {
    const EdgeColouring c = constant_colouring(9, 1);
    const RegularisationResult res = regularise(c, make_rational(1, 10));
    EXPECT_EQ(res.w, c.all_vertices());
    EXPECT_EQ(res.s.size(), 1u);
    EXPECT_TRUE(res.s[0].empty());
}

TEST(Regularise, StarHeavyInstance) {
    const EdgeColouring c = star_heavy();
    const RegularisationResult res = regularise(c, make_rational(1, 10));
    EXPECT_EQ(res.s[0], VertexSet(8, {0}));
    EXPECT_EQ(res.s[1], VertexSet(8, {1, 2, 3, 4, 5}));
    EXPECT_EQ(res.w, VertexSet(8, {6, 7}));
    EXPECT_TRUE(regularisation_failures(c, res).empty());
}

TEST(Regularise, RandomInvariants) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t r = 2 + seed % 3;
        const EdgeColouring c = random_colouring(30 + 4 * seed, r, 900 + seed);
        const BigRational eps = seed % 2 ? make_rational(1, 10) : make_rational(1, 20);
        const RegularisationResult res = regularise(c, eps);
        const auto f = regularisation_failures(c, res);
        EXPECT_TRUE(f.empty()) << "seed " << seed << ": " << f.front();
    }
}

TEST(Regularise, DetectsBrokenResult) {
    const EdgeColouring c = star_heavy();
    RegularisationResult res = regularise(c, make_rational(1, 10));
    res.w.insert(0);
    EXPECT_FALSE(regularisation_failures(c, res).empty());
}

TEST(Escape, Examples) {
    const Lemma53Report a = lemma53_check(2, 100, make_rational(1, 10), {1, 0});
    EXPECT_TRUE(a.pass);
    const Lemma53Report b = lemma53_check(2, 16, make_rational(1, 2), {2, 2});
    EXPECT_TRUE(b.pass);
    EXPECT_THROW(lemma53_check(2, 100, make_rational(1, 10), {0, 0}), InvalidInput);
    EXPECT_THROW(lemma53_check(2, 100, make_rational(1, 10), {101, 0}), InvalidInput);
    EXPECT_THROW(lemma53_check(2, 100, BigRational(1), {5, 5}), InvalidInput);
}

TEST(Escape, SweepPasses) {
    for (std::size_t r = 2; r <= 4; ++r) {
        for (std::size_t k = 4; k <= 40; k += 6) {
            for (const BigRational& eps : {make_rational(1, 2), make_rational(1, 5), make_rational(1, 10)}) {
                const BigRational need = eps * eps * BigRational(static_cast<std::int64_t>(k));
                auto s0 = static_cast<std::size_t>(to_double(need) + 1);
                if (s0 > k) continue;
                std::vector<std::size_t> s(r, 0);
                s[0] = s0;
                EXPECT_TRUE(lemma53_check(r, k, eps, s).pass) << r << " " << k;
            }
        }
    }
}

TEST(Driver, TrivialAndScaleLimits) {
    const EdgeColouring c = random_colouring(10, 2, 3);
    const DriverReport rep = desk_ramsey_driver(c, 2);
    EXPECT_EQ(rep.phase, DriverPhase::Trivial);
    ASSERT_TRUE(rep.clique);
    EXPECT_TRUE(is_mono_clique(c, *rep.clique, *rep.clique_colour));
    EXPECT_THROW(desk_ramsey_driver(c, 7), ScaleError);
}

TEST(Driver, PentagonHasNoTriangle) {
    const EdgeColouring c5 = pentagon_colouring();
    DriverConfig cfg;
    cfg.lambda0 = BigRational(10);
    cfg.delta = make_rational(1, 16);
    const DriverReport rep = desk_ramsey_driver(c5, 3, cfg);
    EXPECT_FALSE(rep.clique);
    for (Colour i = 0; i < 2; ++i) EXPECT_LT(max_mono_clique(c5, i).size, 3u);
}

TEST(Driver, RandomEightyFindsVerifiedClique) {
    const EdgeColouring c = random_colouring(80, 2, 17);
    DriverConfig cfg;
    cfg.lambda0 = BigRational(10);
    cfg.delta = make_rational(1, 16);
    const DriverReport rep = desk_ramsey_driver(c, 4, cfg);
    if (rep.clique) {
        EXPECT_EQ(rep.clique->size(), 4u);
        EXPECT_TRUE(is_mono_clique(c, *rep.clique, *rep.clique_colour));
    }
    if (rep.engine && rep.engine->result == EngineResult::BookFound) {
        EXPECT_TRUE(is_mono_book(c, rep.engine->spine, rep.engine->pages, rep.engine->colour));
    }
}

TEST(Driver, PartitionedBookPhase) {
    const EdgeColouring c = random_colouring(60, 2, 5);
    DriverConfig cfg;
    cfg.lambda0 = BigRational(10);
    cfg.delta = make_rational(1, 16);
    cfg.partition_seed = 11;
    cfg.escape_threshold = BigRational(1000);
    const DriverReport rep = desk_ramsey_driver(c, 4, cfg);
    EXPECT_NE(rep.phase, DriverPhase::Escape);
    if (rep.clique) {
        EXPECT_TRUE(is_mono_clique(c, *rep.clique, *rep.clique_colour));
    }
}
