#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "rbook/errors.hpp"
#include "rbook/moments.hpp"
#include "rbook/special_function.hpp"

using namespace rbook;

namespace {

VectorFamily two_basis_vectors() {
    VectorFamily f;
    f.vectors = {{{BigRational(1), BigRational(0)}, {BigRational(0), BigRational(1)}}};
    return f;
}

}  // namespace

TEST(Moments, BasisExample) {
    const VectorFamily f = two_basis_vectors();
    EXPECT_EQ(moment_double_sum(f, {1}), make_rational(1, 2));
    EXPECT_EQ(moment_tensor(f, {1}), make_rational(1, 2));
    EXPECT_EQ(moment_double_sum(f, {0}), BigRational(1));
    EXPECT_EQ(moment_tensor(f, {0}), BigRational(1));
}

TEST(Moments, PentagonEmbeddingEvenPower) {
    const EdgeColouring c5 = pentagon_colouring();
    const VertexSet all = c5.all_vertices();
    const Embedding e = build_embedding(c5, all, {all, all}, {make_rational(1, 10), make_rational(1, 10)});
    BigRational direct = 0;
    for (Vertex x = 0; x < 5; ++x) {
        for (Vertex y = 0; y < 5; ++y) {
            const BigRational ip = e.inner_product(0, x, y);
            direct += ip * ip;
        }
    }
    direct /= 25;
    EXPECT_EQ(moment_double_sum(e, {2, 0}), direct);
    EXPECT_GE(direct, 0);
    EXPECT_EQ(moment_double_sum(e, {0, 0}), BigRational(1));
}

TEST(Moments, RandomFamiliesAgree) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const VectorFamily f = random_family(2, 4, 3, seed);
        const BigRational sum = moment_double_sum(f, {2, 1});
        EXPECT_GE(sum, 0);
        EXPECT_EQ(sum, moment_tensor(f, {2, 1}));
    }
}

TEST(Moments, TensorLimits) {
    const VectorFamily f = random_family(1, 3, 3, 7);
    EXPECT_THROW(moment_tensor(f, {5}), TensorTooLarge);
    EXPECT_NO_THROW(moment_tensor(f, {5}, TensorLimits{5, 32}));
}

TEST(Moments, RaggedFamilyRejected) {
    VectorFamily f;
    f.vectors = {{{BigRational(1), BigRational(0)}, {BigRational(0)}}};
    EXPECT_THROW(f.validate(), InvalidInput);
}

TEST(Special, ClosedFormValues) {
    const double zeros[3] = {0, 0, 0};
    EXPECT_TRUE(special_f(std::span<const double>(zeros, 3)).contains_zero());
    const double four[1] = {4};
    const Interval f4 = special_f(std::span<const double>(four, 1));
    EXPECT_NEAR(f4.mid_double(), 4.0, 1e-30);
    const double one_zero[2] = {1, 0};
    EXPECT_NEAR(special_f(std::span<const double>(one_zero, 2)).mid_double(), 3.0, 1e-25);

    const Interval mpi2 = -(Interval::pi() * Interval::pi());
    const Interval args[2] = {mpi2, mpi2};
    const Interval f = special_f(std::span<const Interval>(args, 2));
    EXPECT_NEAR(f.mid_double(), -2 * std::numbers::pi * std::numbers::pi, 1e-12);
    EXPECT_LT(f.width().to_double(), 1e-25);
}

TEST(Special, CoshSqrtContinuation) {
    EXPECT_NEAR(cosh_sqrt(Interval::exact(4)).mid_double(), std::cosh(2.0), 1e-14);
    EXPECT_NEAR(cosh_sqrt(Interval::exact(-4)).mid_double(), std::cos(2.0), 1e-14);
    EXPECT_NEAR(cosh_sqrt(Interval::exact(0)).mid_double(), 1.0, 1e-30);
}

TEST(Special, SeriesAgreesWithClosedForm) {
    for (double a = -10; a <= 10; a += 0.75) {
        for (double b = -10; b <= 10; b += 1.25) {
            const double xs[2] = {a, b};
            const double closed = special_f(std::span<const double>(xs, 2)).mid_double();
            const double series = special_f_series(std::span<const double>(xs, 2)).mid_double();
            EXPECT_LE(std::abs(closed - series), 1e-25 * std::max(1.0, std::abs(closed)));
        }
    }
}

TEST(Special, BoundBranches) {
    const double zeros[2] = {0, 0};
    const SpecialBoundsResult a = check_special_bounds(std::span<const double>(zeros, 2));
    EXPECT_EQ(a.branch, SpecialBranch::UpperBoundHolds);
    EXPECT_GE(a.margin, 0);
    const double neg[2] = {-7, 0};
    const SpecialBoundsResult b = check_special_bounds(std::span<const double>(neg, 2));
    EXPECT_EQ(b.branch, SpecialBranch::NegativeCaseHolds);
    EXPECT_GE(b.margin, 0);
    const double single[1] = {-4};
    EXPECT_EQ(check_special_bounds(std::span<const double>(single, 1)).branch, SpecialBranch::NegativeCaseHolds);
}
