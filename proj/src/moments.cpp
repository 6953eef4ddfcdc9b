#include "rbook/moments.hpp"

#include <random>

#include "rbook/colouring.hpp"
#include "rbook/errors.hpp"

namespace rbook {

void VectorFamily::validate() const {
    const std::size_t m = size();
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != m) throw InvalidInput("every colour needs one vector per point");
        for (const auto& v : vectors[i]) {
            if (v.size() != dim(i)) throw InvalidInput("ragged vector family in colour " + std::to_string(i));
        }
    }
}

VectorFamily random_family(std::size_t r, std::size_t points, std::size_t dim, std::uint64_t seed, int range) {
    std::mt19937_64 eng(seed);
    VectorFamily f;
    f.vectors.assign(r, std::vector<std::vector<BigRational>>(points, std::vector<BigRational>(dim)));
    const auto width = static_cast<std::uint64_t>(2 * range + 1);
    for (auto& colour : f.vectors) {
        for (auto& v : colour) {
            for (auto& x : v) x = BigRational(static_cast<std::int64_t>(uniform_below(eng, width)) - range);
        }
    }
    return f;
}

namespace {

void check_ells(std::size_t r, const std::vector<unsigned>& ells) {
    if (ells.size() != r) throw InvalidInput("need one exponent per colour");
}

BigRational dot(const std::vector<BigRational>& a, const std::vector<BigRational>& b) {
    BigRational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

}  // namespace

BigRational moment_double_sum(const VectorFamily& family, const std::vector<unsigned>& ells) {
    family.validate();
    check_ells(family.r(), ells);
    const std::size_t m = family.size();
    if (m == 0) throw EmptySet("moment of an empty family");
    BigRational total = 0;
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            BigRational term = 1;
            for (std::size_t i = 0; i < family.r(); ++i) {
                if (ells[i] == 0) continue;
                term *= rbook::pow(dot(family.vectors[i][x], family.vectors[i][y]), static_cast<std::int64_t>(ells[i]));
            }
            total += term;
        }
    }
    return total / BigRational(static_cast<std::int64_t>(m * m));
}

BigRational moment_double_sum(const Embedding& e, const std::vector<unsigned>& ells) {
    check_ells(e.r(), ells);
    const std::size_t m = e.size();
    BigRational total = 0;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            BigRational term = 1;
            for (Colour i = 0; i < e.r(); ++i) {
                if (ells[i] == 0) continue;
                const BigRational ip = BigRational(e.numerator(i, a, b)) / e.colour(i).scale;
                term *= rbook::pow(ip, static_cast<std::int64_t>(ells[i]));
            }
            total += term;
        }
    }
    return total / BigRational(static_cast<std::int64_t>(m * m));
}

BigRational moment_tensor(const VectorFamily& family, const std::vector<unsigned>& ells, TensorLimits limits) {
    family.validate();
    check_ells(family.r(), ells);
    const std::size_t m = family.size();
    if (m == 0) throw EmptySet("moment of an empty family");

    std::vector<std::size_t> factors;  // colour a_1, ..., a_L
    for (std::size_t i = 0; i < ells.size(); ++i) {
        for (unsigned k = 0; k < ells[i]; ++k) factors.push_back(i);
    }
    if (factors.size() > limits.max_order) {
        throw TensorTooLarge("tensor order " + std::to_string(factors.size()) + " exceeds cap " +
                             std::to_string(limits.max_order));
    }
    std::size_t entries = 1;
    for (std::size_t i : factors) {
        if (family.dim(i) > limits.max_dim) {
            throw TensorTooLarge("dimension " + std::to_string(family.dim(i)) + " exceeds cap " +
                                 std::to_string(limits.max_dim));
        }
        entries *= family.dim(i);
    }

    // E[Z] accumulated as sum_x Z(x); the 1/m normalisation is applied at the end.
    std::vector<BigRational> mean(entries, BigRational(0));
    std::vector<BigRational> z;
    for (std::size_t x = 0; x < m; ++x) {
        z.assign(1, BigRational(1));
        for (std::size_t i : factors) {
            const auto& v = family.vectors[i][x];
            std::vector<BigRational> next;
            next.reserve(z.size() * v.size());
            for (const auto& a : z) {
                for (const auto& b : v) next.push_back(a * b);
            }
            z = std::move(next);
        }
        for (std::size_t k = 0; k < entries; ++k) mean[k] += z[k];
    }
    BigRational norm2 = 0;
    for (const auto& v : mean) norm2 += v * v;
    return norm2 / BigRational(static_cast<std::int64_t>(m * m));
}

}  // namespace rbook
