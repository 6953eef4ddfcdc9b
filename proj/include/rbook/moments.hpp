#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rbook/geometry.hpp"
#include "rbook/rational.hpp"

namespace rbook {

/// r functions sigma_i : X -> Q^{dim_i} given explicitly by rational coordinates.
struct VectorFamily {
    /// vectors[i][x] is sigma_i(x); all vectors of one colour share a dimension.
    std::vector<std::vector<std::vector<BigRational>>> vectors;

    std::size_t r() const noexcept { return vectors.size(); }
    std::size_t size() const noexcept { return vectors.empty() ? 0 : vectors.front().size(); }
    std::size_t dim(std::size_t i) const { return vectors.at(i).empty() ? 0 : vectors[i].front().size(); }

    /// Throws InvalidInput on ragged shapes.
    void validate() const;
};

/// Random family with integer coordinates in [-range, range], deterministic in seed.
VectorFamily random_family(std::size_t r, std::size_t points, std::size_t dim, std::uint64_t seed, int range = 3);

/// (1/|X|^2) sum_{x,y} prod_i <sigma_i(x), sigma_i(y)>^{l_i}, exactly.
BigRational moment_double_sum(const VectorFamily& family, const std::vector<unsigned>& ells);
BigRational moment_double_sum(const Embedding& e, const std::vector<unsigned>& ells);

struct TensorLimits {
    unsigned max_order = 4;
    std::size_t max_dim = 32;
};

/// <E[Z], E[Z]> with Z = sigma_{a_1}(U) ⊗ ... ⊗ sigma_{a_L}(U) materialised as a
/// dense order-L tensor, L = sum l_i. Throws TensorTooLarge beyond the limits.
BigRational moment_tensor(const VectorFamily& family, const std::vector<unsigned>& ells, TensorLimits limits = {});

}  // namespace rbook
