#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "rbook/colouring.hpp"
#include "rbook/interval.hpp"
#include "rbook/rational.hpp"

namespace rbook {

/// p_i(X, Y) = min over x in X of |N_i(x) ∩ Y| / |Y|, exactly. Throws EmptySet.
BigRational min_density(const EdgeColouring& c, const VertexSet& x, const VertexSet& y, Colour i);

/// The constants beta and C of the witness bound beta * exp(-C sqrt(lambda + 1)).
/// C is carried through its square so that C sqrt(lambda + 1) = sqrt(C^2 (lambda + 1))
/// is a single correctly-rounded square root of an exact rational.
struct WitnessConstants {
    BigRational beta;
    BigRational c_squared;

    /// beta = 3^{-4r}, C = 4 r^{3/2}.
    static WitnessConstants for_colours(std::size_t r);
};

/// Enclosure of beta * exp(-C sqrt(lambda + 1)); lambda >= -1.
Interval witness_bound(const WitnessConstants& k, const BigRational& lambda);

/// Enclosure of C sqrt(lambda + 1).
Interval c_sqrt_lambda_plus_one(const WitnessConstants& k, const BigRational& lambda);

/// Implicit sigma-embedding of X: for each colour i and x in X the trimmed
/// neighbourhood N'_i(x), the |p_i |Y_i|| smallest-labelled members of
/// N_i(x) ∩ Y_i. Vectors are never materialised:
///
///   <sigma_i(x), sigma_i(y)> = (|N'_i(x) ∩ N'_i(y)| |Y_i| - d_i^2) / (alpha_i d_i |Y_i|)
///
/// where d_i = p_i |Y_i| is an integer by construction.
class Embedding {
public:
    struct ColourData {
        std::size_t y_size = 0;
        std::size_t degree = 0;  // d_i = p_i |Y_i| = min_x |N_i(x) ∩ Y_i|
        BigRational p;
        BigRational alpha;
        BigRational scale;  // alpha_i d_i |Y_i|, the common denominator of all inner products
        std::vector<VertexSet> trimmed;  // by position in members()
    };

    std::size_t r() const noexcept { return colours_.size(); }
    std::size_t size() const noexcept { return members_.size(); }
    std::size_t universe() const noexcept { return index_of_.size(); }

    const std::vector<Vertex>& members() const noexcept { return members_; }
    const ColourData& colour(Colour i) const { return colours_.at(i); }

    /// Position of x in members(); throws InvalidVertex when x is not in X.
    std::size_t position(Vertex x) const;

    const VertexSet& trimmed(Colour i, Vertex x) const { return colours_.at(i).trimmed[position(x)]; }

    /// Integer numerator codeg * |Y_i| - d_i^2, by member positions.
    std::int64_t numerator(Colour i, std::size_t a, std::size_t b) const;

    /// Exact <sigma_i(x), sigma_i(y)>.
    BigRational inner_product(Colour i, Vertex x, Vertex y) const;

    /// Smallest integer numerator v with v / scale_i >= -1, i.e. -floor(scale_i).
    std::int64_t minus_one_threshold(Colour i) const;

    friend Embedding build_embedding(const EdgeColouring& c, const VertexSet& x, const std::vector<VertexSet>& ys,
                                     const std::vector<BigRational>& alphas);

private:
    std::vector<Vertex> members_;
    std::vector<std::size_t> index_of_;
    std::vector<ColourData> colours_;
    std::vector<std::int64_t> minus_one_;
};

/// Throws EmptySet, InvalidInput (alpha <= 0, |Ys| != r), DegenerateDensity (some p_i = 0).
Embedding build_embedding(const EdgeColouring& c, const VertexSet& x, const std::vector<VertexSet>& ys,
                          const std::vector<BigRational>& alphas);

inline BigRational inner_product(const Embedding& e, Colour i, Vertex x, Vertex y) { return e.inner_product(i, x, y); }

struct WitnessReport {
    Colour colour = 0;
    BigRational lambda;
    /// q = pair_count / total_pairs, over ordered pairs of X including the diagonal.
    BigRational q;
    std::uint64_t pair_count = 0;
    std::uint64_t total_pairs = 0;
    Interval bound;  // enclosure of beta e^{-C sqrt(lambda + 1)}
};

/// Largest lambda >= -1 (then smallest colour) with
/// P(<sigma_l(U),sigma_l(U')> >= lambda, <sigma_j(U),sigma_j(U')> >= -1 for j != l) >= beta e^{-C sqrt(lambda+1)},
/// searched over lambda in {-1} ∪ {attained inner products}. The comparison
/// is made against an upward enclosure of the right side. Throws LemmaViolation
/// if nothing qualifies.
WitnessReport find_lambda_witness(const Embedding& e, const WitnessConstants& k);

struct KeyStepResult {
    Vertex pivot = 0;
    Colour colour = 0;
    VertexSet x_prime;
    std::vector<VertexSet> y_prime;
    BigRational lambda;
    WitnessReport witness;
    std::vector<BigRational> p;       // p_i(X, Y_i)
    std::vector<BigRational> alphas;  // as supplied
};

/// One application of the key lemma. X' = {y in X : <sigma_l(x),sigma_l(y)> >= lambda and
/// <sigma_i(x),sigma_i(y)> >= -1 for i != l}; the pivot maximises |X'| (smallest label on ties)
/// and may itself belong to X'.
KeyStepResult key_lemma_step(const EdgeColouring& c, const VertexSet& x, const std::vector<VertexSet>& ys,
                             const std::vector<BigRational>& alphas, const WitnessConstants& k);

}  // namespace rbook
