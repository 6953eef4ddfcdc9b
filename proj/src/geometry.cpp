#include "rbook/geometry.hpp"

#include <algorithm>

#include "rbook/errors.hpp"

namespace rbook {

namespace {

constexpr std::int64_t kHugeThreshold = std::numeric_limits<std::int64_t>::max() / 4;

BigInt ceil_of(const BigRational& q) {
    const BigInt num = numerator_of(q);
    const BigInt den = denominator_of(q);
    BigInt quo = num / den;  // truncates toward zero
    if (quo * den != num && num > 0) quo += 1;
    return quo;
}

std::int64_t clamp_to_int64(const BigInt& v) {
    if (v > kHugeThreshold) return kHugeThreshold;
    if (v < -kHugeThreshold) return -kHugeThreshold;
    return static_cast<std::int64_t>(v);
}

}  // namespace

BigRational min_density(const EdgeColouring& c, const VertexSet& x, const VertexSet& y, Colour i) {
    if (x.empty()) throw EmptySet("min_density: X is empty");
    if (y.empty()) throw EmptySet("min_density: Y is empty");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    x.for_each([&](Vertex v) { best = std::min(best, intersection_size(c.neighbourhood(v, i), y)); });
    return make_rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(y.size()));
}

WitnessConstants WitnessConstants::for_colours(std::size_t r) {
    const auto rr = static_cast<std::int64_t>(r);
    return {pow(BigRational(3), -4 * rr), BigRational(16 * rr * rr * rr)};
}

Interval c_sqrt_lambda_plus_one(const WitnessConstants& k, const BigRational& lambda) {
    if (lambda < -1) throw InvalidInput("lambda must be >= -1");
    return sqrt(Interval::from_rational(k.c_squared * (lambda + 1)));
}

Interval witness_bound(const WitnessConstants& k, const BigRational& lambda) {
    return Interval::from_rational(k.beta) * exp(-c_sqrt_lambda_plus_one(k, lambda));
}

std::size_t Embedding::position(Vertex x) const {
    if (x >= index_of_.size() || index_of_[x] == std::numeric_limits<std::size_t>::max()) {
        throw InvalidVertex("vertex " + std::to_string(x) + " is not in X");
    }
    return index_of_[x];
}

std::int64_t Embedding::numerator(Colour i, std::size_t a, std::size_t b) const {
    const ColourData& cd = colours_.at(i);
    const auto codeg = static_cast<std::int64_t>(intersection_size(cd.trimmed[a], cd.trimmed[b]));
    const auto ys = static_cast<std::int64_t>(cd.y_size);
    const auto d = static_cast<std::int64_t>(cd.degree);
    return codeg * ys - d * d;
}

BigRational Embedding::inner_product(Colour i, Vertex x, Vertex y) const {
    const std::size_t a = position(x), b = position(y);
    return BigRational(numerator(i, a, b)) / colours_.at(i).scale;
}

std::int64_t Embedding::minus_one_threshold(Colour i) const { return minus_one_.at(i); }

Embedding build_embedding(const EdgeColouring& c, const VertexSet& x, const std::vector<VertexSet>& ys,
                          const std::vector<BigRational>& alphas) {
    const std::size_t r = c.r();
    if (ys.size() != r || alphas.size() != r) throw InvalidInput("need exactly r sets Y_i and r weights alpha_i");
    if (x.empty()) throw EmptySet("build_embedding: X is empty");
    Embedding e;
    e.members_ = x.elements();
    e.index_of_.assign(c.n(), std::numeric_limits<std::size_t>::max());
    for (std::size_t a = 0; a < e.members_.size(); ++a) e.index_of_[e.members_[a]] = a;
    for (Colour i = 0; i < r; ++i) {
        if (ys[i].empty()) throw EmptySet("build_embedding: Y_" + std::to_string(i) + " is empty");
        if (alphas[i] <= 0) throw InvalidInput("alpha_" + std::to_string(i) + " must be positive");
        Embedding::ColourData cd;
        cd.y_size = ys[i].size();
        cd.alpha = alphas[i];
        std::vector<VertexSet> avail;
        avail.reserve(e.members_.size());
        std::size_t d = std::numeric_limits<std::size_t>::max();
        for (Vertex v : e.members_) {
            avail.push_back(c.neighbourhood(v, i) & ys[i]);
            d = std::min(d, avail.back().size());
        }
        if (d == 0) throw DegenerateDensity("p_" + std::to_string(i) + "(X, Y_" + std::to_string(i) + ") = 0");
        cd.degree = d;
        cd.p = make_rational(static_cast<std::int64_t>(d), static_cast<std::int64_t>(cd.y_size));
        cd.scale = cd.alpha * static_cast<std::int64_t>(d) * static_cast<std::int64_t>(cd.y_size);
        cd.trimmed.reserve(avail.size());
        for (const auto& s : avail) cd.trimmed.push_back(s.smallest(d));
        // numerator >= -scale  <=>  numerator >= -floor(scale)
        const BigInt fl = numerator_of(cd.scale) / denominator_of(cd.scale);
        e.minus_one_.push_back(-clamp_to_int64(fl));
        e.colours_.push_back(std::move(cd));
    }
    return e;
}

namespace {

/// Numerators of all ordered pairs, per colour, row-major by member position.
std::vector<std::vector<std::int64_t>> pair_numerators(const Embedding& e) {
    const std::size_t m = e.size();
    std::vector<std::vector<std::int64_t>> out(e.r(), std::vector<std::int64_t>(m * m));
    for (Colour i = 0; i < e.r(); ++i) {
        auto& row = out[i];
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a; b < m; ++b) {
                const std::int64_t v = e.numerator(i, a, b);
                row[a * m + b] = v;
                row[b * m + a] = v;
            }
        }
    }
    return out;
}

struct ColourCandidate {
    bool found = false;
    BigRational lambda;
    std::uint64_t count = 0;
    Interval bound;
};

}  // namespace

WitnessReport find_lambda_witness(const Embedding& e, const WitnessConstants& k) {
    const std::size_t m = e.size();
    const std::size_t r = e.r();
    if (m == 0) throw EmptySet("find_lambda_witness: X is empty");
    const auto nums = pair_numerators(e);
    const std::uint64_t total = static_cast<std::uint64_t>(m) * m;
    const BigRational total_q(static_cast<std::int64_t>(total));

    std::vector<ColourCandidate> best(r);
    for (Colour l = 0; l < r; ++l) {
        std::vector<std::int64_t> vals;
        vals.reserve(m * m);
        for (std::size_t idx = 0; idx < m * m; ++idx) {
            bool good = true;
            for (Colour j = 0; j < r && good; ++j) {
                if (j != l && nums[j][idx] < e.minus_one_threshold(j)) good = false;
            }
            if (good) vals.push_back(nums[l][idx]);
        }
        std::sort(vals.begin(), vals.end(), std::greater<>());
        const std::int64_t floor_value = e.minus_one_threshold(l);
        const BigRational& scale = e.colour(l).scale;
        std::size_t pos = 0;
        while (pos < vals.size() && vals[pos] >= floor_value) {
            const std::int64_t v = vals[pos];
            while (pos < vals.size() && vals[pos] == v) ++pos;
            const BigRational lambda = BigRational(v) / scale;
            Interval bound = witness_bound(k, lambda);
            const BigRational q = BigRational(static_cast<std::int64_t>(pos)) / total_q;
            if (certainly_ge(Interval::from_rational(q), bound)) {
                best[l] = {true, lambda, pos, std::move(bound)};
                break;
            }
        }
        if (!best[l].found) {
            // lambda = -1 is always a candidate even when not attained
            const BigRational lambda(-1);
            Interval bound = witness_bound(k, lambda);
            const BigRational q = BigRational(static_cast<std::int64_t>(pos)) / total_q;
            if (pos > 0 && certainly_ge(Interval::from_rational(q), bound)) best[l] = {true, lambda, pos, std::move(bound)};
        }
    }

    std::size_t chosen = r;
    for (Colour l = 0; l < r; ++l) {
        if (!best[l].found) continue;
        if (chosen == r || best[l].lambda > best[chosen].lambda) chosen = l;
    }
    if (chosen == r) throw LemmaViolation("no (colour, lambda) witness exists; the geometric lemma guarantees one");

    WitnessReport rep;
    rep.colour = static_cast<Colour>(chosen);
    rep.lambda = best[chosen].lambda;
    rep.pair_count = best[chosen].count;
    rep.total_pairs = total;
    rep.q = BigRational(static_cast<std::int64_t>(rep.pair_count)) / total_q;
    rep.bound = best[chosen].bound;
    return rep;
}

KeyStepResult key_lemma_step(const EdgeColouring& c, const VertexSet& x, const std::vector<VertexSet>& ys,
                             const std::vector<BigRational>& alphas, const WitnessConstants& k) {
    const Embedding e = build_embedding(c, x, ys, alphas);
    WitnessReport w = find_lambda_witness(e, k);
    const std::size_t m = e.size();
    const std::size_t r = e.r();
    const Colour l = w.colour;
    const std::int64_t l_threshold = clamp_to_int64(ceil_of(w.lambda * e.colour(l).scale));

    std::size_t best_pos = 0;
    std::size_t best_count = 0;
    bool have = false;
    auto admissible = [&](std::size_t a, std::size_t b) {
        if (e.numerator(l, a, b) < l_threshold) return false;
        for (Colour j = 0; j < r; ++j) {
            if (j != l && e.numerator(j, a, b) < e.minus_one_threshold(j)) return false;
        }
        return true;
    };
    for (std::size_t a = 0; a < m; ++a) {
        std::size_t count = 0;
        for (std::size_t b = 0; b < m; ++b) count += admissible(a, b) ? 1 : 0;
        if (!have || count > best_count) {
            best_pos = a;
            best_count = count;
            have = true;
        }
    }

    KeyStepResult out;
    out.pivot = e.members()[best_pos];
    out.colour = l;
    out.lambda = w.lambda;
    out.x_prime = VertexSet(c.n());
    for (std::size_t b = 0; b < m; ++b) {
        if (admissible(best_pos, b)) out.x_prime.insert(e.members()[b]);
    }
    out.y_prime.reserve(r);
    for (Colour i = 0; i < r; ++i) {
        out.y_prime.push_back(e.colour(i).trimmed[best_pos]);
        out.p.push_back(e.colour(i).p);
    }
    out.alphas = alphas;
    out.witness = std::move(w);
    return out;
}

}  // namespace rbook
