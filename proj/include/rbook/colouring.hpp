#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rbook/vertex_set.hpp"

namespace rbook {

/// An r-colouring of the edges of K_n. Immutable after construction.
///
/// Colours of unordered pairs live once in an upper-triangle array; the
/// colour-indexed neighbourhoods N_i(v) are cached as r * n bitsets so that
/// codegree queries cost O(n / 64).
class EdgeColouring {
public:
    static constexpr std::size_t max_colours = 64;

    /// Builds from a pair function; f(u, v) is only called with u < v.
    static EdgeColouring from_function(std::size_t n, std::size_t r,
                                       const std::function<Colour(Vertex, Vertex)>& f);
    /// Builds from the upper triangle in row-major order: {0,1},{0,2},...,{0,n-1},{1,2},...
    static EdgeColouring from_upper_triangle(std::size_t n, std::size_t r, std::vector<std::uint8_t> upper);

    std::size_t n() const noexcept { return n_; }
    std::size_t r() const noexcept { return r_; }

    /// Throws InvalidPair for u == v or out of range.
    Colour colour(Vertex u, Vertex v) const;
    /// N_i(v). Throws InvalidVertex / InvalidColour.
    const VertexSet& neighbourhood(Vertex v, Colour i) const;

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    /// Raw colour of pair u < v without validation.
    Colour colour_unchecked(Vertex u, Vertex v) const noexcept {
        if (u > v) std::swap(u, v);
        return upper_[pair_index(u, v)];
    }

    const std::vector<std::uint8_t>& upper_triangle() const noexcept { return upper_; }

    /// Deterministic 64-bit fingerprint of (n, r, colours).
    std::uint64_t fingerprint() const noexcept;

    friend bool operator==(const EdgeColouring& a, const EdgeColouring& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.upper_ == b.upper_;
    }

private:
    EdgeColouring(std::size_t n, std::size_t r, std::vector<std::uint8_t> upper);

    std::size_t pair_index(Vertex u, Vertex v) const noexcept {
        const std::size_t a = u;
        return a * (2 * n_ - a - 1) / 2 + (v - a - 1);
    }

    std::size_t n_ = 0;
    std::size_t r_ = 0;
    std::vector<std::uint8_t> upper_;
    std::vector<VertexSet> neighbourhoods_;  // index v * r + i
};

bool is_mono_clique(const EdgeColouring& c, const VertexSet& s, Colour i);

/// (T, B) is a monochromatic book in colour i: T is a colour-i clique and every
/// T-B edge has colour i. Throws InvalidBook when T and B overlap.
bool is_mono_book(const EdgeColouring& c, const VertexSet& spine, const VertexSet& pages, Colour i);

/// Each edge colour i.i.d. uniform on [0, r), driven by mt19937_64(seed).
EdgeColouring random_colouring(std::size_t n, std::size_t r, std::uint64_t seed);

/// Lefmann product: vertex (a, b) is a * n2 + b; colours of c1 come first,
/// then c2's colours shifted by r1.
EdgeColouring product_colouring(const EdgeColouring& c1, const EdgeColouring& c2);

/// Pentagon edges {i, i+1 mod 5} colour 0, diagonals colour 1.
EdgeColouring pentagon_colouring();

/// Every edge colour `i`.
EdgeColouring constant_colouring(std::size_t n, std::size_t r, Colour i = 0);

/// Induced colouring on the members of `s`, relabelled 0..|s|-1 in increasing order.
EdgeColouring induced_colouring(const EdgeColouring& c, const VertexSet& s);

/// ".rcg" text format: "n r" header then the upper-triangle rows.
std::string serialize(const EdgeColouring& c);
EdgeColouring parse_colouring(std::string_view text);

EdgeColouring read_colouring_file(const std::string& path);
void write_colouring_file(const EdgeColouring& c, const std::string& path);

/// Uniform integer in [0, bound) from a 64-bit engine by rejection; portable
/// across standard libraries, unlike std::uniform_int_distribution.
template <class Engine>
std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
    const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound + 1) % bound;
    while (true) {
        const std::uint64_t x = eng();
        if (x <= limit) return x % bound;
    }
}

}  // namespace rbook
