#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace rbook {

using Vertex = std::uint32_t;
using Colour = std::uint32_t;

/// Dense bitset over the universe [0, n).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t universe);
    static VertexSet from_vector(std::size_t universe, const std::vector<Vertex>& members);

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    std::size_t size() const noexcept;
    bool empty() const noexcept;

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    bool is_subset_of(const VertexSet& other) const noexcept;
    bool intersects(const VertexSet& other) const noexcept;

    /// Smallest member, or universe() when empty.
    Vertex first() const noexcept;
    /// Smallest member greater than v, or universe() when none.
    Vertex next(Vertex v) const noexcept;

    std::vector<Vertex> elements() const;

    /// The `count` smallest members.
    VertexSet smallest(std::size_t count) const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    /// "{1, 4}" style rendering for messages and tests.
    std::string to_string() const;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// |a ∩ b| without materialising the intersection.
std::size_t intersection_size(const VertexSet& a, const VertexSet& b) noexcept;

}  // namespace rbook
