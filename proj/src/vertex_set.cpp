#include "rbook/vertex_set.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "rbook/errors.hpp"

namespace rbook {

namespace {

void check_same_universe(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe()) {
        throw InvalidInput("vertex sets over different universes (" + std::to_string(a.universe()) +
                           " vs " + std::to_string(b.universe()) + ")");
    }
}

}  // namespace

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty()) {
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    }
    return s;
}

VertexSet VertexSet::from_vector(std::size_t universe, const std::vector<Vertex>& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) {
        throw InvalidVertex("vertex " + std::to_string(v) + " outside [0, " + std::to_string(universe_) + ")");
    }
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v >= universe_) return;
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    if (universe_ != other.universe_) return false;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    const std::size_t m = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < m; ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

Vertex VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
    return static_cast<Vertex>(universe_);
}

Vertex VertexSet::next(Vertex v) const noexcept {
    std::size_t pos = static_cast<std::size_t>(v) + 1;
    if (pos >= universe_) return static_cast<Vertex>(universe_);
    std::size_t w = pos >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (pos & 63));
    while (true) {
        if (bits != 0) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        if (++w == words_.size()) return static_cast<Vertex>(universe_);
        bits = words_[w];
    }
}

std::vector<Vertex> VertexSet::elements() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

VertexSet VertexSet::smallest(std::size_t count) const {
    VertexSet out(universe_);
    for (std::size_t w = 0; w < words_.size() && count > 0; ++w) {
        std::uint64_t bits = words_[w];
        const auto pc = static_cast<std::size_t>(std::popcount(bits));
        if (pc <= count) {
            out.words_[w] = bits;
            count -= pc;
            continue;
        }
        while (count > 0) {
            const std::uint64_t low = bits & (~bits + 1);
            out.words_[w] |= low;
            bits ^= low;
            --count;
        }
    }
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first_item = true;
    for_each([&](Vertex v) {
        if (!first_item) os << ", ";
        os << v;
        first_item = false;
    });
    os << '}';
    return os.str();
}

std::size_t intersection_size(const VertexSet& a, const VertexSet& b) noexcept {
    const auto& wa = a.words();
    const auto& wb = b.words();
    const std::size_t m = std::min(wa.size(), wb.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < m; ++i) total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
    return total;
}

}  // namespace rbook
