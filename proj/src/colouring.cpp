#include "rbook/colouring.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <utility>

#include "rbook/errors.hpp"

namespace rbook {

EdgeColouring::EdgeColouring(std::size_t n, std::size_t r, std::vector<std::uint8_t> upper)
    : n_(n), r_(r), upper_(std::move(upper)) {
    if (n_ < 1) throw InvalidInput("colouring needs n >= 1");
    if (r_ < 1 || r_ > max_colours) throw InvalidInput("colour count must lie in [1, 64]");
    if (upper_.size() != n_ * (n_ - 1) / 2) throw InvalidInput("upper triangle has the wrong length");
    neighbourhoods_.assign(n_ * r_, VertexSet(n_));
    std::size_t k = 0;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v, ++k) {
            const Colour c = upper_[k];
            if (c >= r_) throw InvalidColour("colour " + std::to_string(c) + " outside [0, " + std::to_string(r_) + ")");
            neighbourhoods_[u * r_ + c].insert(v);
            neighbourhoods_[v * r_ + c].insert(u);
        }
    }
}

EdgeColouring EdgeColouring::from_function(std::size_t n, std::size_t r,
                                           const std::function<Colour(Vertex, Vertex)>& f) {
    if (n < 1) throw InvalidInput("colouring needs n >= 1");
    std::vector<std::uint8_t> upper;
    upper.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const Colour c = f(u, v);
            if (c >= r) throw InvalidColour("colour " + std::to_string(c) + " outside [0, " + std::to_string(r) + ")");
            upper.push_back(static_cast<std::uint8_t>(c));
        }
    }
    return EdgeColouring(n, r, std::move(upper));
}

EdgeColouring EdgeColouring::from_upper_triangle(std::size_t n, std::size_t r, std::vector<std::uint8_t> upper) {
    return EdgeColouring(n, r, std::move(upper));
}

Colour EdgeColouring::colour(Vertex u, Vertex v) const {
    if (u == v) throw InvalidPair("self-pair {" + std::to_string(u) + "," + std::to_string(v) + "} has no colour");
    if (u >= n_ || v >= n_) throw InvalidPair("pair outside [0, " + std::to_string(n_) + ")");
    return colour_unchecked(u, v);
}

const VertexSet& EdgeColouring::neighbourhood(Vertex v, Colour i) const {
    if (v >= n_) throw InvalidVertex("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
    if (i >= r_) throw InvalidColour("colour " + std::to_string(i) + " outside [0, " + std::to_string(r_) + ")");
    return neighbourhoods_[static_cast<std::size_t>(v) * r_ + i];
}

std::uint64_t EdgeColouring::fingerprint() const noexcept {
    // FNV-1a over the header and triangle.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t byte) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    };
    for (int s = 0; s < 64; s += 8) mix((n_ >> s) & 0xff);
    for (int s = 0; s < 64; s += 8) mix((r_ >> s) & 0xff);
    for (auto c : upper_) mix(c);
    return h;
}

bool is_mono_clique(const EdgeColouring& c, const VertexSet& s, Colour i) {
    bool ok = true;
    s.for_each([&](Vertex u) {
        if (!ok) return;
        // every later member must be a colour-i neighbour of u
        VertexSet rest = s;
        rest.erase(u);
        if (!rest.is_subset_of(c.neighbourhood(u, i))) ok = false;
    });
    return ok;
}

bool is_mono_book(const EdgeColouring& c, const VertexSet& spine, const VertexSet& pages, Colour i) {
    if (spine.intersects(pages)) throw InvalidBook("spine and pages overlap");
    if (!is_mono_clique(c, spine, i)) return false;
    bool ok = true;
    spine.for_each([&](Vertex u) {
        if (ok && !pages.is_subset_of(c.neighbourhood(u, i))) ok = false;
    });
    return ok;
}

EdgeColouring random_colouring(std::size_t n, std::size_t r, std::uint64_t seed) {
    if (r < 1) throw InvalidInput("colour count must be >= 1");
    std::mt19937_64 eng(seed);
    return EdgeColouring::from_function(n, r, [&](Vertex, Vertex) {
        return static_cast<Colour>(uniform_below(eng, r));
    });
}

EdgeColouring product_colouring(const EdgeColouring& c1, const EdgeColouring& c2) {
    const std::size_t n2 = c2.n();
    const std::size_t r1 = c1.r();
    return EdgeColouring::from_function(c1.n() * n2, r1 + c2.r(), [&](Vertex x, Vertex y) {
        const auto a = static_cast<Vertex>(x / n2), b = static_cast<Vertex>(x % n2);
        const auto a2 = static_cast<Vertex>(y / n2), b2 = static_cast<Vertex>(y % n2);
        if (a != a2) return c1.colour_unchecked(a, a2);
        return static_cast<Colour>(r1 + c2.colour_unchecked(b, b2));
    });
}

EdgeColouring pentagon_colouring() {
    return EdgeColouring::from_function(5, 2, [](Vertex u, Vertex v) {
        const Vertex d = v - u;
        return static_cast<Colour>((d == 1 || d == 4) ? 0 : 1);
    });
}

EdgeColouring constant_colouring(std::size_t n, std::size_t r, Colour i) {
    return EdgeColouring::from_function(n, r, [i](Vertex, Vertex) { return i; });
}

EdgeColouring induced_colouring(const EdgeColouring& c, const VertexSet& s) {
    const auto members = s.elements();
    if (members.empty()) throw EmptySet("cannot induce a colouring on the empty set");
    return EdgeColouring::from_function(members.size(), c.r(), [&](Vertex a, Vertex b) {
        return c.colour_unchecked(members[a], members[b]);
    });
}

std::string serialize(const EdgeColouring& c) {
    std::string out = std::to_string(c.n()) + " " + std::to_string(c.r()) + "\n";
    const auto& upper = c.upper_triangle();
    std::size_t k = 0;
    for (std::size_t u = 0; u + 1 < c.n(); ++u) {
        for (std::size_t v = u + 1; v < c.n(); ++v, ++k) {
            if (v != u + 1) out += ' ';
            out += std::to_string(upper[k]);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ') {
            ++i;
            continue;
        }
        std::uint64_t value = 0;
        const char* begin = line.data() + i;
        const char* end = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || (ptr != end && *ptr != ' ')) {
            throw ParseError(line_no, "expected space-separated decimals, got '" + std::string(line) + "'");
        }
        out.push_back(value);
        i += static_cast<std::size_t>(ptr - begin);
    }
    return out;
}

}  // namespace

EdgeColouring parse_colouring(std::string_view text) {
    if (text.empty() || text.back() != '\n') throw ParseError(1, "missing trailing newline");
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t nl = text.find('\n', start);
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    const auto header = parse_numbers(lines[0], 1);
    if (header.size() != 2) throw ParseError(1, "header must be 'n r'");
    const std::uint64_t n = header[0], r = header[1];
    if (n < 1) throw ParseError(1, "n must be >= 1");
    if (r < 1 || r > EdgeColouring::max_colours) throw ParseError(1, "r must lie in [1, 64]");
    const std::size_t rows = static_cast<std::size_t>(n) - 1;
    if (lines.size() != rows + 1) {
        throw ParseError(lines.size() < rows + 1 ? lines.size() + 1 : rows + 2,
                         "expected " + std::to_string(rows) + " colour rows, found " + std::to_string(lines.size() - 1));
    }
    std::vector<std::uint8_t> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t u = 0; u < rows; ++u) {
        const std::size_t line_no = u + 2;
        const auto row = parse_numbers(lines[u + 1], line_no);
        if (row.size() != rows - u) {
            throw ParseError(line_no, "row " + std::to_string(u) + " needs " + std::to_string(rows - u) + " entries, has " +
                                          std::to_string(row.size()));
        }
        for (auto c : row) {
            if (c >= r) throw ParseError(line_no, "colour " + std::to_string(c) + " >= r = " + std::to_string(r));
            upper.push_back(static_cast<std::uint8_t>(c));
        }
    }
    return EdgeColouring::from_upper_triangle(n, r, std::move(upper));
}

EdgeColouring read_colouring_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_colouring(buf.str());
}

void write_colouring_file(const EdgeColouring& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path);
    out << serialize(c);
}

}  // namespace rbook
