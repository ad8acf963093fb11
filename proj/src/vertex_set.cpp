#include "ntss/vertex_set.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ntss {

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : words_)
        c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : words_)
        if (w)
            return false;
    return true;
}

int VertexSet::smallest() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return static_cast<int>(w * 64 + __builtin_ctzll(words_[w]));
    return 0;
}

bool VertexSet::intersects(const VertexSet& o) const {
    std::size_t k = std::min(words_.size(), o.words_.size());
    for (std::size_t w = 0; w < k; ++w)
        if (words_[w] & o.words_[w])
            return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t other = w < o.words_.size() ? o.words_[w] : 0;
        if (words_[w] & ~other)
            return false;
    }
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size() && w < o.words_.size(); ++w)
        words_[w] |= o.words_[w];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= w < o.words_.size() ? o.words_[w] : 0;
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size() && w < o.words_.size(); ++w)
        words_[w] &= ~o.words_[w];
    return *this;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
}

std::size_t VertexSet::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::string format_vertex_set(const VertexSet& s) {
    std::ostringstream out;
    bool first = true;
    s.for_each([&](int v) {
        if (!first)
            out << ',';
        out << v;
        first = false;
    });
    return out.str();
}

VertexSet parse_vertex_set(const std::string& text, int universe) {
    VertexSet s(universe);
    if (text.empty())
        return s;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty())
            throw std::runtime_error("vertex set: empty entry in '" + text + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::runtime_error("vertex set: bad id '" + tok + "'");
        }
        if (used != tok.size())
            throw std::runtime_error("vertex set: bad id '" + tok + "'");
        if (v < 1 || v > universe)
            throw std::runtime_error("vertex set: id " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(universe));
        if (s.test(v))
            throw std::runtime_error("vertex set: duplicate id " + std::to_string(v));
        s.set(v);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return s;
}

} // namespace ntss
