#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ntss {

// Set of vertices from the dense 1-based id space 1..n, backed by a bitset.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 64) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> ids) {
        VertexSet s(universe);
        for (int v : ids)
            s.set(v);
        return s;
    }

    static VertexSet from_vector(int universe, const std::vector<int>& ids) {
        VertexSet s(universe);
        for (int v : ids)
            s.set(v);
        return s;
    }

    static VertexSet all(int universe) {
        VertexSet s(universe);
        for (int v = 1; v <= universe; ++v)
            s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const { return (words_[word(v)] >> bit(v)) & 1u; }
    void set(int v) { words_[word(v)] |= std::uint64_t{1} << bit(v); }
    void reset(int v) { words_[word(v)] &= ~(std::uint64_t{1} << bit(v)); }

    int count() const;
    bool empty() const;
    int smallest() const; // 0 when empty

    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const = default;

    std::vector<int> to_vector() const; // ascending

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                int b = __builtin_ctzll(x);
                f(static_cast<int>(w * 64 + b));
                x &= x - 1;
            }
        }
    }

    std::size_t hash() const;

private:
    static std::size_t word(int v) { return static_cast<std::size_t>(v) / 64; }
    static int bit(int v) { return v % 64; }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

// Witness/seed-set text form: comma-separated ascending ids, empty set is the empty string.
std::string format_vertex_set(const VertexSet& s);
VertexSet parse_vertex_set(const std::string& text, int universe); // throws std::runtime_error

} // namespace ntss
