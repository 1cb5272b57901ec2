#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace qmlines {

/// Ordered triple of pairwise-distinct point indices, read "y lies between x and z".
struct Triple {
    int x = 0;
    int y = 0;
    int z = 0;

    friend constexpr bool operator==(const Triple&, const Triple&) = default;
    friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

/// Number of ordered triples of distinct points on n points: n(n-1)(n-2).
constexpr std::size_t triple_count(int n) {
    return n < 3 ? 0 : static_cast<std::size_t>(n) * (n - 1) * (n - 2);
}

/// Rank of (x,y,z) in the lexicographic order of all ordered triples of
/// distinct indices on n points. This rank is the triple's bit position.
constexpr std::size_t triple_index(int n, Triple t) {
    int y = t.y - (t.y > t.x);
    int z = t.z - (t.z > t.x) - (t.z > t.y);
    return (static_cast<std::size_t>(t.x) * (n - 1) + y) * (n - 2) + z;
}

/// Inverse of triple_index.
constexpr Triple triple_at(int n, std::size_t index) {
    int z = static_cast<int>(index % (n - 2));
    index /= (n - 2);
    int y = static_cast<int>(index % (n - 1));
    int x = static_cast<int>(index / (n - 1));
    if (y >= x) ++y;
    int lo = x < y ? x : y;
    int hi = x < y ? y : x;
    if (z >= lo) ++z;
    if (z >= hi) ++z;
    return {x, y, z};
}

/// A set of ordered triples on n points stored as a bit set over the
/// lexicographic triple order. Bit i has weight 2^i in the encoding value,
/// so ordering compares encodings as unsigned integers.
class Betweenness {
public:
    Betweenness() = default;
    /// Throws std::invalid_argument unless 2 <= n <= kMaxPoints.
    explicit Betweenness(int n);
    Betweenness(int n, std::initializer_list<Triple> triples);

    int n() const { return n_; }

    bool contains(Triple t) const;
    /// Throws std::invalid_argument for out-of-range or repeated indices.
    void insert(Triple t);
    void erase(Triple t);

    bool test_bit(std::size_t index) const { return (words_[index / 64] >> (index % 64)) & 1U; }
    void set_bit(std::size_t index) { words_[index / 64] |= std::uint64_t{1} << (index % 64); }

    std::size_t size() const;
    bool empty() const { return size() == 0; }

    std::vector<Triple> triples() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            for (std::uint64_t m = words_[w]; m != 0; m &= m - 1)
                fn(triple_at(n_, w * 64 + static_cast<std::size_t>(__builtin_ctzll(m))));
    }

    /// Encoding value; only defined when all triples fit in 64 bits (n <= 5).
    std::uint64_t encoding() const;
    static Betweenness from_encoding(int n, std::uint64_t bits);

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const Betweenness& a, const Betweenness& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend std::strong_ordering operator<=>(const Betweenness& a, const Betweenness& b);

private:
    void check(Triple t) const;

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BetweennessHash {
    std::size_t operator()(const Betweenness& b) const;
};

}  // namespace qmlines
