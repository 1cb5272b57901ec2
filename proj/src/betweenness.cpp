#include "qmlines/betweenness.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "qmlines/point_set.hpp"

namespace qmlines {

Betweenness::Betweenness(int n) : n_(n) {
    if (n < 2 || n > kMaxPoints)
        throw std::invalid_argument("point count must lie in [2, 64], got " + std::to_string(n));
    words_.assign((triple_count(n) + 63) / 64, 0);
}

Betweenness::Betweenness(int n, std::initializer_list<Triple> triples) : Betweenness(n) {
    for (const Triple& t : triples) insert(t);
}

void Betweenness::check(Triple t) const {
    auto in_range = [this](int p) { return p >= 0 && p < n_; };
    if (!in_range(t.x) || !in_range(t.y) || !in_range(t.z))
        throw std::invalid_argument("triple index out of range");
    if (t.x == t.y || t.y == t.z || t.x == t.z)
        throw std::invalid_argument("triple has a repeated point");
}

bool Betweenness::contains(Triple t) const {
    check(t);
    return test_bit(triple_index(n_, t));
}

void Betweenness::insert(Triple t) {
    check(t);
    set_bit(triple_index(n_, t));
}

void Betweenness::erase(Triple t) {
    check(t);
    std::size_t i = triple_index(n_, t);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::size_t Betweenness::size() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::vector<Triple> Betweenness::triples() const {
    std::vector<Triple> out;
    for_each([&](Triple t) { out.push_back(t); });
    return out;
}

std::uint64_t Betweenness::encoding() const {
    if (words_.size() > 1) throw std::out_of_range("betweenness encoding exceeds 64 bits");
    return words_.empty() ? 0 : words_[0];
}

Betweenness Betweenness::from_encoding(int n, std::uint64_t bits) {
    Betweenness b(n);
    if (triple_count(n) > 64) throw std::out_of_range("betweenness encoding exceeds 64 bits");
    if (triple_count(n) < 64 && (bits >> triple_count(n)) != 0)
        throw std::invalid_argument("encoding has bits beyond the triple count");
    if (!b.words_.empty()) b.words_[0] = bits;
    return b;
}

std::strong_ordering operator<=>(const Betweenness& a, const Betweenness& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    }
    return std::strong_ordering::equal;
}

std::size_t BetweennessHash::operator()(const Betweenness& b) const {
    std::size_t h = std::hash<int>{}(b.n());
    for (std::uint64_t w : b.words()) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    return h;
}

}  // namespace qmlines
