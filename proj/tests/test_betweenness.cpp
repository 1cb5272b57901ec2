#include <set>
#include <stdexcept>

#include "doctest.h"
#include "qmlines/betweenness.hpp"

using namespace qmlines;

TEST_CASE("triple ranks follow lexicographic order of distinct triples") {
    for (int n = 3; n <= 6; ++n) {
        std::vector<Triple> lex;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (x != y && y != z && x != z) lex.push_back({x, y, z});
        REQUIRE(lex.size() == triple_count(n));
        for (std::size_t i = 0; i < lex.size(); ++i) {
            CHECK(triple_index(n, lex[i]) == i);
            CHECK(triple_at(n, i) == lex[i]);
        }
    }
}

TEST_CASE("betweenness set operations") {
    Betweenness b(4, {{0, 1, 2}, {3, 2, 1}});
    CHECK(b.size() == 2);
    CHECK(b.contains({0, 1, 2}));
    CHECK_FALSE(b.contains({2, 1, 0}));
    b.insert({0, 1, 2});
    CHECK(b.size() == 2);
    b.erase({0, 1, 2});
    CHECK(b.triples() == std::vector<Triple>{{3, 2, 1}});

    CHECK_THROWS_AS(b.insert({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(b.insert({0, 1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Betweenness(1), std::invalid_argument);
    CHECK(Betweenness(2).empty());
}

TEST_CASE("ordering compares encodings as integers") {
    Betweenness lo = Betweenness::from_encoding(4, 0b1000);
    Betweenness hi = Betweenness::from_encoding(4, 0b0111 | (1u << 20));
    CHECK(lo < hi);
    CHECK(lo.encoding() == 0b1000);

    // Multi-word relations compare from the most significant word down.
    Betweenness a(6), b(6);
    a.set_bit(0);
    b.set_bit(100);
    CHECK(a < b);
    CHECK_THROWS_AS((void)a.encoding(), std::out_of_range);
}
