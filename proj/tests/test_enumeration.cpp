#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "qmlines/core.hpp"
#include "qmlines/enumeration.hpp"
#include "qmlines/fixtures.hpp"
#include "qmlines/isomorphism.hpp"
#include "qmlines/realizability.hpp"

using namespace qmlines;

namespace {

constexpr int A = 0, B = 1, C = 2;

// Golden values from tests/oracles/derive_constants.py.
constexpr std::size_t kPatterns = 18;
constexpr std::size_t kRawFour = 104976;
constexpr std::size_t kClassesFour = 4455;

// Exclusion rule written directly over triple lists, independent of Betweenness.
bool consistent_by_hand(const std::vector<Triple>& ts) {
    for (const auto& t : ts)
        for (const auto& u : ts)
            if ((u == Triple{t.y, t.x, t.z}) || (u == Triple{t.x, t.z, t.y})) return false;
    return true;
}

std::size_t automorphisms(const Betweenness& b) {
    std::vector<int> perm(static_cast<std::size_t>(b.n()));
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do count += apply_relabeling(b, Relabeling(perm)) == b;
    while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("consistent_patterns_on_support") {
    auto pats = consistent_patterns_on_support();
    CHECK(pats.size() == kPatterns);
    auto has = [&](const Betweenness& b) { return std::find(pats.begin(), pats.end(), b) != pats.end(); };
    CHECK(has(Betweenness(3)));
    for (std::size_t i = 0; i < 6; ++i) CHECK(has(Betweenness::from_encoding(3, 1u << i)));
    CHECK(has(Betweenness(3, {{A, B, C}, {C, B, A}})));
    CHECK(has(Betweenness(3, {{A, B, C}, {B, C, A}, {C, A, B}})));
}

TEST_CASE("support-product enumeration on three points equals filtering all 64 subsets") {
    std::vector<Triple> all;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                if (x != y && y != z && x != z) all.push_back({x, y, z});
    std::set<Betweenness> oracle;
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<Triple> ts;
        for (std::size_t i = 0; i < 6; ++i)
            if ((mask >> i) & 1u) ts.push_back(all[i]);
        if (!consistent_by_hand(ts)) continue;
        Betweenness b(3);
        for (auto t : ts) b.insert(t);
        oracle.insert(b);
    }
    std::set<Betweenness> produced;
    std::size_t raw = 0;
    for_each_consistent(3, [&](const Betweenness& b) {
        produced.insert(b);
        ++raw;
    });
    CHECK(raw == kPatterns);
    CHECK(produced == oracle);
}

TEST_CASE("enumerate_consistent counts, orbit sizes and ordering") {
    auto three = enumerate_consistent(3);
    CHECK(three.raw_count == kPatterns);
    CHECK(three.classes.size() == 5);
    for (const auto& row : fixtures::three_point_table()) {
        auto canon = canonical_form(row.relation).form;
        CHECK(std::any_of(three.classes.begin(), three.classes.end(), [&](const auto& c) { return c.canonical == canon; }));
    }

    auto four = enumerate_consistent(4);
    CHECK(four.raw_count == kRawFour);
    CHECK(four.classes.size() == kClassesFour);
    std::size_t total = 0;
    for (std::size_t i = 0; i < four.classes.size(); ++i) {
        const auto& c = four.classes[i];
        total += c.class_size;
        if (i > 0) CHECK(four.classes[i - 1].canonical < c.canonical);
        if (i % 37 == 0) {
            CHECK(canonical_form(c.canonical).form == c.canonical);
            CHECK(c.class_size * automorphisms(c.canonical) == 24);
        }
    }
    CHECK(total == kRawFour);

    CHECK_THROWS_AS(enumerate_consistent(5), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_consistent(2), std::invalid_argument);
}

TEST_CASE("enumeration is independent of the thread count") {
    auto one = enumerate_consistent(4, 1);
    auto many = enumerate_consistent(4, 4);
    REQUIRE(one.classes.size() == many.classes.size());
    for (std::size_t i = 0; i < one.classes.size(); ++i) {
        CHECK(one.classes[i].canonical == many.classes[i].canonical);
        CHECK(one.classes[i].class_size == many.classes[i].class_size);
    }
}

TEST_CASE("classify on three points") {
    auto records = classify(3, {1, 2});
    REQUIRE(records.size() == 5);
    std::multiset<int> counts;
    std::vector<Betweenness> metric;
    for (const auto& r : records) {
        CHECK(r.realizable_quasi);
        CHECK(r.satisfies_dbe);
        CHECK(r.realizable_digraph);
        REQUIRE(r.witness);
        CHECK(verify_witness(*r.witness, r.canonical));
        CHECK(r.realizable_int.at(2));
        counts.insert(r.line_count);
        if (r.realizable_metric) metric.push_back(canonical_form(r.canonical).form);
    }
    CHECK(counts == std::multiset<int>{1, 1, 2, 3, 4});
    std::sort(metric.begin(), metric.end());
    std::vector<Betweenness> expected = {canonical_form(Betweenness(3)).form,
                                         canonical_form(Betweenness(3, {{A, B, C}, {C, B, A}})).form};
    std::sort(expected.begin(), expected.end());
    CHECK(metric == expected);
    // Only the uniform space has distances in {1}.
    CHECK(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.realizable_int.at(1); }) == 1);
}
