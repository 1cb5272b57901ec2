#include <random>

#include "doctest.h"
#include "qmlines/fixtures.hpp"
#include "qmlines/io.hpp"
#include "test_support.hpp"

using namespace qmlines;
using qmlines::testing::r;

TEST_CASE("parse_matrix") {
    auto q4 = parse_matrix(fixtures::q4_matrix_text());
    CHECK(q4 == fixtures::q4());
    CHECK(q4(q4.index_of("p"), q4.index_of("r")) == r(3));
    CHECK(q4(q4.index_of("r"), q4.index_of("p")) == r(1));

    auto two = parse_matrix("a b\n0 1\n1 0");
    CHECK(two.labels() == std::vector<std::string>{"a", "b"});
    CHECK(two(0, 1) == r(1));

    auto frac = parse_matrix("# comment\n\nx y\n0 3/2\n6/4 0\n");
    CHECK(frac(0, 1) == Rational(3, 2));
    CHECK(frac(1, 0) == Rational(3, 2));
}

TEST_CASE("parse_matrix diagnostics") {
    auto error_at = [](const char* text) -> std::pair<int, int> {
        try {
            parse_matrix(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        return {-1, -1};
    };
    CHECK(error_at("a b\n0 0.5\n1 0") == std::pair{2, 3});
    CHECK(error_at("a b\n0 1e2\n1 0") == std::pair{2, 3});
    CHECK(error_at("a b\n0 1 2\n1 0") == std::pair{2, 1});
    CHECK(error_at("a a\n0 1\n1 0") == std::pair{1, 3});
    CHECK(error_at("a b\n0 -1\n1 0") == std::pair{2, 3});
    CHECK(error_at("a b\n0 1/0\n1 0") == std::pair{2, 3});
    CHECK(error_at("a b\n0 1\n") .first == 0);
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
}

TEST_CASE("parse_triples") {
    std::vector<std::string> labels = {"p", "s", "q", "r"};
    CHECK(parse_triples("p q r\nr p q\ns q p\nq p s\n", labels) == fixtures::q4_betweenness());
    CHECK(parse_triples("q p s\np q r\nq p s\n# dup\nr p q\ns q p", labels) == fixtures::q4_betweenness());
    CHECK(parse_triples("", labels).empty());
    CHECK_THROWS_AS(parse_triples("a a b", {"a", "b", "c"}), ParseError);
    CHECK_THROWS_AS(parse_triples("a b x", {"a", "b", "c"}), ParseError);
    CHECK_THROWS_AS(parse_triples("a b", {"a", "b", "c"}), ParseError);

    CHECK(infer_labels("b a c\n# x y z\nc d a\n") == std::vector<std::string>{"b", "a", "c", "d"});
    CHECK(parse_label_list("p,q, r s") == std::vector<std::string>{"p", "q", "r", "s"});
    CHECK_THROWS_AS(parse_label_list("p,p"), ParseError);
}

TEST_CASE("formatting") {
    auto labels = fixtures::q4().labels();
    CHECK(format_relation(fixtures::q4_betweenness(), labels) == "{pqr, sqp, qps, rpq}");
    CHECK(format_point_set(PointSet::of({0, 2}), labels) == "{p,q}");
    CHECK(format_relation(Betweenness(3, {{0, 1, 2}}), {"x1", "x2", "x3"}) == "{(x1,x2,x3)}");
}

TEST_CASE("matrix and triples round trips") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(0, 40), den(1, 12);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 5;
        DistanceMatrix m(default_labels(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) m(i, j) = Rational(num(rng), den(rng));
        CHECK(parse_matrix(format_matrix(m)) == m);

        Betweenness b = qmlines::testing::random_relation(rng, std::max(n, 3), 0.3);
        auto bl = default_labels(b.n());
        CHECK(parse_triples(format_triples(b, bl), bl) == b);
    }
}
