#include "qmlines/fixtures.hpp"

namespace qmlines::fixtures {

namespace {
constexpr int P = 0, S = 1, Q = 2, R = 3;
constexpr int A = 0, B = 1, C = 2;
}  // namespace

DistanceMatrix q4() {
    auto r = [](long v) { return Rational(v); };
    return DistanceMatrix({"p", "s", "q", "r"}, {
                                                    {r(0), r(1), r(1), r(3)},
                                                    {r(3), r(0), r(2), r(3)},
                                                    {r(1), r(2), r(0), r(2)},
                                                    {r(1), r(1), r(2), r(0)},
                                                });
}

Betweenness q4_betweenness() { return Betweenness(4, {{P, Q, R}, {R, P, Q}, {S, Q, P}, {Q, P, S}}); }

std::string q4_matrix_text() {
    return "# Four-point quasi-metric with three lines, none universal\n"
           "p s q r\n"
           "0 1 1 3\n"
           "3 0 2 3\n"
           "1 2 0 2\n"
           "1 1 2 0\n";
}

std::vector<ThreePointRow> three_point_table() {
    return {
        {"{}", Betweenness(3), {"ab", "ab", "ac", "ac", "bc", "bc"}, 3, true},
        {"{abc}", Betweenness(3, {{A, B, C}}), {"abc", "ab", "abc", "ac", "abc", "bc"}, 4, false},
        {"{abc,bca}", Betweenness(3, {{A, B, C}, {B, C, A}}), {"abc", "abc", "abc", "abc", "abc", "bc"}, 2, false},
        {"{abc,cba}", Betweenness(3, {{A, B, C}, {C, B, A}}), {"abc", "abc", "abc", "abc", "abc", "abc"}, 1, true},
        {"{abc,bca,cab}", Betweenness(3, {{A, B, C}, {B, C, A}, {C, A, B}}), {"abc", "abc", "abc", "abc", "abc", "abc"}, 1, false},
    };
}

}  // namespace qmlines::fixtures
