#pragma once

#include <string>
#include <vector>

#include "qmlines/betweenness.hpp"
#include "qmlines/distance_matrix.hpp"

namespace qmlines::fixtures {

/// The four-point quasi-metric without the DBE property, points in the order
/// p, s, q, r of its distance table.
DistanceMatrix q4();

/// Its betweenness {pqr, rpq, sqp, qps} on the same index order as q4().
Betweenness q4_betweenness();

/// The matrix file text of q4().
std::string q4_matrix_text();

/// One row of the three-point line table: a relation on {a,b,c} and the
/// expected line of each ordered pair ab, ba, ac, ca, bc, cb.
struct ThreePointRow {
    std::string name;
    Betweenness relation;
    std::vector<std::string> lines;  // e.g. "abc", "ab"
    int line_count;
    bool metric;
};

std::vector<ThreePointRow> three_point_table();

}  // namespace qmlines::fixtures
