#pragma once

#include <string>
#include <vector>

#include "qmlines/betweenness.hpp"
#include "qmlines/distance_matrix.hpp"
#include "qmlines/point_set.hpp"

namespace qmlines {

struct Violation {
    enum class Kind { NonzeroDiagonal, NonPositive, Triangle };
    Kind kind;
    // NonzeroDiagonal: (i,i). NonPositive: (i,j). Triangle: d(i,k) > d(i,j) + d(j,k),
    // reported as the path (i,j,k).
    int i = 0;
    int j = 0;
    int k = 0;

    std::string describe(const DistanceMatrix& m) const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationResult {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationResult validate_quasi_metric(const DistanceMatrix& m);

/// All (x,y,z) of distinct points with d(x,z) = d(x,y) + d(y,z).
Betweenness betweenness_of(const DistanceMatrix& m);

/// [xy]: points z with d(x,y) = d(x,z) + d(z,y); contains x and y.
PointSet segment(const DistanceMatrix& m, int x, int y);

/// {x,y} together with every z such that zxy, xzy or xyz is in b.
PointSet line_of_pair(const Betweenness& b, int x, int y);

/// Distinct lines of a betweenness, plus the line spanned by each ordered pair.
class LineSet {
public:
    LineSet() = default;
    explicit LineSet(int n) : n_(n), by_pair_(static_cast<std::size_t>(n * n)) {}

    int n() const { return n_; }
    /// Sorted by mask, no duplicates.
    const std::vector<PointSet>& lines() const { return lines_; }
    std::size_t size() const { return lines_.size(); }
    PointSet line(int x, int y) const { return by_pair_[static_cast<std::size_t>(x * n_ + y)]; }

private:
    friend LineSet line_set(const Betweenness& b);
    int n_ = 0;
    std::vector<PointSet> lines_;
    std::vector<PointSet> by_pair_;
};

LineSet line_set(const Betweenness& b);

struct DbeVerdict {
    int line_count = 0;
    bool has_universal = false;
    bool satisfies_dbe = false;
    friend bool operator==(const DbeVerdict&, const DbeVerdict&) = default;
};

/// A universal line, or at least n distinct lines.
DbeVerdict dbe_verdict(const Betweenness& b);

/// No xyz in b has yxz or xzy also in b.
bool consistency_check(const Betweenness& b);

}  // namespace qmlines
