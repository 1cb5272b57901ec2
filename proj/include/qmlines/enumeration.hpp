#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qmlines/betweenness.hpp"
#include "qmlines/distance_matrix.hpp"
#include "qmlines/rational.hpp"

namespace qmlines {

/// Subsets of the six triples on the support {0,1,2} that satisfy the
/// exclusion rule, in increasing encoding order.
std::vector<Betweenness> consistent_patterns_on_support();

/// Visits every raw candidate on n points: one consistent pattern per
/// 3-point support, combined. Only n in {3,4} is supported.
void for_each_consistent(int n, const std::function<void(const Betweenness&)>& visit);

struct CanonicalClass {
    Betweenness canonical;
    std::size_t class_size = 0;  // raw candidates with this canonical form
};

struct Enumeration {
    int n = 0;
    std::size_t raw_count = 0;
    std::vector<CanonicalClass> classes;  // increasing canonical encoding
};

/// Deduplicates the raw candidates by canonical form. The result does not
/// depend on the thread count. Throws std::invalid_argument for n not in {3,4}.
Enumeration enumerate_consistent(int n, int threads = 1);

struct ClassificationRecord {
    Betweenness canonical;
    std::size_t class_size = 0;
    int line_count = 0;
    bool has_universal = false;
    bool satisfies_dbe = false;
    bool realizable_quasi = false;
    bool realizable_metric = false;
    std::optional<Rational> quasi_slack;   // absent when the LP is infeasible
    std::optional<Rational> metric_slack;
    std::map<int, bool> realizable_int;    // kmax -> verdict
    bool realizable_digraph = false;
    std::optional<DistanceMatrix> witness; // realizes canonical exactly
};

/// Full classification of every canonical consistent relation on n points.
/// Runs both LPs for every class plus the exhaustive integer and digraph
/// searches. Records come back in increasing canonical encoding.
std::vector<ClassificationRecord> classify(int n, const std::vector<int>& kmax_list, int threads = 1);

struct TheoremReport {
    int n = 4;
    std::size_t raw_candidates = 0;
    std::size_t canonical_classes = 0;
    std::size_t line_filter_survivors = 0;  // no universal line, fewer than n lines
    std::size_t lp_calls = 0;
    std::vector<ClassificationRecord> exceptional_classes;
    Betweenness expected;  // canonical form of the reference relation
    bool matches_q4 = false;
};

/// Finds every quasi-realizable class on four points with no universal line
/// and fewer than four lines, and compares the result with the canonical form
/// of the reference relation. Exceptional records carry the metric, integer
/// (kmax 2 and 3) and digraph verdicts too.
TheoremReport verify_theorem_four_points(const Betweenness& reference, int threads = 1);

}  // namespace qmlines
