#pragma once

#include <random>
#include <vector>

#include "qmlines/betweenness.hpp"
#include "qmlines/distance_matrix.hpp"
#include "qmlines/rational.hpp"

namespace qmlines::testing {

/// Shortest-path closure of random positive weights: always a quasi-metric.
inline DistanceMatrix random_quasi_metric(std::mt19937& rng, int n, int max_weight) {
    std::uniform_int_distribution<int> w(1, max_weight);
    std::vector<std::vector<long>> d(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) d[i][j] = w(rng);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    DistanceMatrix m(default_labels(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Rational(d[i][j]);
    return m;
}

/// Uniformly random subset of the triples on n points (not necessarily consistent).
inline Betweenness random_relation(std::mt19937& rng, int n, double density) {
    std::bernoulli_distribution keep(density);
    Betweenness b(n);
    for (std::size_t i = 0; i < triple_count(n); ++i)
        if (keep(rng)) b.set_bit(i);
    return b;
}

inline Rational r(long v) { return Rational(v); }

}  // namespace qmlines::testing
