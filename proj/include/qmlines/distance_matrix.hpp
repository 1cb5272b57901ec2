#pragma once

#include <string>
#include <vector>

#include "qmlines/rational.hpp"

namespace qmlines {

/// Labeled n x n matrix of exact distances. Construction only checks shape
/// and labels; the quasi-metric axioms are checked by validate_quasi_metric.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    /// Throws std::invalid_argument if the rows are not n x n for the n labels,
    /// if labels repeat, or if n lies outside [2, kMaxPoints].
    DistanceMatrix(std::vector<std::string> labels, const std::vector<std::vector<Rational>>& rows);

    /// n x n zero matrix labelled with the given names.
    explicit DistanceMatrix(std::vector<std::string> labels);

    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    const Rational& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * n() + j)]; }
    Rational& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * n() + j)]; }

    /// Index of a label, or -1.
    int index_of(const std::string& label) const;

    /// Every entry multiplied by a positive factor.
    DistanceMatrix scaled(const Rational& factor) const;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Rational> entries_;
};

/// "a", "b", ... for n <= 26, otherwise "p0", "p1", ...
std::vector<std::string> default_labels(int n);

}  // namespace qmlines
