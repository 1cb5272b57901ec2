#include "qmlines/distance_matrix.hpp"

#include <set>
#include <stdexcept>

#include "qmlines/point_set.hpp"

namespace qmlines {

namespace {

void check_labels(const std::vector<std::string>& labels) {
    int n = static_cast<int>(labels.size());
    if (n < 2 || n > kMaxPoints)
        throw std::invalid_argument("point count must lie in [2, 64], got " + std::to_string(n));
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate label '" + l + "'");
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels) : labels_(std::move(labels)) {
    check_labels(labels_);
    entries_.assign(labels_.size() * labels_.size(), Rational(0));
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, const std::vector<std::vector<Rational>>& rows)
    : labels_(std::move(labels)) {
    check_labels(labels_);
    std::size_t n = labels_.size();
    if (rows.size() != n)
        throw std::invalid_argument("matrix has " + std::to_string(rows.size()) + " rows for " +
                                    std::to_string(n) + " labels");
    entries_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw std::invalid_argument("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                        " entries, expected " + std::to_string(n));
        entries_.insert(entries_.end(), rows[i].begin(), rows[i].end());
    }
}

int DistanceMatrix::index_of(const std::string& label) const {
    for (int i = 0; i < n(); ++i)
        if (labels_[static_cast<std::size_t>(i)] == label) return i;
    return -1;
}

DistanceMatrix DistanceMatrix::scaled(const Rational& factor) const {
    if (factor.sign() <= 0) throw std::invalid_argument("scale factor must be positive");
    DistanceMatrix out = *this;
    for (auto& e : out.entries_) e *= factor;
    return out;
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
    return out;
}

}  // namespace qmlines
