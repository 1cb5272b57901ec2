#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmlines/betweenness.hpp"
#include "qmlines/distance_matrix.hpp"
#include "qmlines/point_set.hpp"

namespace qmlines {

/// Malformed input text. line and column are 1-based; 0 means "whole input".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Header line of labels, then n rows of n integer or fraction tokens.
/// Blank lines and lines starting with '#' are skipped. Decimals are rejected.
DistanceMatrix parse_matrix(std::string_view text);
std::string format_matrix(const DistanceMatrix& m);

/// One "x y z" triple of labels per line; duplicates collapse.
Betweenness parse_triples(std::string_view text, const std::vector<std::string>& labels);
std::string format_triples(const Betweenness& b, const std::vector<std::string>& labels);

/// Labels in order of first appearance in a triples file.
std::vector<std::string> infer_labels(std::string_view triples_text);

/// "p,q,r,s" or "p q r s".
std::vector<std::string> parse_label_list(std::string_view text);

/// "{pqr, rpq}" when every label is one character, "{(p0,p1,p2)}" otherwise.
std::string format_relation(const Betweenness& b, const std::vector<std::string>& labels);
/// "{p,q,r}".
std::string format_point_set(PointSet s, const std::vector<std::string>& labels);

}  // namespace qmlines
