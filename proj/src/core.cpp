#include "qmlines/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmlines {

std::string Violation::describe(const DistanceMatrix& m) const {
    const auto& l = m.labels();
    auto name = [&](int p) { return l[static_cast<std::size_t>(p)]; };
    switch (kind) {
        case Kind::NonzeroDiagonal:
            return "d(" + name(i) + "," + name(i) + ") = " + m(i, i).str() + " is not 0";
        case Kind::NonPositive:
            return "d(" + name(i) + "," + name(j) + ") = " + m(i, j).str() + " is not positive";
        case Kind::Triangle:
            return "triangle (" + name(i) + "," + name(j) + "," + name(k) + "): d(" + name(i) + "," + name(k) +
                   ") = " + m(i, k).str() + " > " + m(i, j).str() + " + " + m(j, k).str();
    }
    return {};
}

ValidationResult validate_quasi_metric(const DistanceMatrix& m) {
    ValidationResult result;
    const int n = m.n();
    for (int i = 0; i < n; ++i) {
        if (m(i, i).sign() != 0) result.violations.push_back({Violation::Kind::NonzeroDiagonal, i, i, i});
        for (int j = 0; j < n; ++j)
            if (i != j && m(i, j).sign() <= 0) result.violations.push_back({Violation::Kind::NonPositive, i, j, j});
    }
    // Triangles with a repeated point are trivial once the diagonal is zero.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (m(i, k) > m(i, j) + m(j, k)) result.violations.push_back({Violation::Kind::Triangle, i, j, k});
            }
    return result;
}

Betweenness betweenness_of(const DistanceMatrix& m) {
    const int n = m.n();
    Betweenness b(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                if (m(x, z) == m(x, y) + m(y, z)) b.insert({x, y, z});
            }
    return b;
}

PointSet segment(const DistanceMatrix& m, int x, int y) {
    if (x == y) throw std::invalid_argument("segment needs two distinct points");
    PointSet s;
    for (int z = 0; z < m.n(); ++z)
        if (m(x, y) == m(x, z) + m(z, y)) s.insert(z);
    return s;
}

PointSet line_of_pair(const Betweenness& b, int x, int y) {
    if (x == y) throw std::invalid_argument("line needs two distinct points");
    PointSet s = PointSet::of({x, y});
    for (int z = 0; z < b.n(); ++z) {
        if (z == x || z == y) continue;
        if (b.contains({z, x, y}) || b.contains({x, z, y}) || b.contains({x, y, z})) s.insert(z);
    }
    return s;
}

LineSet line_set(const Betweenness& b) {
    const int n = b.n();
    LineSet ls(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            PointSet l = line_of_pair(b, x, y);
            ls.by_pair_[static_cast<std::size_t>(x * n + y)] = l;
            ls.lines_.push_back(l);
        }
    std::sort(ls.lines_.begin(), ls.lines_.end());
    ls.lines_.erase(std::unique(ls.lines_.begin(), ls.lines_.end()), ls.lines_.end());
    return ls;
}

DbeVerdict dbe_verdict(const Betweenness& b) {
    LineSet ls = line_set(b);
    DbeVerdict v;
    v.line_count = static_cast<int>(ls.size());
    v.has_universal = std::any_of(ls.lines().begin(), ls.lines().end(),
                                  [&](PointSet l) { return l == PointSet::full(b.n()); });
    v.satisfies_dbe = v.has_universal || v.line_count >= b.n();
    return v;
}

bool consistency_check(const Betweenness& b) {
    bool ok = true;
    b.for_each([&](Triple t) {
        if (b.contains({t.y, t.x, t.z}) || b.contains({t.x, t.z, t.y})) ok = false;
    });
    return ok;
}

}  // namespace qmlines
