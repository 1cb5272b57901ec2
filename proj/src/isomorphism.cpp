#include "qmlines/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qmlines {

Relabeling::Relabeling(std::vector<int> perm) : perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (int p : perm_) {
        if (p < 0 || p >= size() || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("relabeling is not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
}

Relabeling Relabeling::identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return Relabeling(std::move(p));
}

Relabeling Relabeling::inverse() const {
    std::vector<int> inv(perm_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] = i;
    return Relabeling(std::move(inv));
}

Relabeling Relabeling::after(const Relabeling& inner) const {
    if (inner.size() != size()) throw std::invalid_argument("relabeling size mismatch");
    std::vector<int> out(perm_.size());
    for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = (*this)(inner(i));
    return Relabeling(std::move(out));
}

namespace {

Betweenness relabel_unchecked(const Betweenness& b, const std::vector<int>& f) {
    const int n = b.n();
    Betweenness out(n);
    b.for_each([&](Triple t) {
        out.set_bit(triple_index(n, {f[static_cast<std::size_t>(t.x)], f[static_cast<std::size_t>(t.y)],
                                     f[static_cast<std::size_t>(t.z)]}));
    });
    return out;
}

}  // namespace

Betweenness apply_relabeling(const Betweenness& b, const Relabeling& f) {
    if (f.size() != b.n()) throw std::invalid_argument("relabeling size does not match point count");
    return relabel_unchecked(b, f.perm());
}

DistanceMatrix apply_relabeling(const DistanceMatrix& m, const Relabeling& f, bool keep_labels) {
    if (f.size() != m.n()) throw std::invalid_argument("relabeling size does not match point count");
    std::vector<std::string> labels = m.labels();
    if (!keep_labels) {
        for (int i = 0; i < m.n(); ++i) labels[static_cast<std::size_t>(f(i))] = m.labels()[static_cast<std::size_t>(i)];
    }
    DistanceMatrix out(labels);
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) out(f(i), f(j)) = m(i, j);
    return out;
}

CanonicalForm canonical_form(const Betweenness& b) {
    const int n = b.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Betweenness best = b;
    std::vector<int> best_perm = perm;
    while (std::next_permutation(perm.begin(), perm.end())) {
        Betweenness image = relabel_unchecked(b, perm);
        if (image < best) {
            best = std::move(image);
            best_perm = perm;
        }
    }
    return {std::move(best), Relabeling(std::move(best_perm))};
}

std::optional<Relabeling> isomorphism_witness(const Betweenness& from, const Betweenness& to) {
    if (from.n() != to.n()) throw std::invalid_argument("isomorphism needs equal point counts");
    if (from.size() != to.size()) return std::nullopt;
    std::vector<int> perm(static_cast<std::size_t>(from.n()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabel_unchecked(from, perm) == to) return Relabeling(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace qmlines
