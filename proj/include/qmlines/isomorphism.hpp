#pragma once

#include <optional>
#include <vector>

#include "qmlines/betweenness.hpp"
#include "qmlines/distance_matrix.hpp"

namespace qmlines {

/// Bijection on 0..n-1; point i is sent to perm()[i].
class Relabeling {
public:
    Relabeling() = default;
    /// Throws std::invalid_argument unless perm is a permutation of 0..n-1.
    explicit Relabeling(std::vector<int> perm);

    static Relabeling identity(int n);

    int size() const { return static_cast<int>(perm_.size()); }
    int operator()(int i) const { return perm_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& perm() const { return perm_; }

    Relabeling inverse() const;
    /// (this . inner)(i) = this(inner(i)).
    Relabeling after(const Relabeling& inner) const;

    friend bool operator==(const Relabeling&, const Relabeling&) = default;
    friend auto operator<=>(const Relabeling&, const Relabeling&) = default;

private:
    std::vector<int> perm_;
};

/// {(f(x),f(y),f(z)) | (x,y,z) in b}.
Betweenness apply_relabeling(const Betweenness& b, const Relabeling& f);

/// Matrix m' with m'(f(i),f(j)) = m(i,j); labels travel with the entries
/// unless keep_labels is set, in which case position i keeps label i.
DistanceMatrix apply_relabeling(const DistanceMatrix& m, const Relabeling& f, bool keep_labels = true);

struct CanonicalForm {
    Betweenness form;
    /// apply_relabeling(input, relabeling) == form.
    Relabeling relabeling;
};

/// Minimum encoding over all n! relabelings. Ties go to the lexicographically
/// smallest permutation.
CanonicalForm canonical_form(const Betweenness& b);

/// Lexicographically smallest f with apply_relabeling(from, f) == to, if any.
/// Throws std::invalid_argument when the point counts differ.
std::optional<Relabeling> isomorphism_witness(const Betweenness& from, const Betweenness& to);

}  // namespace qmlines
