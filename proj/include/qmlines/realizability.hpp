#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmlines/betweenness.hpp"
#include "qmlines/distance_matrix.hpp"
#include "qmlines/isomorphism.hpp"
#include "qmlines/rational.hpp"
#include "qmlines/simplex.hpp"

namespace qmlines {

enum class Variant { Quasi, Metric };

const char* to_string(Variant v);

enum class ConstraintKind {
    Positivity,         // eps - d(i,j) <= 0
    BetweenEquality,    // d(x,z) - d(x,y) - d(y,z) = 0 for xyz in b
    StrictSlack,        // d(x,z) - d(x,y) - d(y,z) + eps <= 0 for xyz not in b
    Symmetry,           // d(i,j) - d(j,i) = 0, metric variant only
    Normalization,      // sum of all d(i,j) = 1
};

struct Constraint {
    ConstraintKind kind;
    std::vector<std::pair<int, Rational>> terms;
    Relation relation;
    Rational constant;
};

/// Linear relaxation of "b is exactly the betweenness of a (quasi-)metric",
/// with one shared margin variable standing in for every strict inequality.
/// Variables: d(i,j) for each ordered pair i != j, then the margin. All are
/// non-negative; the objective maximizes the margin.
struct LinearSystem {
    int n = 0;
    Variant variant = Variant::Quasi;
    std::vector<Constraint> constraints;

    int pair_variable_count() const { return n * (n - 1); }
    int slack_variable() const { return pair_variable_count(); }
    int variable_count() const { return pair_variable_count() + 1; }
    /// Variable index of d(i,j), i != j.
    int pair_variable(int i, int j) const { return i * (n - 1) + (j - (j > i)); }

    std::size_t count(ConstraintKind kind) const;
};

/// Throws std::invalid_argument when b fails consistency_check.
LinearSystem build_realization_system(const Betweenness& b, Variant variant);

enum class FeasibilityStatus { Infeasible, Feasible };

struct FeasibilityOutcome {
    FeasibilityStatus status = FeasibilityStatus::Infeasible;
    std::optional<Rational> optimal_slack;
    std::optional<DistanceMatrix> witness;

    bool realizable() const { return status == FeasibilityStatus::Feasible && optimal_slack->sign() > 0; }
};

/// Exact optimum of the margin. When it is positive the optimal point, scaled
/// to the smallest integer multiple, is returned as a witness matrix.
/// Throws std::invalid_argument for a malformed system.
FeasibilityOutcome maximize_slack(const LinearSystem& system, const std::vector<std::string>& labels = {});

/// build_realization_system + maximize_slack. Any witness is checked with
/// verify_witness before returning; a failed check throws std::logic_error.
FeasibilityOutcome realize(const Betweenness& b, Variant variant, const std::vector<std::string>& labels = {});

/// Zero diagonal and off-diagonal entries in {1..kmax}; small enough for
/// exhaustive search.
class IntegerMatrix {
public:
    IntegerMatrix(int n, std::vector<std::uint8_t> entries) : n_(n), entries_(std::move(entries)) {}
    int n() const { return n_; }
    int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
    DistanceMatrix to_distance_matrix(const std::vector<std::string>& labels = {}) const;

private:
    int n_;
    std::vector<std::uint8_t> entries_;
};

/// Integer fast path of validate_quasi_metric(...).ok() for positive entries.
bool satisfies_triangles(const IntegerMatrix& m);
/// Integer fast path of betweenness_of.
Betweenness betweenness_of(const IntegerMatrix& m);

/// Visits every quasi-metric on n points with off-diagonal entries in
/// {1..kmax}, in odometer order (the last entry varies fastest). The visitor
/// returns false to stop. Throws std::invalid_argument if kmax < 1 or the
/// search space does not fit in 64 bits.
void for_each_bounded_integer_quasi_metric(int n, int kmax, const std::function<bool(const IntegerMatrix&)>& visit);

/// A quasi-metric with entries in {1..kmax} off the diagonal whose
/// betweenness is isomorphic to b. The returned matrix is relabeled so its
/// betweenness equals b exactly.
std::optional<DistanceMatrix> realize_bounded_integer(const Betweenness& b, int kmax,
                                                      const std::vector<std::string>& labels = {});

class Digraph {
public:
    Digraph() = default;
    /// Throws std::invalid_argument for n outside [2, kMaxPoints].
    explicit Digraph(int n);

    int n() const { return n_; }
    /// Throws std::invalid_argument on a loop or out-of-range endpoint.
    void add_arc(int from, int to);
    bool has_arc(int from, int to) const;
    std::vector<std::pair<int, int>> arcs() const;

    bool strongly_connected() const;
    /// Unweighted shortest-path lengths; requires strong connectivity.
    IntegerMatrix distance_matrix() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> out_;  // adjacency masks
};

inline constexpr int kMaxDigraphPoints = 5;

/// Visits every strongly connected digraph on n vertices, arc sets in
/// increasing mask order over the ordered pairs (i,j), i != j.
void for_each_strong_digraph(int n, const std::function<bool(const Digraph&)>& visit);

/// A strongly connected digraph whose shortest-path betweenness is isomorphic
/// to b, relabeled so that it equals b exactly. Throws std::invalid_argument
/// for n > kMaxDigraphPoints.
std::optional<Digraph> realize_digraph(const Betweenness& b);

/// validate_quasi_metric(m) passes and betweenness_of(m) == b exactly.
bool verify_witness(const DistanceMatrix& m, const Betweenness& b);

/// Canonical relation -> first realizing matrix (already relabeled to the
/// canonical relation), over a whole exhaustive search space.
std::map<Betweenness, DistanceMatrix> bounded_integer_index(int n, int kmax);
std::map<Betweenness, Digraph> digraph_index(int n);

/// Arc (i,j) becomes (f(i),f(j)).
Digraph apply_relabeling(const Digraph& g, const Relabeling& f);

}  // namespace qmlines
