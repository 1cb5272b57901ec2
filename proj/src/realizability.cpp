#include "qmlines/realizability.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "qmlines/core.hpp"
#include "qmlines/isomorphism.hpp"
#include "qmlines/point_set.hpp"

namespace qmlines {

const char* to_string(Variant v) { return v == Variant::Quasi ? "quasi" : "metric"; }

std::size_t LinearSystem::count(ConstraintKind kind) const {
    std::size_t c = 0;
    for (const auto& k : constraints) c += k.kind == kind;
    return c;
}

LinearSystem build_realization_system(const Betweenness& b, Variant variant) {
    if (!consistency_check(b)) throw std::invalid_argument("betweenness violates the exclusion rule (xyz excludes yxz and xzy)");
    LinearSystem sys;
    sys.n = b.n();
    sys.variant = variant;
    const int n = sys.n;
    const int eps = sys.slack_variable();

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                sys.constraints.push_back({ConstraintKind::Positivity,
                                           {{eps, Rational(1)}, {sys.pair_variable(i, j), Rational(-1)}},
                                           Relation::LessEqual,
                                           Rational(0)});

    for (std::size_t idx = 0; idx < triple_count(n); ++idx) {
        Triple t = triple_at(n, idx);
        std::vector<std::pair<int, Rational>> terms = {{sys.pair_variable(t.x, t.z), Rational(1)},
                                                       {sys.pair_variable(t.x, t.y), Rational(-1)},
                                                       {sys.pair_variable(t.y, t.z), Rational(-1)}};
        if (b.test_bit(idx)) {
            sys.constraints.push_back({ConstraintKind::BetweenEquality, std::move(terms), Relation::Equal, Rational(0)});
        } else {
            terms.emplace_back(eps, Rational(1));
            sys.constraints.push_back({ConstraintKind::StrictSlack, std::move(terms), Relation::LessEqual, Rational(0)});
        }
    }

    if (variant == Variant::Metric)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                sys.constraints.push_back({ConstraintKind::Symmetry,
                                           {{sys.pair_variable(i, j), Rational(1)}, {sys.pair_variable(j, i), Rational(-1)}},
                                           Relation::Equal,
                                           Rational(0)});

    Constraint norm{ConstraintKind::Normalization, {}, Relation::Equal, Rational(1)};
    for (int v = 0; v < sys.pair_variable_count(); ++v) norm.terms.emplace_back(v, Rational(1));
    sys.constraints.push_back(std::move(norm));
    return sys;
}

namespace {

void check_well_formed(const LinearSystem& sys) {
    if (sys.n < 2) throw std::invalid_argument("linear system needs at least two points");
    std::vector<bool> referenced(static_cast<std::size_t>(sys.variable_count()), false);
    for (const auto& c : sys.constraints)
        for (const auto& [var, coef] : c.terms) {
            if (var < 0 || var >= sys.variable_count())
                throw std::invalid_argument("constraint references undeclared variable " + std::to_string(var));
            referenced[static_cast<std::size_t>(var)] = true;
        }
    for (std::size_t v = 0; v < referenced.size(); ++v)
        if (!referenced[v]) throw std::invalid_argument("variable " + std::to_string(v) + " is never referenced");
    if (sys.count(ConstraintKind::Normalization) != 1)
        throw std::invalid_argument("system must contain exactly one normalization constraint");
}

// Smallest positive integer multiple of a rational vector.
std::vector<Rational> integer_scaled(const std::vector<Rational>& values) {
    mpz_class lcm_den = 1;
    for (const auto& v : values) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.raw().get_den_mpz_t());
    mpz_class gcd_num = 0;
    for (const auto& v : values) mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.raw().get_num_mpz_t());
    mpq_class factor(lcm_den, gcd_num == 0 ? mpz_class(1) : gcd_num);
    factor.canonicalize();
    std::vector<Rational> out;
    for (const auto& v : values) out.emplace_back(mpq_class(v.raw() * factor));
    return out;
}

}  // namespace

FeasibilityOutcome maximize_slack(const LinearSystem& sys, const std::vector<std::string>& labels) {
    check_well_formed(sys);
    LpProblem lp;
    lp.variable_count = sys.variable_count();
    lp.objective.assign(static_cast<std::size_t>(lp.variable_count), Rational(0));
    lp.objective[static_cast<std::size_t>(sys.slack_variable())] = Rational(1);
    for (const auto& c : sys.constraints) lp.rows.push_back({c.terms, c.relation, c.constant});

    LpSolution sol = solve_lp(lp);
    FeasibilityOutcome out;
    if (sol.status == LpStatus::Infeasible) return out;
    if (sol.status == LpStatus::Unbounded) throw std::invalid_argument("slack is unbounded; system lacks positivity rows");

    out.status = FeasibilityStatus::Feasible;
    out.optimal_slack = sol.value;
    if (sol.value.sign() > 0) {
        std::vector<Rational> pairs(sol.point.begin(), sol.point.begin() + sys.pair_variable_count());
        pairs = integer_scaled(pairs);
        DistanceMatrix m(labels.empty() ? default_labels(sys.n) : labels);
        for (int i = 0; i < sys.n; ++i)
            for (int j = 0; j < sys.n; ++j)
                if (i != j) m(i, j) = pairs[static_cast<std::size_t>(sys.pair_variable(i, j))];
        out.witness = std::move(m);
    }
    return out;
}

FeasibilityOutcome realize(const Betweenness& b, Variant variant, const std::vector<std::string>& labels) {
    FeasibilityOutcome out = maximize_slack(build_realization_system(b, variant), labels);
    if (out.witness && !verify_witness(*out.witness, b))
        throw std::logic_error("LP witness does not reproduce the queried betweenness");
    return out;
}

DistanceMatrix IntegerMatrix::to_distance_matrix(const std::vector<std::string>& labels) const {
    DistanceMatrix m(labels.empty() ? default_labels(n_) : labels);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = Rational((*this)(i, j));
    return m;
}

bool satisfies_triangles(const IntegerMatrix& m) {
    const int n = m.n();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (i == k) continue;
            const int direct = m(i, k);
            for (int j = 0; j < n; ++j)
                if (j != i && j != k && direct > m(i, j) + m(j, k)) return false;
        }
    return true;
}

Betweenness betweenness_of(const IntegerMatrix& m) {
    const int n = m.n();
    Betweenness b(n);
    for (std::size_t idx = 0; idx < triple_count(n); ++idx) {
        Triple t = triple_at(n, idx);
        if (m(t.x, t.z) == m(t.x, t.y) + m(t.y, t.z)) b.set_bit(idx);
    }
    return b;
}

void for_each_bounded_integer_quasi_metric(int n, int kmax, const std::function<bool(const IntegerMatrix&)>& visit) {
    if (kmax < 1) throw std::invalid_argument("kmax must be at least 1");
    if (kmax > 255) throw std::invalid_argument("kmax must be at most 255");
    if (n < 2 || n > kMaxPoints) throw std::invalid_argument("point count must lie in [2, 64]");
    const int slots = n * (n - 1);
    unsigned __int128 space = 1;
    for (int s = 0; s < slots; ++s) {
        space *= static_cast<unsigned>(kmax);
        if (space > ~std::uint64_t{0}) throw std::invalid_argument("bounded-integer search space exceeds 2^64");
    }

    std::vector<int> offdiag;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) offdiag.push_back(i * n + j);

    std::vector<std::uint8_t> entries(static_cast<std::size_t>(n * n), 0);
    for (int cell : offdiag) entries[static_cast<std::size_t>(cell)] = 1;
    for (;;) {
        IntegerMatrix m(n, entries);
        if (satisfies_triangles(m) && !visit(m)) return;
        int s = slots - 1;
        for (; s >= 0; --s) {
            auto& e = entries[static_cast<std::size_t>(offdiag[static_cast<std::size_t>(s)])];
            if (e < kmax) {
                ++e;
                break;
            }
            e = 1;
        }
        if (s < 0) return;
    }
}

std::optional<DistanceMatrix> realize_bounded_integer(const Betweenness& b, int kmax, const std::vector<std::string>& labels) {
    if (!consistency_check(b)) throw std::invalid_argument("betweenness violates the exclusion rule (xyz excludes yxz and xzy)");
    std::optional<DistanceMatrix> found;
    for_each_bounded_integer_quasi_metric(b.n(), kmax, [&](const IntegerMatrix& m) {
        Betweenness mb = betweenness_of(m);
        if (mb.size() != b.size()) return true;
        auto f = isomorphism_witness(mb, b);
        if (!f) return true;
        found = apply_relabeling(m.to_distance_matrix(labels), *f);
        return false;
    });
    return found;
}

Digraph::Digraph(int n) : n_(n) {
    if (n < 2 || n > kMaxPoints) throw std::invalid_argument("point count must lie in [2, 64]");
    out_.assign(static_cast<std::size_t>(n), 0);
}

void Digraph::add_arc(int from, int to) {
    if (from < 0 || to < 0 || from >= n_ || to >= n_) throw std::invalid_argument("arc endpoint out of range");
    if (from == to) throw std::invalid_argument("loops are not allowed");
    out_[static_cast<std::size_t>(from)] |= std::uint64_t{1} << to;
}

bool Digraph::has_arc(int from, int to) const { return (out_[static_cast<std::size_t>(from)] >> to) & 1U; }

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (has_arc(i, j)) out.emplace_back(i, j);
    return out;
}

bool Digraph::strongly_connected() const {
    auto reach = [this](bool reverse) {
        std::uint64_t seen = 1, frontier = 1;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (int v = 0; v < n_; ++v) {
                if (reverse) {
                    if (!((seen >> v) & 1U) && (out_[static_cast<std::size_t>(v)] & frontier)) next |= std::uint64_t{1} << v;
                } else if ((frontier >> v) & 1U) {
                    next |= out_[static_cast<std::size_t>(v)];
                }
            }
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == PointSet::full(n_).mask();
    };
    return reach(false) && reach(true);
}

IntegerMatrix Digraph::distance_matrix() const {
    if (!strongly_connected()) throw std::invalid_argument("digraph is not strongly connected");
    std::vector<std::uint8_t> d(static_cast<std::size_t>(n_ * n_), 0);
    for (int s = 0; s < n_; ++s) {
        std::uint64_t seen = std::uint64_t{1} << s, frontier = seen;
        for (std::uint8_t dist = 1; frontier != 0; ++dist) {
            std::uint64_t next = 0;
            for (int v = 0; v < n_; ++v)
                if ((frontier >> v) & 1U) next |= out_[static_cast<std::size_t>(v)];
            next &= ~seen;
            for (int v = 0; v < n_; ++v)
                if ((next >> v) & 1U) d[static_cast<std::size_t>(s * n_ + v)] = dist;
            seen |= next;
            frontier = next;
        }
    }
    return IntegerMatrix(n_, std::move(d));
}

Digraph apply_relabeling(const Digraph& g, const Relabeling& f) {
    if (f.size() != g.n()) throw std::invalid_argument("relabeling size does not match point count");
    Digraph out(g.n());
    for (auto [i, j] : g.arcs()) out.add_arc(f(i), f(j));
    return out;
}

void for_each_strong_digraph(int n, const std::function<bool(const Digraph&)>& visit) {
    if (n < 2 || n > kMaxDigraphPoints)
        throw std::invalid_argument("exhaustive digraph search supports 2..5 points, got " + std::to_string(n));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) pairs.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Digraph g(n);
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if ((mask >> p) & 1U) g.add_arc(pairs[p].first, pairs[p].second);
        if (g.strongly_connected() && !visit(g)) return;
    }
}

std::optional<Digraph> realize_digraph(const Betweenness& b) {
    if (b.n() > kMaxDigraphPoints)
        throw std::invalid_argument("exhaustive digraph search supports at most 5 points");
    if (!consistency_check(b)) throw std::invalid_argument("betweenness violates the exclusion rule (xyz excludes yxz and xzy)");
    std::optional<Digraph> found;
    for_each_strong_digraph(b.n(), [&](const Digraph& g) {
        Betweenness gb = betweenness_of(g.distance_matrix());
        if (gb.size() != b.size()) return true;
        auto f = isomorphism_witness(gb, b);
        if (!f) return true;
        found = apply_relabeling(g, *f);
        return false;
    });
    return found;
}

bool verify_witness(const DistanceMatrix& m, const Betweenness& b) {
    return m.n() == b.n() && validate_quasi_metric(m).ok() && betweenness_of(m) == b;
}

namespace {

// Memoized canonical forms; exhaustive searches revisit the same relations.
class CanonicalCache {
public:
    const CanonicalForm& get(const Betweenness& b) {
        auto it = cache_.find(b);
        if (it == cache_.end()) it = cache_.emplace(b, canonical_form(b)).first;
        return it->second;
    }

private:
    std::unordered_map<Betweenness, CanonicalForm, BetweennessHash> cache_;
};

}  // namespace

std::map<Betweenness, DistanceMatrix> bounded_integer_index(int n, int kmax) {
    std::map<Betweenness, DistanceMatrix> index;
    CanonicalCache cache;
    for_each_bounded_integer_quasi_metric(n, kmax, [&](const IntegerMatrix& m) {
        const CanonicalForm& c = cache.get(betweenness_of(m));
        if (!index.contains(c.form)) index.emplace(c.form, apply_relabeling(m.to_distance_matrix(), c.relabeling));
        return true;
    });
    return index;
}

std::map<Betweenness, Digraph> digraph_index(int n) {
    std::map<Betweenness, Digraph> index;
    CanonicalCache cache;
    for_each_strong_digraph(n, [&](const Digraph& g) {
        const CanonicalForm& c = cache.get(betweenness_of(g.distance_matrix()));
        if (!index.contains(c.form)) index.emplace(c.form, apply_relabeling(g, c.relabeling));
        return true;
    });
    return index;
}

}  // namespace qmlines
