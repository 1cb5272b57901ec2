#include <optional>
#include <random>

#include "doctest.h"
#include "qmlines/simplex.hpp"

using namespace qmlines;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

LpRow row(std::vector<std::pair<int, Rational>> terms, Relation rel, Rational c) { return {std::move(terms), rel, std::move(c)}; }

// Independent oracle: enumerate every basic solution (choose `vars` tight
// constraints among rows and x_i = 0 bounds), solve by exact Gaussian
// elimination, keep feasible ones, take the best objective.
std::optional<Rational> vertex_oracle(const LpProblem& p) {
    const int nv = p.variable_count;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> rhs;
    for (const auto& r : p.rows) {
        std::vector<Rational> a(static_cast<std::size_t>(nv));
        for (const auto& [v, c] : r.terms) a[static_cast<std::size_t>(v)] += c;
        A.push_back(a);
        rhs.push_back(r.constant);
    }
    for (int v = 0; v < nv; ++v) {
        std::vector<Rational> a(static_cast<std::size_t>(nv));
        a[static_cast<std::size_t>(v)] = q(1);
        A.push_back(a);
        rhs.push_back(q(0));
    }
    const int total = static_cast<int>(A.size());
    std::optional<Rational> best;
    for (unsigned mask = 0; mask < (1u << total); ++mask) {
        if (__builtin_popcount(mask) != nv) continue;
        bool includes_equalities = true;
        for (std::size_t i = 0; i < p.rows.size(); ++i)
            if (p.rows[i].relation == Relation::Equal && !((mask >> i) & 1u)) includes_equalities = false;
        if (!includes_equalities) continue;
        std::vector<std::vector<Rational>> M;
        for (int i = 0; i < total; ++i)
            if ((mask >> i) & 1u) {
                auto r = A[static_cast<std::size_t>(i)];
                r.push_back(rhs[static_cast<std::size_t>(i)]);
                M.push_back(r);
            }
        bool singular = false;
        for (int col = 0; col < nv && !singular; ++col) {
            int piv = -1;
            for (int r = col; r < nv; ++r)
                if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].sign() != 0) piv = r;
            if (piv < 0) {
                singular = true;
                break;
            }
            std::swap(M[static_cast<std::size_t>(col)], M[static_cast<std::size_t>(piv)]);
            for (int r = 0; r < nv; ++r) {
                if (r == col) continue;
                Rational f = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                             M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
                for (int k = 0; k <= nv; ++k)
                    M[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -= f * M[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
            }
        }
        if (singular) continue;
        std::vector<Rational> x(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v)
            x[static_cast<std::size_t>(v)] = M[static_cast<std::size_t>(v)][static_cast<std::size_t>(nv)] /
                                             M[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)];
        bool feasible = true;
        for (int v = 0; v < nv; ++v) feasible = feasible && x[static_cast<std::size_t>(v)].sign() >= 0;
        for (std::size_t i = 0; i < p.rows.size() && feasible; ++i) {
            Rational lhs;
            for (int v = 0; v < nv; ++v) lhs += A[i][static_cast<std::size_t>(v)] * x[static_cast<std::size_t>(v)];
            switch (p.rows[i].relation) {
                case Relation::Equal: feasible = lhs == rhs[i]; break;
                case Relation::LessEqual: feasible = lhs <= rhs[i]; break;
                case Relation::GreaterEqual: feasible = lhs >= rhs[i]; break;
            }
        }
        if (!feasible) continue;
        Rational value;
        for (int v = 0; v < nv; ++v) value += p.objective[static_cast<std::size_t>(v)] * x[static_cast<std::size_t>(v)];
        if (!best || value > *best) best = value;
    }
    return best;
}

}  // namespace

TEST_CASE("textbook optimum") {
    LpProblem p{2, {row({{0, q(1)}, {1, q(2)}}, Relation::LessEqual, q(4)), row({{0, q(3)}, {1, q(1)}}, Relation::LessEqual, q(6))}, {q(1), q(1)}};
    auto s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == q(14, 5));
    CHECK(s.point == std::vector<Rational>{q(8, 5), q(6, 5)});
}

TEST_CASE("infeasible, unbounded and negative right-hand sides") {
    LpProblem infeasible{1, {row({{0, q(1)}}, Relation::GreaterEqual, q(2)), row({{0, q(1)}}, Relation::LessEqual, q(1))}, {q(1)}};
    CHECK(solve_lp(infeasible).status == LpStatus::Infeasible);

    LpProblem unbounded{2, {row({{0, q(1)}, {1, q(-1)}}, Relation::LessEqual, q(1))}, {q(1), q(0)}};
    CHECK(solve_lp(unbounded).status == LpStatus::Unbounded);

    LpProblem negative{1, {row({{0, q(-1)}}, Relation::LessEqual, q(-3))}, {q(-1)}};
    auto s = solve_lp(negative);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == q(-3));
}

TEST_CASE("redundant equality rows are dropped") {
    LpProblem p{2, {row({{0, q(1)}, {1, q(1)}}, Relation::Equal, q(1)), row({{0, q(2)}, {1, q(2)}}, Relation::Equal, q(2))}, {q(1), q(0)}};
    auto s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == q(1));
}

TEST_CASE("Beale's cycling example terminates under the least-index rule") {
    LpProblem p{4,
                {row({{0, q(1, 4)}, {1, q(-8)}, {2, q(-1)}, {3, q(9)}}, Relation::LessEqual, q(0)),
                 row({{0, q(1, 2)}, {1, q(-12)}, {2, q(-1, 2)}, {3, q(3)}}, Relation::LessEqual, q(0)),
                 row({{2, q(1)}}, Relation::LessEqual, q(1))},
                {q(3, 4), q(-20), q(1, 2), q(-6)}};
    auto s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == q(5, 4));
}

TEST_CASE("undeclared variables are rejected") {
    LpProblem p{1, {row({{3, q(1)}}, Relation::LessEqual, q(1))}, {q(1)}};
    CHECK_THROWS_AS(solve_lp(p), std::invalid_argument);
}

TEST_CASE("random bounded LPs agree with vertex enumeration") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> rhs(-2, 6);
    std::uniform_int_distribution<int> rel(0, 5);
    int feasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int nv = 2 + trial % 2;
        LpProblem p;
        p.variable_count = nv;
        for (int v = 0; v < nv; ++v) p.objective.push_back(q(coef(rng)));
        const int rows = 2 + trial % 3;
        for (int i = 0; i < rows; ++i) {
            LpRow r;
            for (int v = 0; v < nv; ++v) r.terms.emplace_back(v, q(coef(rng)));
            int k = rel(rng);
            r.relation = k == 0 ? Relation::Equal : k < 3 ? Relation::GreaterEqual : Relation::LessEqual;
            r.constant = q(rhs(rng));
            p.rows.push_back(r);
        }
        // Box keeps every instance bounded.
        for (int v = 0; v < nv; ++v) p.rows.push_back(row({{v, q(1)}}, Relation::LessEqual, q(5)));

        auto s = solve_lp(p);
        auto oracle = vertex_oracle(p);
        REQUIRE(s.status != LpStatus::Unbounded);
        CHECK((s.status == LpStatus::Optimal) == oracle.has_value());
        if (oracle && s.status == LpStatus::Optimal) {
            ++feasible;
            CHECK(s.value == *oracle);
        }
    }
    CHECK(feasible > 50);
}
