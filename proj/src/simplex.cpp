#include "qmlines/simplex.hpp"

#include <stdexcept>

#include <gmpxx.h>

namespace qmlines {

namespace {

class Tableau {
public:
    // Columns: structural variables, then one slack/surplus per inequality,
    // then one artificial per row whose initial basis is not a slack.
    explicit Tableau(const LpProblem& p) : structural_(p.variable_count) {
        const std::size_t m = p.rows.size();
        int inequalities = 0;
        for (const auto& r : p.rows) inequalities += r.relation != Relation::Equal;

        struct Normalized {
            const LpRow* row;
            bool negate;
            Relation rel;
        };
        std::vector<Normalized> rows;
        int artificials = 0;
        for (const auto& r : p.rows) {
            bool negate = r.constant.sign() < 0;
            Relation rel = r.relation;
            if (negate && rel != Relation::Equal) rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
            rows.push_back({&r, negate, rel});
            artificials += rel != Relation::LessEqual;
        }
        first_artificial_ = structural_ + inequalities;
        columns_ = first_artificial_ + artificials;

        cells_.assign(m, std::vector<mpq_class>(static_cast<std::size_t>(columns_)));
        rhs_.assign(m, 0);
        basis_.assign(m, -1);

        int slack = structural_;
        int artificial = first_artificial_;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& nr = rows[i];
            for (const auto& [var, coef] : nr.row->terms) {
                if (var < 0 || var >= structural_) throw std::invalid_argument("LP term references an undeclared variable");
                cells_[i][static_cast<std::size_t>(var)] += nr.negate ? mpq_class(-coef.raw()) : coef.raw();
            }
            rhs_[i] = nr.negate ? mpq_class(-nr.row->constant.raw()) : nr.row->constant.raw();
            switch (nr.rel) {
                case Relation::LessEqual:
                    cells_[i][static_cast<std::size_t>(slack)] = 1;
                    basis_[i] = slack++;
                    break;
                case Relation::GreaterEqual:
                    cells_[i][static_cast<std::size_t>(slack++)] = -1;
                    cells_[i][static_cast<std::size_t>(artificial)] = 1;
                    basis_[i] = artificial++;
                    break;
                case Relation::Equal:
                    cells_[i][static_cast<std::size_t>(artificial)] = 1;
                    basis_[i] = artificial++;
                    break;
            }
        }
    }

    int columns() const { return columns_; }
    int first_artificial() const { return first_artificial_; }
    long pivots() const { return pivots_; }

    // Maximizes cost . x using only columns < column_limit as entering
    // candidates. Returns false when unbounded.
    bool optimize(const std::vector<mpq_class>& cost, int column_limit) {
        std::vector<mpq_class> reduced = reduced_costs(cost);
        for (;;) {
            int entering = -1;
            for (int j = 0; j < column_limit; ++j)
                if (sgn(reduced[static_cast<std::size_t>(j)]) > 0) {
                    entering = j;
                    break;
                }
            if (entering < 0) return true;

            int leaving = -1;
            mpq_class best_ratio;
            for (std::size_t i = 0; i < cells_.size(); ++i) {
                const mpq_class& a = cells_[i][static_cast<std::size_t>(entering)];
                if (sgn(a) <= 0) continue;
                mpq_class ratio = rhs_[i] / a;
                int c = leaving < 0 ? -1 : cmp(ratio, best_ratio);
                if (c < 0 || (c == 0 && basis_[i] < basis_[static_cast<std::size_t>(leaving)])) {
                    leaving = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) return false;
            pivot(static_cast<std::size_t>(leaving), entering, &reduced);
        }
    }

    mpq_class objective_value(const std::vector<mpq_class>& cost) const {
        mpq_class v = 0;
        for (std::size_t i = 0; i < cells_.size(); ++i) v += cost[static_cast<std::size_t>(basis_[i])] * rhs_[i];
        return v;
    }

    // After a feasible phase one: pivot zero-level artificials out of the
    // basis, dropping rows that are linear combinations of the others.
    void expel_artificials() {
        for (std::size_t i = 0; i < cells_.size();) {
            if (basis_[i] < first_artificial_) {
                ++i;
                continue;
            }
            int column = -1;
            for (int j = 0; j < first_artificial_; ++j)
                if (sgn(cells_[i][static_cast<std::size_t>(j)]) != 0) {
                    column = j;
                    break;
                }
            if (column < 0) {
                cells_.erase(cells_.begin() + static_cast<long>(i));
                rhs_.erase(rhs_.begin() + static_cast<long>(i));
                basis_.erase(basis_.begin() + static_cast<long>(i));
                continue;
            }
            pivot(i, column, nullptr);
            ++i;
        }
    }

    std::vector<mpq_class> primal(int count) const {
        std::vector<mpq_class> x(static_cast<std::size_t>(count));
        for (std::size_t i = 0; i < cells_.size(); ++i)
            if (basis_[i] < count) x[static_cast<std::size_t>(basis_[i])] = rhs_[i];
        return x;
    }

private:
    std::vector<mpq_class> reduced_costs(const std::vector<mpq_class>& cost) const {
        std::vector<mpq_class> r(cost);
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            const mpq_class& cb = cost[static_cast<std::size_t>(basis_[i])];
            if (sgn(cb) == 0) continue;
            for (int j = 0; j < columns_; ++j) {
                const mpq_class& a = cells_[i][static_cast<std::size_t>(j)];
                if (sgn(a) != 0) r[static_cast<std::size_t>(j)] -= cb * a;
            }
        }
        return r;
    }

    void pivot(std::size_t row, int column, std::vector<mpq_class>* reduced) {
        ++pivots_;
        auto& pr = cells_[row];
        const mpq_class inv = 1 / pr[static_cast<std::size_t>(column)];
        for (auto& a : pr)
            if (sgn(a) != 0) a *= inv;
        rhs_[row] *= inv;

        auto eliminate = [&](std::vector<mpq_class>& target, mpq_class* target_rhs) {
            const mpq_class factor = target[static_cast<std::size_t>(column)];
            if (sgn(factor) == 0) return;
            for (int j = 0; j < columns_; ++j) {
                const mpq_class& a = pr[static_cast<std::size_t>(j)];
                if (sgn(a) != 0) target[static_cast<std::size_t>(j)] -= factor * a;
            }
            if (target_rhs != nullptr) *target_rhs -= factor * rhs_[row];
        };
        for (std::size_t i = 0; i < cells_.size(); ++i)
            if (i != row) eliminate(cells_[i], &rhs_[i]);
        if (reduced != nullptr) eliminate(*reduced, nullptr);
        basis_[row] = column;
    }

    int structural_;
    int first_artificial_ = 0;
    int columns_ = 0;
    long pivots_ = 0;
    std::vector<std::vector<mpq_class>> cells_;
    std::vector<mpq_class> rhs_;
    std::vector<int> basis_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
    if (problem.objective.size() != static_cast<std::size_t>(problem.variable_count))
        throw std::invalid_argument("objective length does not match the variable count");

    Tableau t(problem);
    LpSolution out;

    std::vector<mpq_class> phase_one(static_cast<std::size_t>(t.columns()), 0);
    for (int j = t.first_artificial(); j < t.columns(); ++j) phase_one[static_cast<std::size_t>(j)] = -1;
    t.optimize(phase_one, t.columns());
    if (sgn(t.objective_value(phase_one)) < 0) {
        out.status = LpStatus::Infeasible;
        out.pivots = t.pivots();
        return out;
    }
    t.expel_artificials();

    std::vector<mpq_class> cost(static_cast<std::size_t>(t.columns()), 0);
    for (int j = 0; j < problem.variable_count; ++j) cost[static_cast<std::size_t>(j)] = problem.objective[static_cast<std::size_t>(j)].raw();
    bool bounded = t.optimize(cost, t.first_artificial());
    out.pivots = t.pivots();
    if (!bounded) {
        out.status = LpStatus::Unbounded;
        return out;
    }
    out.status = LpStatus::Optimal;
    out.value = Rational(t.objective_value(cost));
    for (auto& v : t.primal(problem.variable_count)) out.point.emplace_back(std::move(v));
    return out;
}

}  // namespace qmlines
