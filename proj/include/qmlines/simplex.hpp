#pragma once

#include <utility>
#include <vector>

#include "qmlines/rational.hpp"

namespace qmlines {

enum class Relation { Equal, LessEqual, GreaterEqual };

struct LpRow {
    std::vector<std::pair<int, Rational>> terms;  // (variable, coefficient)
    Relation relation = Relation::LessEqual;
    Rational constant;
};

/// maximize objective . x  subject to rows, x >= 0.
struct LpProblem {
    int variable_count = 0;
    std::vector<LpRow> rows;
    std::vector<Rational> objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> point;
    long pivots = 0;
};

/// Two-phase tableau simplex over exact rationals with Bland's least-index
/// rule for both the entering and the leaving variable, so it terminates on
/// degenerate problems.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace qmlines
