// Exact linear programming over rationals: dense two-phase simplex with
// Bland's rule.  Deterministic: identical inputs produce identical pivots,
// hence byte-identical solutions.
#pragma once

#include <string>
#include <vector>

#include "ndg/rational.hpp"

namespace ndg {

enum class Rel { le, eq };

struct LpRow {
    std::vector<Rational> coef;
    Rel rel = Rel::le;
    Rational rhs;
};

// Maximization problem.  Variables are x_j >= 0 unless free_var[j] is set,
// in which case x_j is unbounded in both directions.  ">=" rows are
// normalized to "<=" at build time via add_ge.
struct LinearProgram {
    int nvars = 0;
    std::vector<Rational> objective;
    std::vector<LpRow> rows;
    std::vector<bool> free_var;

    explicit LinearProgram(int n = 0)
        : nvars(n), objective(n), free_var(n, false) {}

    void add_le(std::vector<Rational> coef, Rational rhs);
    void add_ge(std::vector<Rational> coef, Rational rhs);  // stored negated as <=
    void add_eq(std::vector<Rational> coef, Rational rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

std::string to_string(LpStatus s);

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> values;   // one per variable, empty unless optimal
    Rational objective;             // value of the (primary) objective
    std::vector<int> tight;         // indices of rows satisfied with equality
};

LpSolution lp_solve(const LinearProgram& lp);

// Optimize lp's objective, then among its optima maximize `secondary`.
// Returned objective is the PRIMARY optimum; values realize both optima;
// tight set refers to lp's own rows.
LpSolution lp_solve_lexicographic(const LinearProgram& lp,
                                  const std::vector<Rational>& secondary);

// Evaluate a candidate point: true iff it satisfies every row and sign
// constraint exactly.
bool lp_feasible(const LinearProgram& lp, const std::vector<Rational>& x);

// Indices of rows x satisfies with equality (x must be feasible to be
// meaningful, but the computation itself is unconditional).
std::vector<int> lp_tight_rows(const LinearProgram& lp, const std::vector<Rational>& x);

Rational lp_objective_value(const LinearProgram& lp, const std::vector<Rational>& x);

// Exponential testing oracle: enumerate all basic points (every nvars-subset
// of {rows} U {x_j = 0}), keep the feasible ones, return the objective
// maximizer.  Requires a bounded program with no free variables (throws
// bad_parameter on free variables); an empty feasible region is reported as
// status infeasible, which is sound because the region is pointed.  For
// cross-checking lp_solve only.
LpSolution lp_solve_by_vertex_enumeration(const LinearProgram& lp);

// Human-readable normalized dump, one row per line.
std::string lp_dump(const LinearProgram& lp);

} // namespace ndg
