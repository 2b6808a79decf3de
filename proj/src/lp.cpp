#include "ndg/lp.hpp"

#include <cassert>
#include <sstream>

#include "ndg/errors.hpp"

namespace ndg {

void LinearProgram::add_le(std::vector<Rational> coef, Rational rhs) {
    if ((int)coef.size() != nvars) throw bad_parameter("row arity mismatch");
    rows.push_back({std::move(coef), Rel::le, std::move(rhs)});
}

void LinearProgram::add_ge(std::vector<Rational> coef, Rational rhs) {
    if ((int)coef.size() != nvars) throw bad_parameter("row arity mismatch");
    for (auto& c : coef) c = -c;
    rows.push_back({std::move(coef), Rel::le, -rhs});
}

void LinearProgram::add_eq(std::vector<Rational> coef, Rational rhs) {
    if ((int)coef.size() != nvars) throw bad_parameter("row arity mismatch");
    rows.push_back({std::move(coef), Rel::eq, std::move(rhs)});
}

std::string to_string(LpStatus s) {
    switch (s) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
    }
    return "?";
}

bool lp_feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
    if ((int)x.size() != lp.nvars) return false;
    for (int j = 0; j < lp.nvars; ++j)
        if (!lp.free_var[j] && x[j].sign() < 0) return false;
    for (const auto& row : lp.rows) {
        Rational lhs;
        for (int j = 0; j < lp.nvars; ++j) lhs += row.coef[j] * x[j];
        if (row.rel == Rel::le ? lhs > row.rhs : lhs != row.rhs) return false;
    }
    return true;
}

std::vector<int> lp_tight_rows(const LinearProgram& lp, const std::vector<Rational>& x) {
    std::vector<int> tight;
    for (int i = 0; i < (int)lp.rows.size(); ++i) {
        Rational lhs;
        for (int j = 0; j < lp.nvars; ++j) lhs += lp.rows[i].coef[j] * x[j];
        if (lhs == lp.rows[i].rhs) tight.push_back(i);
    }
    return tight;
}

Rational lp_objective_value(const LinearProgram& lp, const std::vector<Rational>& x) {
    Rational v;
    for (int j = 0; j < lp.nvars; ++j) v += lp.objective[j] * x[j];
    return v;
}

std::string lp_dump(const LinearProgram& lp) {
    std::ostringstream os;
    os << "max";
    for (int j = 0; j < lp.nvars; ++j) os << " " << lp.objective[j].str() << "*x" << j;
    os << "\n";
    for (const auto& row : lp.rows) {
        bool first = true;
        for (int j = 0; j < lp.nvars; ++j) {
            if (row.coef[j].is_zero()) continue;
            os << (first ? "  " : " + ") << row.coef[j].str() << "*x" << j;
            first = false;
        }
        if (first) os << "  0";
        os << (row.rel == Rel::le ? " <= " : " == ") << row.rhs.str() << "\n";
    }
    for (int j = 0; j < lp.nvars; ++j)
        if (!lp.free_var[j]) os << "  x" << j << " >= 0\n";
    return os.str();
}

LpSolution lp_solve_by_vertex_enumeration(const LinearProgram& lp) {
    for (bool f : lp.free_var)
        if (f)
            throw bad_parameter(
                "lp_solve_by_vertex_enumeration requires nonnegative variables");
    const int n = lp.nvars;
    if (n <= 0) throw bad_parameter("vertex enumeration needs at least one variable");

    // Candidate active constraints: every row as an equality, plus x_j = 0.
    std::vector<const std::vector<Rational>*> lhs;
    std::vector<Rational> rhs;
    std::vector<std::vector<Rational>> bound_rows;
    bound_rows.reserve(n);
    for (const auto& row : lp.rows) {
        lhs.push_back(&row.coef);
        rhs.push_back(row.rhs);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> c(n);
        c[j] = Rational(1);
        bound_rows.push_back(std::move(c));
    }
    for (int j = 0; j < n; ++j) {
        lhs.push_back(&bound_rows[j]);
        rhs.push_back(Rational(0));
    }

    const int k = static_cast<int>(lhs.size());
    if (k < n)
        throw internal_consistency_error("vertex enumeration: underdetermined program");

    bool have = false;
    LpSolution best;
    std::vector<int> sel(n);
    for (int i = 0; i < n; ++i) sel[i] = i;
    while (true) {
        // Solve the selected square system by Gauss-Jordan elimination.
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) a[r][c] = (*lhs[sel[r]])[c];
            a[r][n] = rhs[sel[r]];
        }
        bool singular = false;
        for (int col = 0; col < n && !singular; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (!a[r][col].is_zero()) { piv = r; break; }
            if (piv < 0) { singular = true; break; }
            std::swap(a[col], a[piv]);
            const Rational inv = a[col][col];
            for (int c = col; c <= n; ++c) a[col][c] = a[col][c] / inv;
            for (int r = 0; r < n; ++r) {
                if (r == col || a[r][col].is_zero()) continue;
                const Rational factor = a[r][col];
                for (int c = col; c <= n; ++c)
                    a[r][c] = a[r][c] - factor * a[col][c];
            }
        }
        if (!singular) {
            std::vector<Rational> x(n);
            for (int j = 0; j < n; ++j) x[j] = a[j][n];
            if (lp_feasible(lp, x)) {
                const Rational obj = lp_objective_value(lp, x);
                if (!have || best.objective < obj) {
                    have = true;
                    best.status = LpStatus::optimal;
                    best.values = std::move(x);
                    best.objective = obj;
                }
            }
        }
        // next combination of n indices out of k
        int i = n - 1;
        while (i >= 0 && sel[i] == k - n + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < n; ++j) sel[j] = sel[j - 1] + 1;
    }
    if (!have) {
        // with x >= 0 and no free variables the feasible region is pointed,
        // so a nonempty region must contain a feasible basic point; finding
        // none certifies infeasibility
        best.status = LpStatus::infeasible;
        best.values.clear();
        return best;
    }
    best.tight = lp_tight_rows(lp, best.values);
    return best;
}

// ==================== simplex core ====================
//
// Tableau layout: m constraint rows over `ncols` columns plus an rhs column.
// Column map: structural variables first (free variables split into a
// positive and a negative part), then slack/surplus columns, then
// artificial columns.  Row `m` of the tableau is the pricing row
// (z_j - c_j); entering column = smallest index with negative entry
// (Bland), leaving row = smallest ratio with ties broken by smallest basis
// column (Bland).  All arithmetic exact.

namespace {

struct Tableau {
    int m = 0;                 // constraint rows
    int ncols = 0;             // columns excluding rhs
    std::vector<std::vector<Rational>> t;  // (m+1) x (ncols+1)
    std::vector<int> basis;    // per row: basic column
    int art_begin = 0;         // first artificial column

    Rational& at(int i, int j) { return t[i][j]; }
    Rational& rhs(int i) { return t[i][ncols]; }

    void pivot(int pr, int pc) {
        Rational piv = t[pr][pc];
        assert(piv.sign() != 0);
        for (int j = 0; j <= ncols; ++j) t[pr][j] /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == pr) continue;
            Rational f = t[i][pc];
            if (f.is_zero()) continue;
            for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[pr][j];
        }
        basis[pr] = pc;
    }

    // Bland-rule simplex on the current pricing row.  `allow` filters the
    // columns that may enter.  Returns false on unboundedness.
    bool run(const std::vector<bool>& allow) {
        for (;;) {
            int pc = -1;
            for (int j = 0; j < ncols; ++j) {
                if (!allow[j]) continue;
                if (t[m][j].sign() < 0) { pc = j; break; }
            }
            if (pc < 0) return true;  // optimal
            int pr = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (t[i][pc].sign() <= 0) continue;
                Rational ratio = rhs(i) / t[i][pc];
                if (pr < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[pr])) {
                    pr = i;
                    best = ratio;
                }
            }
            if (pr < 0) return false;  // unbounded
            pivot(pr, pc);
        }
    }
};

} // namespace

LpSolution lp_solve(const LinearProgram& lp) {
    const int n = lp.nvars;
    // Column plan: for each variable one column, plus one extra column per
    // free variable (its negated part); then one slack per <= row; then
    // artificials as needed.
    std::vector<int> neg_col(n, -1);
    int ncols = n;
    for (int j = 0; j < n; ++j)
        if (lp.free_var[j]) neg_col[j] = ncols++;
    const int m = (int)lp.rows.size();
    const int slack_begin = ncols;
    std::vector<int> slack_col(m, -1);
    for (int i = 0; i < m; ++i)
        if (lp.rows[i].rel == Rel::le) slack_col[i] = ncols++;
    const int art_begin = ncols;
    // each row gets an artificial unless its slack can serve as the basis
    // (<= row with nonnegative rhs)
    std::vector<int> art_col(m, -1);
    for (int i = 0; i < m; ++i) {
        bool rhs_neg = lp.rows[i].rhs.sign() < 0;
        if (lp.rows[i].rel == Rel::eq || rhs_neg) art_col[i] = ncols++;
    }

    Tableau tab;
    tab.m = m;
    tab.ncols = ncols;
    tab.art_begin = art_begin;
    tab.t.assign(m + 1, std::vector<Rational>(ncols + 1));
    tab.basis.assign(m, -1);

    for (int i = 0; i < m; ++i) {
        const auto& row = lp.rows[i];
        bool flip = row.rhs.sign() < 0;  // keep rhs nonnegative
        for (int j = 0; j < n; ++j) {
            Rational c = flip ? -row.coef[j] : row.coef[j];
            tab.at(i, j) = c;
            if (neg_col[j] >= 0) tab.at(i, neg_col[j]) = -c;
        }
        if (slack_col[i] >= 0) tab.at(i, slack_col[i]) = flip ? Rational(-1) : Rational(1);
        tab.rhs(i) = flip ? -row.rhs : row.rhs;
        if (art_col[i] >= 0) {
            tab.at(i, art_col[i]) = 1;
            tab.basis[i] = art_col[i];
        } else {
            tab.basis[i] = slack_col[i];
        }
    }

    std::vector<bool> allow(ncols, true);
    bool have_art = false;
    for (int i = 0; i < m; ++i) have_art |= art_col[i] >= 0;

    if (have_art) {
        // Phase 1: maximize -sum(artificials).  Pricing row starts as
        // +1 on artificials, then price out the basic ones.
        for (int j = art_begin; j < ncols; ++j) tab.at(m, j) = 1;
        for (int i = 0; i < m; ++i)
            if (tab.basis[i] >= art_begin)
                for (int j = 0; j <= ncols; ++j) tab.at(m, j) -= tab.at(i, j);
        bool ok = tab.run(allow);
        assert(ok);  // phase 1 objective bounded by 0
        (void)ok;
        if (tab.rhs(m).sign() != 0) {   // -phase1opt != 0 -> infeasible
            LpSolution sol;
            sol.status = LpStatus::infeasible;
            return sol;
        }
        // Drive remaining basic artificials out (their value is 0).
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] < art_begin) continue;
            int pc = -1;
            for (int j = 0; j < art_begin; ++j)
                if (tab.at(i, j).sign() != 0) { pc = j; break; }
            if (pc >= 0) tab.pivot(i, pc);
            // else: redundant row; artificial stays basic at value 0 and is
            // frozen out of pricing below, so it never becomes positive.
        }
        for (int j = art_begin; j < ncols; ++j) allow[j] = false;
    }

    // Phase 2 pricing row: z_j - c_j with c the real objective.
    auto col_cost = [&](int j) -> Rational {
        if (j < n) return lp.objective[j];
        // negated halves of free variables carry -c
        for (int v = 0; v < n; ++v)
            if (neg_col[v] == j) return -lp.objective[v];
        return Rational(0);  // slack or artificial
    };
    for (int j = 0; j <= ncols; ++j) tab.at(m, j) = 0;
    for (int j = 0; j < ncols; ++j) tab.at(m, j) = -col_cost(j);
    for (int i = 0; i < m; ++i) {
        Rational cb = col_cost(tab.basis[i]);
        if (cb.is_zero()) continue;
        for (int j = 0; j <= ncols; ++j) tab.at(m, j) += cb * tab.t[i][j];
    }
    // basic columns must price to zero; enforce exactly
    for (int i = 0; i < m; ++i) tab.at(m, tab.basis[i]) = 0;

    if (!tab.run(allow)) {
        LpSolution sol;
        sol.status = LpStatus::unbounded;
        return sol;
    }

    LpSolution sol;
    sol.status = LpStatus::optimal;
    sol.values.assign(n, Rational(0));
    std::vector<Rational> colval(ncols);
    for (int i = 0; i < m; ++i) colval[tab.basis[i]] = tab.rhs(i);
    for (int j = 0; j < n; ++j) {
        sol.values[j] = colval[j];
        if (neg_col[j] >= 0) sol.values[j] -= colval[neg_col[j]];
    }
    sol.objective = lp_objective_value(lp, sol.values);
    sol.tight = lp_tight_rows(lp, sol.values);
    return sol;
}

LpSolution lp_solve_lexicographic(const LinearProgram& lp,
                                  const std::vector<Rational>& secondary) {
    if ((int)secondary.size() != lp.nvars)
        throw bad_parameter("secondary objective arity mismatch");
    LpSolution first = lp_solve(lp);
    if (first.status != LpStatus::optimal) return first;

    LinearProgram second = lp;
    second.add_eq(lp.objective, first.objective);
    second.objective = secondary;
    LpSolution refined = lp_solve(second);
    if (refined.status == LpStatus::infeasible)
        throw internal_consistency_error(
            "lexicographic refinement lost feasibility");
    if (refined.status == LpStatus::unbounded) return refined;

    LpSolution sol;
    sol.status = LpStatus::optimal;
    sol.values = refined.values;
    sol.objective = first.objective;  // primary optimum by construction
    sol.tight = lp_tight_rows(lp, sol.values);
    return sol;
}

} // namespace ndg
