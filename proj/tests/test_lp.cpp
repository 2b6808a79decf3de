// Exact simplex: pinned small programs, the vertex-enumeration oracle, and
// an LP-duality cross check (two independent ways to certify an optimum).
#include <random>
#include <vector>

#include "doctest.h"
#include "ndg/errors.hpp"
#include "ndg/lp.hpp"

using namespace ndg;

namespace {

LinearProgram random_boxed_lp(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nd(2, 4), rows(1, 5), coef(-4, 6), box(1, 12),
        obj(-3, 8);
    const int n = nd(rng);
    LinearProgram lp(n);
    for (int j = 0; j < n; ++j) lp.objective[j] = Rational(obj(rng));
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> e(n);
        e[j] = Rational(1);
        lp.add_le(std::move(e), Rational(box(rng)));
    }
    const int extra = rows(rng);
    for (int r = 0; r < extra; ++r) {
        std::vector<Rational> row(n);
        for (int j = 0; j < n; ++j) row[j] = Rational(coef(rng));
        lp.add_le(std::move(row), Rational(box(rng)));
    }
    return lp;
}

} // namespace

TEST_CASE("simplex solves pinned programs") {
    SUBCASE("max x+y subject to x+y <= 1") {
        LinearProgram lp(2);
        lp.objective = {Rational(1), Rational(1)};
        lp.add_le({Rational(1), Rational(1)}, Rational(1));
        LpSolution s = lp_solve(lp);
        REQUIRE(s.status == LpStatus::optimal);
        CHECK(s.objective == Rational(1));
    }
    SUBCASE("equality row pins the optimum") {
        LinearProgram lp(2);
        lp.objective = {Rational(3), Rational(1)};
        lp.add_eq({Rational(1), Rational(1)}, Rational(2));
        lp.add_le({Rational(1), Rational(0)}, Rational(1, 2));
        LpSolution s = lp_solve(lp);
        REQUIRE(s.status == LpStatus::optimal);
        CHECK(s.objective == Rational(3) * Rational(1, 2) + Rational(3, 2));
        CHECK(s.values[0] == Rational(1, 2));
        CHECK(s.values[1] == Rational(3, 2));
    }
    SUBCASE("infeasible program is reported") {
        LinearProgram lp(1);
        lp.objective = {Rational(1)};
        lp.add_ge({Rational(1)}, Rational(3));
        lp.add_le({Rational(1)}, Rational(2));
        CHECK(lp_solve(lp).status == LpStatus::infeasible);
    }
    SUBCASE("unbounded program is reported") {
        LinearProgram lp(1);
        lp.objective = {Rational(1)};
        lp.add_ge({Rational(1)}, Rational(0));
        CHECK(lp_solve(lp).status == LpStatus::unbounded);
    }
    SUBCASE("fractional data stays exact") {
        // max x subject to (1/3)x <= 1/7  ->  x = 3/7
        LinearProgram lp(1);
        lp.objective = {Rational(1)};
        lp.add_le({Rational(1, 3)}, Rational(1, 7));
        LpSolution s = lp_solve(lp);
        REQUIRE(s.status == LpStatus::optimal);
        CHECK(s.objective == Rational(3, 7));
    }
}

TEST_CASE("lexicographic solve breaks ties by the secondary objective") {
    // max x+y subject to x+y <= 1: every point on the segment is optimal;
    // secondary max y must pick (0, 1)
    LinearProgram lp(2);
    lp.objective = {Rational(1), Rational(1)};
    lp.add_le({Rational(1), Rational(1)}, Rational(1));
    LpSolution s = lp_solve_lexicographic(lp, {Rational(0), Rational(1)});
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == Rational(1));
    CHECK(s.values[0] == Rational(0));
    CHECK(s.values[1] == Rational(1));

    // and the opposite secondary picks (1, 0)
    LpSolution t = lp_solve_lexicographic(lp, {Rational(1), Rational(0)});
    REQUIRE(t.status == LpStatus::optimal);
    CHECK(t.values[0] == Rational(1));
    CHECK(t.values[1] == Rational(0));
}

TEST_CASE("feasibility and tight-row helpers") {
    LinearProgram lp(2);
    lp.objective = {Rational(1), Rational(0)};
    lp.add_le({Rational(1), Rational(1)}, Rational(2));
    lp.add_le({Rational(1), Rational(-1)}, Rational(0));
    CHECK(lp_feasible(lp, {Rational(1), Rational(1)}));
    CHECK(!lp_feasible(lp, {Rational(3), Rational(0)}));
    CHECK(!lp_feasible(lp, {Rational(-1), Rational(0)}));  // nonnegativity
    // both rows hold with equality at (1, 1)
    auto tight = lp_tight_rows(lp, {Rational(1), Rational(1)});
    REQUIRE(tight.size() == 2);
    CHECK(tight[0] == 0);
    CHECK(tight[1] == 1);
    // only the second row is tight at the origin
    auto origin = lp_tight_rows(lp, {Rational(0), Rational(0)});
    REQUIRE(origin.size() == 1);
    CHECK(origin[0] == 1);
    CHECK(lp_objective_value(lp, {Rational(1), Rational(1)}) == Rational(1));
}

TEST_CASE("simplex agrees with vertex enumeration on random boxed programs") {
    std::mt19937_64 rng(0xfeedbead01ULL);
    for (int i = 0; i < 30; ++i) {
        LinearProgram lp = random_boxed_lp(rng);
        LpSolution a = lp_solve(lp);
        LpSolution b = lp_solve_by_vertex_enumeration(lp);
        REQUIRE(a.status == LpStatus::optimal);  // 0 is always feasible here
        REQUIRE(b.status == LpStatus::optimal);
        CHECK(a.objective == b.objective);
        CHECK(lp_feasible(lp, a.values));
        CHECK(lp_feasible(lp, b.values));
    }
}

TEST_CASE("simplex optimum matches the optimum of the explicit dual") {
    // strong duality computed two ways: max c'x st Ax <= b, x >= 0 equals
    // min b'y st A'y >= c, y >= 0; the dual is solved as max of -b'y
    std::mt19937_64 rng(0xfeedbead02ULL);
    for (int i = 0; i < 15; ++i) {
        LinearProgram lp = random_boxed_lp(rng);
        const int n = lp.nvars;
        const int m = static_cast<int>(lp.rows.size());

        LinearProgram dual(m);
        for (int r = 0; r < m; ++r) dual.objective[r] = -lp.rows[r].rhs;
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> col(m);
            for (int r = 0; r < m; ++r) col[r] = lp.rows[r].coef[j];
            dual.add_ge(std::move(col), lp.objective[j]);
        }

        LpSolution p = lp_solve(lp);
        LpSolution d = lp_solve(dual);
        REQUIRE(p.status == LpStatus::optimal);
        REQUIRE(d.status == LpStatus::optimal);
        CHECK(p.objective == -d.objective);
    }
}

TEST_CASE("degenerate and redundant rows do not break the solver") {
    LinearProgram lp(2);
    lp.objective = {Rational(1), Rational(1)};
    lp.add_le({Rational(1), Rational(0)}, Rational(1));
    lp.add_le({Rational(1), Rational(0)}, Rational(1));  // duplicate
    lp.add_le({Rational(2), Rational(0)}, Rational(2));  // scaled duplicate
    lp.add_le({Rational(0), Rational(1)}, Rational(1));
    lp.add_le({Rational(1), Rational(1)}, Rational(2));  // tight at optimum
    LpSolution s = lp_solve(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == Rational(2));
    CHECK(s.values[0] == Rational(1));
    CHECK(s.values[1] == Rational(1));
}
