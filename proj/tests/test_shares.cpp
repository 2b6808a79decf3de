// Edge ordering, pushed-to-the-left normal form, CHANGE transfers, and
// player-2-maximized shares.
#include <random>

#include "doctest.h"
#include "ndg/classes.hpp"
#include "ndg/errors.hpp"
#include "ndg/shares.hpp"

using namespace ndg;

namespace {

// s1 - mid - t1 chain plus a direct s1-t1 shortcut; player 2 disjoint.
// The shortcut's deviation row bounds player 1's two shares by its cost.
Instance chain_with_shortcut() {
    Instance inst;
    int s1 = inst.g.add_vertex("s1"), mid = inst.g.add_vertex("mid");
    int t1 = inst.g.add_vertex("t1");
    int s2 = inst.g.add_vertex("s2"), t2 = inst.g.add_vertex("t2");
    inst.g.add_edge(s1, mid, "a");     // 0
    inst.g.add_edge(mid, t1, "b");     // 1
    inst.g.add_edge(s1, t1, "direct"); // 2
    inst.g.add_edge(s2, t2, "other");  // 3
    inst.cost = {Rational(1), Rational(1), Rational(1), Rational(1)};
    inst.s1 = s1; inst.t1 = t1; inst.s2 = s2; inst.t2 = t2;
    return inst;
}

SteinerForest chain_forest(const Instance& inst) {
    for (const auto& f : enumerate_forests(inst))
        if (f.edges == std::vector<int>{0, 1, 3}) return f;
    REQUIRE(false);
    return {};
}

} // namespace

TEST_CASE("ordering of the published counterexample has a 3-edge middle") {
    Instance inst = fixture_instance("fig1bc1");
    auto opt = optimal_forests(inst);
    REQUIRE(opt.forests.size() == 1);
    EdgeOrdering ord = compute_ordering(inst, opt.forests[0]);
    CHECK(ord.size() == 6);
    CHECK(ord.l1 == 0);  // player 1 starts straight into the shared segment
    CHECK(ord.l2 == 1);  // player 2 approaches over the 5-cost edge
    CHECK(ord.m == 3);   // the 3,2,3 shared middle
    CHECK(ord.r1 == 1);
    CHECK(ord.r2 == 1);

    // ord() is a bijection onto 1..6
    std::vector<bool> seen(ord.size() + 1, false);
    for (int e : ord.order) {
        int k = ord.ord(e);
        REQUIRE(k >= 1);
        REQUIRE(k <= ord.size());
        CHECK(!seen[k]);
        seen[k] = true;
    }
    // middle indices are exactly l1+l2+1 .. l1+l2+m
    CHECK(!ord.in_middle_1based(1));
    CHECK(ord.in_middle_1based(2));
    CHECK(ord.in_middle_1based(4));
    CHECK(!ord.in_middle_1based(5));

    // each player's path edges appear in increasing ordering position
    for (int p = 0; p < 2; ++p) {
        const auto& pe = ord.path_edges[p];
        for (size_t k = 0; k + 1 < pe.size(); ++k)
            CHECK(ord.pos.at(pe[k]) < ord.pos.at(pe[k + 1]));
    }
}

TEST_CASE("disjoint paths produce the empty-middle convention") {
    Instance inst = chain_with_shortcut();
    SteinerForest f = chain_forest(inst);
    EdgeOrdering ord = compute_ordering(inst, f);
    CHECK(ord.m == 0);
    CHECK(ord.l1 == 2);
    CHECK(ord.l2 == 1);
    CHECK(ord.r1 == 0);
    CHECK(ord.r2 == 0);
    CHECK(!ord.swapped_p2);
    // player 1's edges come first, in path order
    CHECK(ord.order[0] == 0);
    CHECK(ord.order[1] == 1);
    CHECK(ord.order[2] == 3);
}

TEST_CASE("pushed-to-the-left detection finds the violating pair") {
    Instance inst = chain_with_shortcut();
    SteinerForest f = chain_forest(inst);

    // mass on the late edge: the shortcut row allows moving it forward
    CostShares late;
    late.set(0, 0, Rational(0));
    late.set(0, 1, Rational(1));
    late.set(1, 3, Rational(1));
    PlCheck chk = is_pushed_left(inst, f, late);
    CHECK(!chk.pushed_left);
    REQUIRE(chk.violation.has_value());
    CHECK(chk.violation->player == 0);
    CHECK(chk.violation->edge_early == 0);
    CHECK(chk.violation->edge_late == 1);
    CHECK(chk.violation->eps == Rational(1));

    // all mass on the early edge: nothing can move left
    CostShares early;
    early.set(0, 0, Rational(1));
    early.set(0, 1, Rational(0));
    early.set(1, 3, Rational(1));
    CHECK(is_pushed_left(inst, f, early).pushed_left);

    // push_left transforms the one into the other
    CostShares pushed = push_left(inst, f, late);
    CHECK(pushed.at(0, 0) == Rational(1));
    CHECK(pushed.at(0, 1) == Rational(0));
    CHECK(pushed.total() == late.total());
}

TEST_CASE("infeasible shares are rejected by the transforms") {
    Instance inst = chain_with_shortcut();
    SteinerForest f = chain_forest(inst);
    CostShares over;
    over.set(0, 0, Rational(2));  // exceeds the capacity of a unit edge
    over.set(0, 1, Rational(0));
    over.set(1, 3, Rational(1));
    CHECK_THROWS_AS(is_pushed_left(inst, f, over), infeasible_shares);
    CHECK_THROWS_AS(push_left(inst, f, over), infeasible_shares);
}

TEST_CASE("push_left reaches a fixpoint preserving the optimum") {
    std::mt19937_64 rng(0x9a9a9a01ULL);
    for (int i = 0; i < 12; ++i) {
        Instance inst = random_instance(rng, 5, 7);
        auto opt = optimal_forests(inst);
        const SteinerForest& f = opt.forests[0];
        EnforceReport rep = check_enforceable(inst, f);
        CostShares pl = push_left(inst, f, rep.shares);
        CHECK(pl.total() == rep.lp_optimum);
        CHECK(is_pushed_left(inst, f, pl).pushed_left);
        CHECK(push_left(inst, f, pl) == pl);  // idempotent
    }
}

TEST_CASE("parallel and serial pushed-left checks agree") {
    std::mt19937_64 rng(0x9a9a9a02ULL);
    for (int i = 0; i < 10; ++i) {
        Instance inst = random_instance(rng, 5, 7);
        auto opt = optimal_forests(inst);
        const SteinerForest& f = opt.forests[0];
        EnforceReport rep = check_enforceable(inst, f);
        PlCheck a = is_pushed_left(inst, f, rep.shares);
        PlCheck b = is_pushed_left_serial(inst, f, rep.shares);
        CHECK(a.pushed_left == b.pushed_left);
        if (a.violation && b.violation) {
            CHECK(a.violation->player == b.violation->player);
            CHECK(a.violation->edge_early == b.violation->edge_early);
            CHECK(a.violation->edge_late == b.violation->edge_late);
            CHECK(a.violation->eps == b.violation->eps);
        } else {
            CHECK(a.violation.has_value() == b.violation.has_value());
        }
    }
}

TEST_CASE("change is bounded by a maximality certificate") {
    Instance inst = fixture_instance("fig1bc1");
    auto opt = optimal_forests(inst);
    const SteinerForest& f = opt.forests[0];
    EnforceReport rep = check_enforceable(inst, f);
    EdgeOrdering ord = compute_ordering(inst, f);
    REQUIRE(ord.m == 3);
    const int first = ord.l1 + ord.l2 + 1;

    for (int j = first; j < first + ord.m; ++j)
        for (int i = j + 1; i < first + ord.m; ++i) {
            ChangeResult cr = change_feasible(inst, f, rep.shares, j, i);
            if (!cr.feasible) {
                CHECK(cr.eps == Rational(0));
                continue;
            }
            CHECK(cr.eps > Rational(0));
            // eps is feasible, eps + delta is not: maximality
            CostShares applied = apply_change(inst, f, rep.shares, j, i, cr.eps);
            CHECK(applied.total() == rep.shares.total());
            CHECK_NOTHROW(is_pushed_left(inst, f, applied));  // still feasible
            Rational bumped = cr.eps + Rational(1, 1000000);
            CHECK_THROWS_AS(apply_change(inst, f, rep.shares, j, i, bumped),
                            infeasible_shares);
        }
}

TEST_CASE("change rejects indices outside the middle segment") {
    Instance inst = fixture_instance("fig1bc1");
    auto opt = optimal_forests(inst);
    const SteinerForest& f = opt.forests[0];
    EnforceReport rep = check_enforceable(inst, f);
    CHECK_THROWS_AS(change_feasible(inst, f, rep.shares, 1, 3),
                    index_out_of_segment);   // 1 is in the left segment
    CHECK_THROWS_AS(change_feasible(inst, f, rep.shares, 3, 6),
                    index_out_of_segment);   // 6 is in the right segment
    CHECK_THROWS_AS(change_feasible(inst, f, rep.shares, 4, 3),
                    index_out_of_segment);   // j < i required
}

TEST_CASE("player-2 maximization on the published counterexample") {
    Instance inst = fixture_instance("fig1bc1");
    auto opt = optimal_forests(inst);
    Max2Result m2 = maximize_for_player2(inst, opt.forests[0]);
    CHECK(m2.lp_optimum == Rational(21));
    CHECK(!m2.enforceable);
    CHECK(m2.shares.player_total(1) == Rational(12));  // the published split
    CHECK(m2.shares.player_total(0) == Rational(9));
    CHECK(m2.two_m_ok);
    CHECK(m2.nc_ok);
    CHECK(m2.first_unpaid_pos >= 0);
    CHECK(m2.change_steps <= 36);  // |F|^2
}

TEST_CASE("empty middle makes player-2 maximization vacuous but valid") {
    Instance inst = chain_with_shortcut();
    SteinerForest f = chain_forest(inst);
    Max2Result m2 = maximize_for_player2(inst, f);
    // the shortcut row caps player 1 at 1, so the chain cannot be fully paid
    CHECK(!m2.enforceable);
    CHECK(m2.change_steps == 0);
    CHECK(m2.two_m_ok);
    CHECK(m2.nc_ok);
    CHECK(m2.shares.player_total(1) == Rational(1));  // its own edge, full
}
