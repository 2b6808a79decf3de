// Cost-share normal forms: the canonical edge ordering of a forest,
// pushed-to-the-left shares, the CHANGE(j,i) transfer, and shares
// maximized for Player 2.
#pragma once

#include <optional>
#include <string>

#include "ndg/enforce.hpp"

namespace ndg {

// Canonical ordering of F's edges: P1-left, P2-left, middle (= P1 cap P2,
// a contiguous subpath), P1-right, P2-right, each segment increasing along
// its path direction.  P2 is re-oriented if it traverses the middle
// against P1's direction.  Empty middle: the ordering is all of P1 then
// all of P2 (l1 = |P1|, l2 = |P2|, m = r1 = r2 = 0).
struct EdgeOrdering {
    std::vector<int> order;        // position (0-based) -> edge id
    std::map<int, int> pos;        // edge id -> position
    int l1 = 0, l2 = 0, m = 0, r1 = 0, r2 = 0;
    bool swapped_p2 = false;
    // each player's path edges sorted by ordering position
    std::array<std::vector<int>, 2> path_edges;

    int size() const { return (int)order.size(); }
    // 1-based order index of an edge (paper convention)
    int ord(int edge) const { return pos.at(edge) + 1; }
    bool in_middle_1based(int idx) const {
        return idx >= l1 + l2 + 1 && idx <= l1 + l2 + m;
    }
};

EdgeOrdering compute_ordering(const Instance& inst, const SteinerForest& f);

struct PlViolation {
    int player;      // 0/1
    int edge_early;  // receives mass
    int edge_late;   // loses mass
    Rational eps;    // maximal feasible transfer (> 0)
};

struct PlCheck {
    bool pushed_left = false;
    std::optional<PlViolation> violation;
};

// Definition check: no feasible leftward transfer for either player.
// Throws infeasible_shares if the shares violate LP(F).
PlCheck is_pushed_left(const Instance& inst, const SteinerForest& f,
                       const CostShares& shares,
                       long long path_cap = default_path_cap);

// Serial reference for the parallel pair sweep inside is_pushed_left.
PlCheck is_pushed_left_serial(const Instance& inst, const SteinerForest& f,
                              const CostShares& shares,
                              long long path_cap = default_path_cap);

// Left-normalize shares: repeatedly re-maximize early shares over suffix
// windows of each player's path until fixpoint.  Preserves the total
// exactly; output satisfies is_pushed_left.
CostShares push_left(const Instance& inst, const SteinerForest& f,
                     const CostShares& shares,
                     long long path_cap = default_path_cap);

struct ChangeResult {
    bool feasible = false;  // iff eps > 0
    Rational eps;
};

// CHANGE(j,i) for 1-based middle order indices j < i: maximal eps >= 0 so
// that increasing xi_{2,e_i}, xi_{1,e_j} and decreasing xi_{2,e_j},
// xi_{1,e_i} by eps stays LP(F)-feasible.
ChangeResult change_feasible(const Instance& inst, const SteinerForest& f,
                             const CostShares& shares, int j, int i,
                             long long path_cap = default_path_cap);

// Apply CHANGE(j,i) with the given eps (caller obtains eps from
// change_feasible; feasibility is re-checked).
CostShares apply_change(const Instance& inst, const SteinerForest& f,
                        const CostShares& shares, int j, int i,
                        const Rational& eps,
                        long long path_cap = default_path_cap);

struct Max2Result {
    CostShares shares;
    Rational lp_optimum;
    bool enforceable = false;
    bool case_r = false;        // first unpaid edge lies in a right segment
    int first_unpaid_pos = -1;  // 0-based ordering position, -1 if fully paid
    int change_steps = 0;       // CHANGE applications performed
    bool two_m_ok = false;      // player-2 total equals the restricted LP max
    bool nc_ok = false;         // no feasible CHANGE(j,i) remains
    std::string note;           // set when properties are vacuous
};

// Shares maximized for Player 2: lexicographic LP optimum, restricted
// re-maximization of Player 2's total among optima preserving the first
// unpaid edge, then Algorithm Change's double loop.  (2M) and (NC) are
// re-verified post-hoc on the result.
Max2Result maximize_for_player2(const Instance& inst, const SteinerForest& f,
                                long long path_cap = default_path_cap);

} // namespace ndg
