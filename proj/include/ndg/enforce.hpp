// Enforceability of a Steiner forest as a pure Nash equilibrium under some
// separable cost-sharing protocol.  The decision reduces to an exact LP
// over candidate cost shares: the forest is enforceable iff the LP optimum
// equals the forest cost, in which case an explicit protocol can be
// emitted from any budget-balanced optimal share vector.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "ndg/forests.hpp"
#include "ndg/lp.hpp"

namespace ndg {

// Per-player shares on own path edges.  Player index 0/1.
struct CostShares {
    std::array<std::map<int, Rational>, 2> share;  // edge id -> share

    Rational at(int player, int edge) const;
    void set(int player, int edge, Rational v) { share[player][edge] = std::move(v); }
    Rational player_total(int player) const;
    Rational total() const { return player_total(0) + player_total(1); }
    Rational on_edge(int edge) const { return at(0, edge) + at(1, edge); }

    bool operator==(const CostShares&) const = default;
};

// LP(F) with interpretation metadata.  Variables: one per (player, edge of
// that player's path), player 0's edges first, each player's edges in path
// order.  Rows: one capacity row per forest edge, then one deviation row
// per (player, alternative simple path).
struct ForestLp {
    LinearProgram lp;
    std::vector<std::pair<int, int>> vars;       // var index -> (player, edge)
    std::map<std::pair<int, int>, int> var_of;   // (player, edge) -> var index

    struct RowInfo {
        bool capacity = false;
        int edge = -1;    // capacity rows
        int player = -1;  // deviation rows
        int alt = -1;     // index into alts[player]
    };
    std::vector<RowInfo> rows;
    std::array<std::vector<Path>, 2> alts;  // alternative paths (own path excluded)
    Rational forest_cost;

    std::vector<Rational> to_vector(const CostShares& s) const;
    CostShares to_shares(const std::vector<Rational>& x) const;
};

ForestLp build_forest_lp(const Instance& inst, const SteinerForest& f,
                         long long path_cap = default_path_cap);

// The bare linear program (capacity + deviation rows, objective = total).
LinearProgram build_lp(const Instance& inst, const SteinerForest& f,
                       long long path_cap = default_path_cap);

struct EnforceReport {
    Rational lp_optimum;
    Rational forest_cost;
    bool enforceable = false;                       // lp_optimum == forest_cost
    CostShares shares;                              // lexicographic optimum
    std::vector<std::pair<int, Rational>> unpaid;   // edge id -> deficit, ordering of F
};

// Solves LP(F) lexicographically (secondary objective: player 2's total)
// and reports optimum, enforceability, shares and unpaid edges.
EnforceReport check_enforceable(const Instance& inst, const SteinerForest& f,
                                long long path_cap = default_path_cap);

// A separable protocol restricted to this instance's edge set: shares per
// (edge, nonempty subset of players using it).  Subset masks: 1, 2, 3.
struct SeparableProtocol {
    std::map<std::pair<int, int>, std::array<Rational, 2>> table;

    Rational share(int edge, int mask, int player) const;
};

// Materialize the protocol that makes (F, shares) a PNE.  Preconditions:
// shares nonnegative, carried only by path edges, and budget-balanced on F
// (sum of shares on every forest edge equals its cost); otherwise throws
// not_budget_balanced.
SeparableProtocol emit_protocol(const Instance& inst, const SteinerForest& f,
                                const CostShares& shares);

// Equal-split protocol (fixture support).
SeparableProtocol shapley_protocol(const Instance& inst);

// Cost player pays in profile (p1, p2) under a protocol.
Rational profile_player_cost(const Instance& inst, const SeparableProtocol& proto,
                             const Path& p1, const Path& p2, int player);

// Is the profile (f.p1, f.p2) a pure Nash equilibrium under the protocol?
// Checks every unilateral deviation (all simple paths).
bool verify_pne(const Instance& inst, const SteinerForest& f,
                const SeparableProtocol& proto,
                long long path_cap = default_path_cap);

// All PNE profiles (pairs of paths, not necessarily forests).
std::vector<std::pair<Path, Path>> find_pne_profiles(const Instance& inst,
                                                     const SeparableProtocol& proto,
                                                     long long path_cap = default_path_cap);

struct PosResult {
    Rational pos;                 // best enforceable cost / optimal cost
    SteinerForest best;           // cheapest enforceable forest
    EnforceReport report;         // its enforce report
    Rational optimal_cost;
};

// Exact price of stability: walks cost tiers in ascending order; inside the
// first tier with an enforceable forest, returns the witness whose player
// paths are least coupled (fewest shared edges, then fewest shared
// vertices, then lexicographic edge set).  Throws no_enforceable_forest if
// none exists (impossible per theory; indicates an internal bug).
PosResult price_of_stability(const Instance& inst,
                             long long path_cap = default_path_cap);

} // namespace ndg
