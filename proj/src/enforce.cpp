#include "ndg/enforce.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "ndg/errors.hpp"

namespace ndg {

Rational CostShares::at(int player, int edge) const {
    auto it = share[player].find(edge);
    return it == share[player].end() ? Rational(0) : it->second;
}

Rational CostShares::player_total(int player) const {
    Rational t;
    for (const auto& [e, v] : share[player]) t += v;
    return t;
}

std::vector<Rational> ForestLp::to_vector(const CostShares& s) const {
    std::vector<Rational> x(vars.size());
    for (size_t j = 0; j < vars.size(); ++j) x[j] = s.at(vars[j].first, vars[j].second);
    return x;
}

CostShares ForestLp::to_shares(const std::vector<Rational>& x) const {
    CostShares s;
    for (size_t j = 0; j < vars.size(); ++j)
        s.set(vars[j].first, vars[j].second, x[j]);
    return s;
}

ForestLp build_forest_lp(const Instance& inst, const SteinerForest& f, long long path_cap) {
    ForestLp out;
    out.forest_cost = f.cost;

    const Path* paths[2] = {&f.p1, &f.p2};
    for (int p = 0; p < 2; ++p)
        for (int e : paths[p]->edges) {
            out.var_of[{p, e}] = (int)out.vars.size();
            out.vars.push_back({p, e});
        }

    const int nvars = (int)out.vars.size();
    out.lp = LinearProgram(nvars);
    for (int j = 0; j < nvars; ++j) out.lp.objective[j] = 1;

    // capacity rows, in forest edge order
    for (int e : f.edges) {
        std::vector<Rational> row(nvars);
        for (int p = 0; p < 2; ++p) {
            auto it = out.var_of.find({p, e});
            if (it != out.var_of.end()) row[it->second] = 1;
        }
        out.lp.add_le(std::move(row), inst.cost[e]);
        out.rows.push_back({true, e, -1, -1});
    }

    // deviation rows: for every alternative simple path P' of player p,
    //   sum of p's shares on P_p \ P'  <=  cost of P' \ P_p
    for (int p = 0; p < 2; ++p) {
        auto all = enumerate_simple_paths(inst.g, inst.source(p), inst.target(p), path_cap);
        for (auto& alt : all) {
            if (alt.edges == paths[p]->edges) continue;  // own path
            out.alts[p].push_back(alt);
        }
        for (int a = 0; a < (int)out.alts[p].size(); ++a) {
            const Path& alt = out.alts[p][a];
            std::vector<Rational> row(nvars);
            Rational rhs;
            for (int e : paths[p]->edges)
                if (!alt.contains_edge(e)) row[out.var_of.at({p, e})] = 1;
            for (int e : alt.edges)
                if (!paths[p]->contains_edge(e)) rhs += inst.cost[e];
            out.lp.add_le(std::move(row), std::move(rhs));
            out.rows.push_back({false, -1, p, a});
        }
    }
    return out;
}

LinearProgram build_lp(const Instance& inst, const SteinerForest& f, long long path_cap) {
    return build_forest_lp(inst, f, path_cap).lp;
}

EnforceReport check_enforceable(const Instance& inst, const SteinerForest& f,
                                long long path_cap) {
    ForestLp flp = build_forest_lp(inst, f, path_cap);

    // secondary objective: player 2's total, to pin a canonical optimum
    std::vector<Rational> secondary(flp.vars.size());
    for (size_t j = 0; j < flp.vars.size(); ++j)
        if (flp.vars[j].first == 1) secondary[j] = 1;

    LpSolution sol = lp_solve_lexicographic(flp.lp, secondary);
    if (sol.status != LpStatus::optimal)
        throw internal_consistency_error("LP(F) not optimal: " + to_string(sol.status));

    EnforceReport rep;
    rep.lp_optimum = sol.objective;
    rep.forest_cost = f.cost;
    rep.enforceable = (sol.objective == f.cost);
    rep.shares = flp.to_shares(sol.values);
    for (int e : f.edges) {
        Rational paid = rep.shares.on_edge(e);
        if (paid < inst.cost[e]) rep.unpaid.push_back({e, inst.cost[e] - paid});
    }
    if (rep.enforceable != rep.unpaid.empty())
        throw internal_consistency_error("unpaid edges disagree with LP optimum");
    return rep;
}

// ==================== protocol construction ====================

Rational SeparableProtocol::share(int edge, int mask, int player) const {
    auto it = table.find({edge, mask});
    if (it == table.end()) return Rational(0);
    return it->second[player];
}

namespace {

int subset_min_player(int mask) { return (mask & 1) ? 0 : 1; }

} // namespace

SeparableProtocol emit_protocol(const Instance& inst, const SteinerForest& f,
                                const CostShares& shares) {
    // validate: shares only on own path edges, nonnegative, budget-balanced on F
    const Path* paths[2] = {&f.p1, &f.p2};
    for (int p = 0; p < 2; ++p)
        for (const auto& [e, v] : shares.share[p]) {
            if (!paths[p]->contains_edge(e))
                throw not_budget_balanced("share of player " + std::to_string(p + 1) +
                                          " on edge outside own path");
            if (v.sign() < 0)
                throw not_budget_balanced("negative share");
        }
    for (int e : f.edges)
        if (shares.on_edge(e) != inst.cost[e])
            throw not_budget_balanced("edge '" + inst.g.edges[e].name +
                                      "' not exactly paid for");

    // usage mask of each edge in the reference profile
    auto used_mask = [&](int e) {
        int mask = 0;
        if (f.p1.contains_edge(e)) mask |= 1;
        if (f.p2.contains_edge(e)) mask |= 2;
        return mask;
    };

    SeparableProtocol proto;
    for (int e = 0; e < inst.g.m(); ++e) {
        int ref = used_mask(e);
        for (int mask = 1; mask <= 3; ++mask) {
            std::array<Rational, 2> sh{Rational(0), Rational(0)};
            for (int p = 0; p < 2; ++p) {
                int bit = 1 << p;
                if (!(mask & bit)) continue;
                if (mask == ref) {
                    sh[p] = shares.at(p, e);
                } else if (mask & ~ref) {
                    // someone joined: first newcomer pays everything
                    if (p == subset_min_player(mask & ~ref)) sh[p] = inst.cost[e];
                } else {
                    // strict subset of the reference users: its first member pays
                    if (p == subset_min_player(mask)) sh[p] = inst.cost[e];
                }
            }
            // budget balance per (edge, subset)
            if (sh[0] + sh[1] != inst.cost[e])
                throw internal_consistency_error("protocol table not budget-balanced");
            proto.table[{e, mask}] = sh;
        }
    }
    return proto;
}

SeparableProtocol shapley_protocol(const Instance& inst) {
    SeparableProtocol proto;
    for (int e = 0; e < inst.g.m(); ++e) {
        Rational c = inst.cost[e];
        Rational half = c / Rational(2);
        proto.table[{e, 1}] = {c, Rational(0)};
        proto.table[{e, 2}] = {Rational(0), c};
        proto.table[{e, 3}] = {half, half};
    }
    return proto;
}

Rational profile_player_cost(const Instance& inst, const SeparableProtocol& proto,
                             const Path& p1, const Path& p2, int player) {
    const Path& own = player == 0 ? p1 : p2;
    Rational total;
    for (int e : own.edges) {
        int mask = 0;
        if (p1.contains_edge(e)) mask |= 1;
        if (p2.contains_edge(e)) mask |= 2;
        total += proto.share(e, mask, player);
    }
    return total;
}

namespace {

bool has_improving_deviation(const Instance& inst, const SeparableProtocol& proto,
                             const Path& p1, const Path& p2, int player,
                             const std::vector<Path>& own_paths) {
    Rational current = profile_player_cost(inst, proto, p1, p2, player);
    for (const auto& alt : own_paths) {
        Rational dev = player == 0 ? profile_player_cost(inst, proto, alt, p2, 0)
                                   : profile_player_cost(inst, proto, p1, alt, 1);
        if (dev < current) return true;
    }
    return false;
}

} // namespace

bool verify_pne(const Instance& inst, const SteinerForest& f,
                const SeparableProtocol& proto, long long path_cap) {
    auto paths1 = enumerate_simple_paths(inst.g, inst.s1, inst.t1, path_cap);
    auto paths2 = enumerate_simple_paths(inst.g, inst.s2, inst.t2, path_cap);
    return !has_improving_deviation(inst, proto, f.p1, f.p2, 0, paths1) &&
           !has_improving_deviation(inst, proto, f.p1, f.p2, 1, paths2);
}

std::vector<std::pair<Path, Path>> find_pne_profiles(const Instance& inst,
                                                     const SeparableProtocol& proto,
                                                     long long path_cap) {
    auto paths1 = enumerate_simple_paths(inst.g, inst.s1, inst.t1, path_cap);
    auto paths2 = enumerate_simple_paths(inst.g, inst.s2, inst.t2, path_cap);
    std::vector<std::pair<Path, Path>> pnes;
    for (const auto& p1 : paths1)
        for (const auto& p2 : paths2)
            if (!has_improving_deviation(inst, proto, p1, p2, 0, paths1) &&
                !has_improving_deviation(inst, proto, p1, p2, 1, paths2))
                pnes.push_back({p1, p2});
    return pnes;
}

// ==================== price of stability ====================

namespace {

// How entangled the two players are inside F: (shared edges, shared vertices)
// between their forest paths.  Used to pick a canonical witness among
// equally cheap enforceable forests — a PoS witness where the players ride
// disjoint paths is the least coupled certificate available.
std::pair<size_t, size_t> path_coupling(const SteinerForest& f) {
    std::set<int> e1(f.p1.edges.begin(), f.p1.edges.end());
    std::set<int> v1(f.p1.verts.begin(), f.p1.verts.end());
    size_t se = 0, sv = 0;
    for (int e : f.p2.edges) se += e1.count(e);
    for (int v : f.p2.verts) sv += v1.count(v);
    return {se, sv};
}

} // namespace

PosResult price_of_stability(const Instance& inst, long long path_cap) {
    auto forests = enumerate_forests(inst, path_cap);
    if (forests.empty())
        throw internal_consistency_error("no Steiner forest exists despite connected pairs");
    Rational opt = forests.front().cost;

    // walk cost tiers in ascending order; the first tier containing an
    // enforceable forest settles the minimum, and within that tier the
    // least coupled forest (ties: lexicographic edge set, i.e. tier order)
    // is returned as the witness
    size_t lo = 0;
    while (lo < forests.size()) {
        size_t hi = lo;
        while (hi < forests.size() && forests[hi].cost == forests[lo].cost) ++hi;
        const SteinerForest* best = nullptr;
        EnforceReport best_rep;
        std::pair<size_t, size_t> best_key;
        for (size_t k = lo; k < hi; ++k) {
            EnforceReport rep = check_enforceable(inst, forests[k], path_cap);
            if (!rep.enforceable) continue;
            auto key = path_coupling(forests[k]);
            if (!best || key < best_key) {
                best = &forests[k];
                best_rep = std::move(rep);
                best_key = key;
            }
        }
        if (best) {
            PosResult res;
            res.optimal_cost = opt;
            res.best = *best;
            res.report = std::move(best_rep);
            if (opt.is_zero()) {
                // a zero-cost optimum is itself enforceable, so the first
                // tier with an enforceable forest must be the zero tier
                if (!best->cost.is_zero())
                    throw internal_consistency_error(
                        "zero-cost optimum but cheapest enforceable forest has positive cost");
                res.pos = 1;
            } else {
                res.pos = best->cost / opt;
            }
            return res;
        }
        lo = hi;
    }
    throw no_enforceable_forest("no enforceable forest found");
}

} // namespace ndg
