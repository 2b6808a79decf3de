#include "ndg/shares.hpp"

#include <algorithm>

#include "ndg/errors.hpp"

#ifdef NDG_HAVE_OPENMP
#include <omp.h>
#endif

namespace ndg {

// ==================== edge ordering ====================

namespace {

std::vector<int> path_order_positions(const Path& p, const std::map<int, int>& pos) {
    std::vector<int> e = p.edges;
    std::sort(e.begin(), e.end(), [&](int a, int b) { return pos.at(a) < pos.at(b); });
    return e;
}

} // namespace

EdgeOrdering compute_ordering(const Instance& inst, const SteinerForest& f) {
    EdgeOrdering o;
    const Path& p1 = f.p1;
    Path p2 = f.p2;

    std::vector<char> in_p2(inst.g.m(), 0);
    for (int e : p2.edges) in_p2[e] = 1;

    // locate the shared segment along p1
    int first = -1, last = -1;
    for (int k = 0; k < (int)p1.edges.size(); ++k) {
        if (!in_p2[p1.edges[k]]) continue;
        if (first < 0) first = k;
        last = k;
    }

    if (first < 0) {
        // empty middle: ordering is all of P1 then all of P2
        o.order = p1.edges;
        o.order.insert(o.order.end(), p2.edges.begin(), p2.edges.end());
        o.l1 = (int)p1.edges.size();
        o.l2 = (int)p2.edges.size();
        o.m = o.r1 = o.r2 = 0;
    } else {
        // the shared edges must form one contiguous block of p1
        for (int k = first; k <= last; ++k)
            if (!in_p2[p1.edges[k]])
                throw internal_consistency_error("shared segment not contiguous in P1");
        std::vector<int> middle(p1.edges.begin() + first, p1.edges.begin() + last + 1);

        // orient p2 so it traverses the middle in p1's direction: p1 enters
        // the middle at vertex p1.verts[first]; p2 must do the same.
        int middle_start = p1.verts[first];
        int p2_first = -1, p2_last = -1;
        for (int k = 0; k < (int)p2.edges.size(); ++k) {
            bool shared = std::find(middle.begin(), middle.end(), p2.edges[k]) != middle.end();
            if (!shared) continue;
            if (p2_first < 0) p2_first = k;
            p2_last = k;
        }
        for (int k = p2_first; k <= p2_last; ++k) {
            bool shared = std::find(middle.begin(), middle.end(), p2.edges[k]) != middle.end();
            if (!shared)
                throw internal_consistency_error("shared segment not contiguous in P2");
        }
        if (p2.verts[p2_first] != middle_start) {
            // p2 meets the middle from the far end: swap s2/t2
            std::reverse(p2.verts.begin(), p2.verts.end());
            std::reverse(p2.edges.begin(), p2.edges.end());
            o.swapped_p2 = true;
            p2_first = (int)p2.edges.size() - 1 - p2_last;
            if (p2.verts[p2_first] != middle_start)
                throw internal_consistency_error("cannot orient P2 along the middle");
        }

        std::vector<int> l1(p1.edges.begin(), p1.edges.begin() + first);
        std::vector<int> r1(p1.edges.begin() + last + 1, p1.edges.end());
        std::vector<int> l2, r2;
        bool seen_mid = false;
        for (int e : p2.edges) {
            bool shared = std::find(middle.begin(), middle.end(), e) != middle.end();
            if (shared) { seen_mid = true; continue; }
            (seen_mid ? r2 : l2).push_back(e);
        }

        o.order = l1;
        o.order.insert(o.order.end(), l2.begin(), l2.end());
        o.order.insert(o.order.end(), middle.begin(), middle.end());
        o.order.insert(o.order.end(), r1.begin(), r1.end());
        o.order.insert(o.order.end(), r2.begin(), r2.end());
        o.l1 = (int)l1.size();
        o.l2 = (int)l2.size();
        o.m = (int)middle.size();
        o.r1 = (int)r1.size();
        o.r2 = (int)r2.size();
    }

    if ((int)o.order.size() != (int)f.edges.size())
        throw internal_consistency_error("ordering does not cover F");
    for (int k = 0; k < (int)o.order.size(); ++k) o.pos[o.order[k]] = k;

    o.path_edges[0] = path_order_positions(f.p1, o.pos);
    o.path_edges[1] = path_order_positions(f.p2, o.pos);
    return o;
}

// ==================== epsilon machinery ====================

namespace {

// Maximal eps >= 0 such that shares + eps * dir stays LP(F)-feasible,
// where dir is a sparse +-1 direction over (player, edge) variables.
// Solved as a literal one-variable LP.
Rational max_epsilon(const ForestLp& flp, const CostShares& cur,
                     const std::vector<std::pair<std::pair<int, int>, int>>& dir) {
    std::vector<Rational> x = flp.to_vector(cur);

    LinearProgram lp(1);
    lp.objective[0] = 1;
    for (size_t r = 0; r < flp.lp.rows.size(); ++r) {
        const auto& row = flp.lp.rows[r];
        Rational net, lhs;
        for (int j = 0; j < flp.lp.nvars; ++j)
            if (!row.coef[j].is_zero()) lhs += row.coef[j] * x[j];
        for (const auto& [pe, d] : dir) {
            auto it = flp.var_of.find(pe);
            if (it == flp.var_of.end()) continue;
            net += row.coef[it->second] * Rational(d);
        }
        if (net.sign() > 0) lp.add_le({net}, row.rhs - lhs);
    }
    // decreasing coordinates must stay nonnegative
    for (const auto& [pe, d] : dir)
        if (d < 0) lp.add_le({Rational(1)}, cur.at(pe.first, pe.second));

    LpSolution sol = lp_solve(lp);
    if (sol.status == LpStatus::unbounded)
        throw internal_consistency_error("epsilon LP unbounded");
    if (sol.status != LpStatus::optimal)
        throw internal_consistency_error("epsilon LP infeasible at a feasible point");
    return sol.objective;
}

CostShares add_direction(const CostShares& s,
                         const std::vector<std::pair<std::pair<int, int>, int>>& dir,
                         const Rational& eps) {
    CostShares out = s;
    for (const auto& [pe, d] : dir)
        out.set(pe.first, pe.second, out.at(pe.first, pe.second) + Rational(d) * eps);
    return out;
}

void require_feasible(const ForestLp& flp, const CostShares& shares) {
    if (!lp_feasible(flp.lp, flp.to_vector(shares)))
        throw infeasible_shares("shares violate LP(F)");
}

} // namespace

// ==================== pushed-to-the-left ====================

namespace {

PlCheck pl_check_impl(const Instance& inst, const SteinerForest& f,
                      const CostShares& shares, long long path_cap, bool parallel) {
    ForestLp flp = build_forest_lp(inst, f, path_cap);
    require_feasible(flp, shares);
    EdgeOrdering ord = compute_ordering(inst, f);

    // candidate pairs in deterministic order: player, then (early, late)
    struct Pair { int player, e_early, e_late; };
    std::vector<Pair> pairs;
    for (int p = 0; p < 2; ++p) {
        const auto& pe = ord.path_edges[p];
        for (size_t a = 0; a < pe.size(); ++a)
            for (size_t b = a + 1; b < pe.size(); ++b)
                pairs.push_back({p, pe[a], pe[b]});
    }

    std::vector<Rational> eps(pairs.size());
    auto handle = [&](int k) {
        const auto& pr = pairs[k];
        if (shares.at(pr.player, pr.e_late).is_zero()) return;  // nothing to move
        eps[k] = max_epsilon(flp, shares,
                             {{{pr.player, pr.e_early}, +1}, {{pr.player, pr.e_late}, -1}});
    };

    if (parallel) {
#ifdef NDG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int k = 0; k < (int)pairs.size(); ++k) handle(k);
    } else {
        for (int k = 0; k < (int)pairs.size(); ++k) handle(k);
    }

    for (int k = 0; k < (int)pairs.size(); ++k) {
        if (eps[k].sign() > 0) {
            PlCheck res;
            res.pushed_left = false;
            res.violation = PlViolation{pairs[k].player, pairs[k].e_early,
                                        pairs[k].e_late, eps[k]};
            return res;
        }
    }
    PlCheck res;
    res.pushed_left = true;
    return res;
}

} // namespace

PlCheck is_pushed_left(const Instance& inst, const SteinerForest& f,
                       const CostShares& shares, long long path_cap) {
    return pl_check_impl(inst, f, shares, path_cap, true);
}

PlCheck is_pushed_left_serial(const Instance& inst, const SteinerForest& f,
                              const CostShares& shares, long long path_cap) {
    return pl_check_impl(inst, f, shares, path_cap, false);
}

// ==================== push_left ====================

namespace {

// Lexicographically re-maximize player p's shares over the suffix window
// starting at window_begin (an index into ord.path_edges[p]), holding all
// other coordinates fixed and preserving the window sum.  Returns the
// updated shares.
CostShares lex_window(const ForestLp& flp, const EdgeOrdering& ord,
                      const CostShares& cur, int p, int window_begin) {
    const auto& pe = ord.path_edges[p];
    std::vector<int> window(pe.begin() + window_begin, pe.end());
    if (window.empty()) return cur;

    Rational window_sum;
    for (int e : window) window_sum += cur.at(p, e);

    const int n = flp.lp.nvars;
    std::vector<char> in_window(n, 0);
    for (int e : window) in_window[flp.var_of.at({p, e})] = 1;

    // base LP: LP(F) rows + pins for every non-window coordinate + window sum
    LinearProgram base = flp.lp;
    std::vector<Rational> x = flp.to_vector(cur);
    for (int j = 0; j < n; ++j) {
        if (in_window[j]) continue;
        std::vector<Rational> row(n);
        row[j] = 1;
        base.add_eq(std::move(row), x[j]);
    }
    {
        std::vector<Rational> row(n);
        for (int e : window) row[flp.var_of.at({p, e})] = 1;
        base.add_eq(std::move(row), window_sum);
    }

    // lexicographic maximization along the window
    CostShares out = cur;
    for (int e : window) {
        int var = flp.var_of.at({p, e});
        for (auto& c : base.objective) c = 0;
        base.objective[var] = 1;
        LpSolution sol = lp_solve(base);
        if (sol.status != LpStatus::optimal)
            throw internal_consistency_error("window LP not optimal");
        std::vector<Rational> pin(n);
        pin[var] = 1;
        base.add_eq(std::move(pin), sol.objective);
        out.set(p, e, sol.objective);
    }
    return out;
}

} // namespace

CostShares push_left(const Instance& inst, const SteinerForest& f,
                     const CostShares& shares, long long path_cap) {
    ForestLp flp = build_forest_lp(inst, f, path_cap);
    require_feasible(flp, shares);
    EdgeOrdering ord = compute_ordering(inst, f);

    CostShares cur = shares;
    const int pass_cap = 4 * (int)f.edges.size() * (int)f.edges.size() + 8;
    for (int pass = 0; pass < pass_cap; ++pass) {
        bool changed = false;
        for (int p = 0; p < 2; ++p) {
            const int len = (int)ord.path_edges[p].size();
            for (int alpha = 0; alpha < len; ++alpha) {
                CostShares next = lex_window(flp, ord, cur, p, alpha);
                if (!(next == cur)) {
                    cur = next;
                    changed = true;
                }
            }
        }
        if (!changed) return cur;
    }
    throw internal_consistency_error("push_left did not reach a fixpoint");
}

// ==================== CHANGE(j, i) ====================

namespace {

std::vector<std::pair<std::pair<int, int>, int>> change_direction(const EdgeOrdering& ord,
                                                                  int j, int i) {
    if (!ord.in_middle_1based(j) || !ord.in_middle_1based(i) || j >= i)
        throw index_out_of_segment(
            "CHANGE(" + std::to_string(j) + "," + std::to_string(i) +
            ") outside middle segment [" + std::to_string(ord.l1 + ord.l2 + 1) + "," +
            std::to_string(ord.l1 + ord.l2 + ord.m) + "] or j >= i");
    int e_j = ord.order[j - 1];
    int e_i = ord.order[i - 1];
    return {{{1, e_i}, +1}, {{0, e_j}, +1}, {{1, e_j}, -1}, {{0, e_i}, -1}};
}

ChangeResult change_feasible_core(const Instance& inst, const ForestLp& flp,
                                  const EdgeOrdering& ord, const CostShares& shares,
                                  int j, int i) {
    auto dir = change_direction(ord, j, i);
    int e_j = ord.order[j - 1];
    int e_i = ord.order[i - 1];

    // stopping conditions handled directly
    if (shares.at(1, e_j).is_zero()) return {false, Rational(0)};
    if (shares.at(1, e_i) == inst.cost[e_i]) return {false, Rational(0)};

    Rational eps = max_epsilon(flp, shares, dir);
    // the explicit cap xi_{2,e_i} + eps <= c(e_i) is implied by
    // xi_{1,e_i} >= eps plus the capacity row, both part of the epsilon LP
    return {eps.sign() > 0, eps};
}

CostShares apply_change_core(const ForestLp& flp, const EdgeOrdering& ord,
                             const CostShares& shares, int j, int i,
                             const Rational& eps) {
    auto dir = change_direction(ord, j, i);
    CostShares out = add_direction(shares, dir, eps);
    require_feasible(flp, out);
    return out;
}

} // namespace

ChangeResult change_feasible(const Instance& inst, const SteinerForest& f,
                             const CostShares& shares, int j, int i,
                             long long path_cap) {
    EdgeOrdering ord = compute_ordering(inst, f);
    ForestLp flp = build_forest_lp(inst, f, path_cap);
    require_feasible(flp, shares);
    return change_feasible_core(inst, flp, ord, shares, j, i);
}

CostShares apply_change(const Instance& inst, const SteinerForest& f,
                        const CostShares& shares, int j, int i,
                        const Rational& eps, long long path_cap) {
    EdgeOrdering ord = compute_ordering(inst, f);
    ForestLp flp = build_forest_lp(inst, f, path_cap);
    return apply_change_core(flp, ord, shares, j, i, eps);
}

// ==================== maximize for Player 2 ====================

Max2Result maximize_for_player2(const Instance& inst, const SteinerForest& f,
                                long long path_cap) {
    ForestLp flp = build_forest_lp(inst, f, path_cap);
    EdgeOrdering ord = compute_ordering(inst, f);

    std::vector<Rational> p2_total(flp.lp.nvars);
    for (size_t v = 0; v < flp.vars.size(); ++v)
        if (flp.vars[v].first == 1) p2_total[v] = 1;

    LpSolution lex = lp_solve_lexicographic(flp.lp, p2_total);
    if (lex.status != LpStatus::optimal)
        throw internal_consistency_error("LP(F) not optimal");

    Max2Result res;
    res.lp_optimum = lex.objective;
    res.enforceable = (lex.objective == f.cost);
    CostShares cur = flp.to_shares(lex.values);

    // first unpaid edge in ordering position
    auto first_unpaid = [&](const CostShares& s) {
        for (int k = 0; k < ord.size(); ++k) {
            int e = ord.order[k];
            if (s.on_edge(e) < inst.cost[e]) return k;
        }
        return -1;
    };
    res.first_unpaid_pos = first_unpaid(cur);
    res.case_r = res.first_unpaid_pos >= ord.l1 + ord.l2 + ord.m &&
                 res.first_unpaid_pos >= 0;
    if (res.enforceable)
        res.note = "forest enforceable; first unpaid edge undefined, properties vacuous";
    else if (!res.case_r)
        res.note = "first unpaid edge not in a right segment; Case R precondition fails";

    // Restricted player-2 maximization among optima preserving the first
    // unpaid edge: total pinned, capacities tight before it, its own total
    // pinned at the current value.
    auto restricted_max2 = [&](const CostShares& s) {
        LinearProgram lp2 = flp.lp;
        std::vector<Rational> ones(flp.lp.nvars, Rational(1));
        lp2.add_eq(ones, res.lp_optimum);
        int fu = first_unpaid(s);
        for (int k = 0; fu >= 0 && k < fu; ++k) {
            int e = ord.order[k];
            std::vector<Rational> row(flp.lp.nvars);
            for (int p = 0; p < 2; ++p) {
                auto it = flp.var_of.find({p, e});
                if (it != flp.var_of.end()) row[it->second] = 1;
            }
            lp2.add_eq(std::move(row), inst.cost[e]);
        }
        if (fu >= 0) {
            int e = ord.order[fu];
            std::vector<Rational> row(flp.lp.nvars);
            for (int p = 0; p < 2; ++p) {
                auto it = flp.var_of.find({p, e});
                if (it != flp.var_of.end()) row[it->second] = 1;
            }
            lp2.add_eq(std::move(row), s.on_edge(e));
        }
        lp2.objective = p2_total;
        return lp2;
    };

    {
        LinearProgram lp2 = restricted_max2(cur);
        LpSolution sol = lp_solve(lp2);
        if (sol.status != LpStatus::optimal)
            throw internal_consistency_error("restricted player-2 LP not optimal");
        cur = flp.to_shares(sol.values);
        if (first_unpaid(cur) != res.first_unpaid_pos)
            throw internal_consistency_error("first unpaid edge moved under restriction");
    }

    // Algorithm Change: repeatedly sweep the double loop (i descending,
    // j descending below i) applying CHANGE(j,i) at maximal eps.
    const int lo = ord.l1 + ord.l2 + 1;            // 1-based middle range
    const int hi = ord.l1 + ord.l2 + ord.m;
    const int step_cap = (int)f.edges.size() * (int)f.edges.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = hi; i >= lo + 1; --i) {
            for (int j = i - 1; j >= lo; --j) {
                ChangeResult cr = change_feasible_core(inst, flp, ord, cur, j, i);
                if (!cr.feasible) continue;
                cur = apply_change_core(flp, ord, cur, j, i, cr.eps);
                if (++res.change_steps > step_cap)
                    throw internal_consistency_error(
                        "Algorithm Change exceeded its iteration cap");
                changed = true;
            }
        }
    }

    // post-hoc verification
    res.shares = cur;
    {
        // (2M): player-2 total equals the restricted maximum
        LinearProgram lp2 = restricted_max2(cur);
        LpSolution sol = lp_solve(lp2);
        res.two_m_ok = sol.status == LpStatus::optimal &&
                       lp_objective_value(lp2, flp.to_vector(cur)) == sol.objective &&
                       sol.objective == cur.player_total(1);
        // (NC): no feasible CHANGE remains
        res.nc_ok = true;
        for (int i = hi; i >= lo + 1 && res.nc_ok; --i)
            for (int j = i - 1; j >= lo && res.nc_ok; --j)
                if (change_feasible_core(inst, flp, ord, cur, j, i).feasible)
                    res.nc_ok = false;
    }
    if (ord.m == 0 && res.note.empty())
        res.note = "empty middle; CHANGE loop vacuous";
    return res;
}

} // namespace ndg
