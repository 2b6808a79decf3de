// The nine acceptance criteria.  Each returns pass/fail plus a one-line
// detail; failures carry the first few offending checks verbatim.
#include "ndg/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "ndg/classes.hpp"
#include "ndg/enforce.hpp"
#include "ndg/errors.hpp"
#include "ndg/forests.hpp"
#include "ndg/shares.hpp"

namespace ndg {

namespace {

struct Checker {
    int checks = 0;
    std::vector<std::string> fails;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) fails.push_back(what);
    }
    bool ok() const { return fails.empty(); }
    // keep detail lines short: first three failures + count
    std::string failure_summary() const {
        std::ostringstream os;
        os << fails.size() << "/" << checks << " checks failed: ";
        for (size_t i = 0; i < fails.size() && i < 3; ++i)
            os << (i ? "; " : "") << fails[i];
        if (fails.size() > 3) os << "; ...";
        return os.str();
    }
};

int edge_id(const Graph& g, const std::string& name) {
    for (int e = 0; e < g.m(); ++e)
        if (g.edges[e].name == name) return e;
    throw internal_consistency_error("fixture edge '" + name + "' not found");
}

Terminals instance_terminals(const Instance& inst) {
    return Terminals{inst.s1, inst.t1, inst.s2, inst.t2};
}

// ---- criterion 1: the non-enforceable optimum fixture ----------------------

void criterion_figure3(Checker& c) {
    Instance inst = fixture_instance("fig1bc1");
    auto all = enumerate_forests(inst);
    c.expect(all.size() == 19,
             "expected 19 Steiner forests, got " + std::to_string(all.size()));
    auto opt = optimal_forests(inst);
    c.expect(opt.cost == Rational(22), "OPT cost 22, got " + opt.cost.str());
    c.expect(opt.forests.size() == 1, "OPT not unique");
    const SteinerForest& f = opt.forests.front();
    EnforceReport rep = check_enforceable(inst, f);
    c.expect(rep.forest_cost == Rational(22), "forest cost mismatch");
    c.expect(rep.lp_optimum == Rational(21),
             "LP optimum 21, got " + rep.lp_optimum.str());
    c.expect(!rep.enforceable, "fixture must not be enforceable");

    // the published share vector: feasible and optimal
    const Graph& g = inst.g;
    CostShares fig;
    fig.set(0, edge_id(g, "s1v4"), Rational(2));
    fig.set(0, edge_id(g, "v4v6"), Rational(2));
    fig.set(0, edge_id(g, "v6v7"), Rational(2));
    fig.set(0, edge_id(g, "v7t1"), Rational(3));
    fig.set(1, edge_id(g, "s2s1"), Rational(5));
    fig.set(1, edge_id(g, "s1v4"), Rational(1));
    fig.set(1, edge_id(g, "v4v6"), Rational(0));
    fig.set(1, edge_id(g, "v6v7"), Rational(1));
    fig.set(1, edge_id(g, "v7t2"), Rational(5));
    c.expect(fig.player_total(0) == Rational(9), "player 1 total 9");
    c.expect(fig.player_total(1) == Rational(12), "player 2 total 12");
    ForestLp flp = build_forest_lp(inst, f);
    auto x = flp.to_vector(fig);
    c.expect(lp_feasible(flp.lp, x), "published share vector is LP-feasible");
    c.expect(lp_objective_value(flp.lp, x) == Rational(21),
             "published share vector attains the optimum 21");
}

// ---- criterion 2: the PoS lower-bound family --------------------------------

void criterion_pos(Checker& c) {
    for (int xv : {1, 2, 10}) {
        const Rational x(xv);
        const std::string tag = " (x=" + std::to_string(xv) + ")";
        Instance inst = pos_lower_bound(x);
        PosResult pr = price_of_stability(inst);
        const Rational opt_cost = x * 14 + 8;
        const Rational best_cost = x * 15 + 8;
        c.expect(pr.optimal_cost == opt_cost,
                 "OPT 14x+8" + tag + ", got " + pr.optimal_cost.str());
        c.expect(pr.best.cost == best_cost,
                 "cheapest enforceable 15x+8" + tag + ", got " + pr.best.cost.str());
        c.expect(pr.pos == best_cost / opt_cost,
                 "pos (15x+8)/(14x+8)" + tag + ", got " + pr.pos.str());
        c.expect(pr.report.enforceable, "PoS witness enforceable" + tag);
        std::vector<int> expect_edges = {edge_id(inst.g, "v4v6"), edge_id(inst.g, "q3"),
                                         edge_id(inst.g, "q2"), edge_id(inst.g, "q1")};
        std::sort(expect_edges.begin(), expect_edges.end());
        c.expect(pr.best.edges == expect_edges,
                 "witness forest is {s1t1, s2v6, v4t2, v4v6}" + tag);
    }
}

// ---- criterion 3: witness cost tables ----------------------------------------

void criterion_witness_tables(Checker& c) {
    struct Row {
        const char* id;
        int opt;
        int lp;
        bool exact;  // displayed table vs "analogous" sibling
    };
    const Row rows[] = {
        {"BC1a", 22, 21, true},  {"BC1b", 22, 21, true}, {"BC2a", 26, 25, true},
        {"BC2b", 26, 25, false}, {"BC2c", 26, 25, true}, {"BC2d", 26, 25, false},
        {"BC3", 22, 21, true},   {"BC4a", 26, 25, true}, {"BC4b", 26, 25, false},
    };
    for (const Row& row : rows) {
        const std::string tag = std::string(" (") + row.id + ")";
        MinimalBc mb = bc_minimal(row.id);
        std::string why;
        c.expect(validate_embedding(mb.emb, mb.g, mb.t, &why),
                 "minimal embedding validates" + tag + ": " + why);
        Instance w = generate_witness(mb.emb, mb.g);
        auto opt = optimal_forests(w);
        c.expect(opt.forests.size() == 1, "unique OPT" + tag);
        EnforceReport rep = check_enforceable(w, opt.forests.front());
        c.expect(!rep.enforceable, "not enforceable" + tag);
        if (row.exact) {
            c.expect(opt.cost == Rational(row.opt),
                     "OPT " + std::to_string(row.opt) + tag + ", got " + opt.cost.str());
            c.expect(rep.lp_optimum == Rational(row.lp),
                     "LP " + std::to_string(row.lp) + tag + ", got " +
                         rep.lp_optimum.str());
        } else {
            c.expect(rep.lp_optimum < opt.cost, "LP below OPT" + tag);
            PosResult pr = price_of_stability(w);
            c.expect(pr.pos > Rational(1), "pos > 1" + tag + ", got " + pr.pos.str());
        }
    }
}

// ---- criterion 4: the shared-source triangle, two protocols ----------------

void criterion_fig1(Checker& c) {
    const Rational eps(1, 4);
    Instance inst = fig1_shapley(eps);
    auto opt = optimal_forests(inst);
    c.expect(opt.cost == Rational(3) + eps * 2, "OPT cost 3+2eps");
    c.expect(opt.forests.size() == 1, "OPT unique");
    const SteinerForest& f = opt.forests.front();

    SeparableProtocol shap = shapley_protocol(inst);
    c.expect(!verify_pne(inst, f, shap), "OPT is not a PNE under equal split");
    auto pnes = find_pne_profiles(inst, shap);
    c.expect(pnes.size() == 1, "unique PNE under equal split, got " +
                                   std::to_string(pnes.size()));
    if (pnes.size() == 1) {
        std::set<int> used(pnes[0].first.edges.begin(), pnes[0].first.edges.end());
        used.insert(pnes[0].second.edges.begin(), pnes[0].second.edges.end());
        Rational pne_cost;
        for (int e : used) pne_cost += inst.cost[e];
        c.expect(pne_cost == Rational(4) + eps,
                 "PNE cost 4+eps, got " + pne_cost.str());
        c.expect(pne_cost / opt.cost == (Rational(4) + eps) / (Rational(3) + eps * 2),
                 "PNE/OPT ratio (4+eps)/(3+2eps)");
    }

    // the displayed protocol: player 1 pays 0 | 0 | 2+eps on shared edges
    SeparableProtocol xi;
    for (int e = 0; e < inst.g.m(); ++e) {
        xi.table[{e, 1}] = {inst.cost[e], Rational(0)};
        xi.table[{e, 2}] = {Rational(0), inst.cost[e]};
    }
    const int st2 = edge_id(inst.g, "st2");
    const int t2t1 = edge_id(inst.g, "t2t1");
    const int st1 = edge_id(inst.g, "st1");
    xi.table[{st2, 3}] = {Rational(0), inst.cost[st2]};
    xi.table[{t2t1, 3}] = {Rational(0), inst.cost[t2t1]};
    xi.table[{st1, 3}] = {inst.cost[st1], Rational(0)};
    c.expect(verify_pne(inst, f, xi), "OPT is a PNE under the displayed protocol");

    EnforceReport rep = check_enforceable(inst, f);
    c.expect(rep.enforceable, "OPT enforceable");
    c.expect(rep.lp_optimum == opt.cost, "LP optimum equals OPT cost");
}

// ---- criterion 5: randomized soundness of detection -------------------------

void criterion_soundness(Checker& c) {
    std::mt19937_64 rng(0x5eed0005ULL);
    int with_bc = 0, without_bc = 0;
    for (int i = 0; i < 100; ++i) {
        if (c.fails.size() >= 4) break;  // enough evidence
        Graph g = random_connected_graph(rng);
        Terminals t = random_terminals(rng, g);
        const std::string tag = " (graph " + std::to_string(i) + ")";
        DetectReport det = detect_bc(g, t);
        if (det.embedding) {
            ++with_bc;
            std::string why;
            c.expect(validate_embedding(*det.embedding, g, t, &why),
                     "embedding validates" + tag + ": " + why);
            Instance w = generate_witness(*det.embedding, g);
            PosResult pr = price_of_stability(w);
            c.expect(pr.pos > Rational(1), "witness pos > 1" + tag);
        } else {
            ++without_bc;
            for (int k = 0; k < 25; ++k) {
                Instance inst;
                inst.g = g;
                inst.cost = random_costs(rng, g.m());
                inst.s1 = t.s1; inst.t1 = t.t1;
                inst.s2 = t.s2; inst.t2 = t.t2;
                PosResult pr = price_of_stability(inst);
                if (!(pr.pos == Rational(1))) {
                    c.expect(false, "no-bc graph must have pos 1" + tag +
                                        " costs " + std::to_string(k));
                    break;
                }
                ++c.checks;
            }
        }
    }
    if (c.ok())
        c.expect(with_bc + without_bc == 100,
                 "100 graphs processed, bc=" + std::to_string(with_bc));
}

// ---- criterion 6: exhaustive small-graph completeness -----------------------

// All connected graphs on n labeled vertices as edge bitmasks, reduced to
// canonical forms under vertex permutation.
std::vector<uint32_t> connected_graphs_upto_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int np = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (int b = 0; b < np; ++b)
        pair_index[pairs[b].first][pairs[b].second] = b;

    std::vector<std::vector<int>> remaps;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> re(np);
        for (int b = 0; b < np; ++b) {
            int i = perm[pairs[b].first], j = perm[pairs[b].second];
            if (i > j) std::swap(i, j);
            re[b] = pair_index[i][j];
        }
        remaps.push_back(std::move(re));
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto connected = [&](uint32_t mask) {
        std::vector<int> uf(n);
        std::iota(uf.begin(), uf.end(), 0);
        std::function<int(int)> find = [&](int a) {
            while (uf[a] != a) a = uf[a] = uf[uf[a]];
            return a;
        };
        for (int b = 0; b < np; ++b)
            if (mask >> b & 1u) uf[find(pairs[b].first)] = find(pairs[b].second);
        for (int v = 1; v < n; ++v)
            if (find(v) != find(0)) return false;
        return true;
    };

    std::set<uint32_t> canon;
    for (uint32_t mask = 0; mask < (1u << np); ++mask) {
        if (!connected(mask)) continue;
        uint32_t best = mask;
        for (const auto& re : remaps) {
            uint32_t m2 = 0;
            for (int b = 0; b < np; ++b)
                if (mask >> b & 1u) m2 |= 1u << re[b];
            best = std::min(best, m2);
        }
        canon.insert(best);
    }
    return {canon.begin(), canon.end()};
}

void criterion_small_graphs(Checker& c) {
    std::mt19937_64 rng(0x5eed0006ULL);
    const int expected_counts[7] = {0, 1, 1, 2, 6, 21, 112};
    DetectOptions opt;
    opt.use_prefilters = false;  // make the search itself prove absence
    long long searches = 0;
    int total = 0;
    for (int n = 1; n <= 6; ++n) {
        auto canon = connected_graphs_upto_iso(n);
        c.expect(static_cast<int>(canon.size()) == expected_counts[n],
                 "connected graphs on " + std::to_string(n) + " vertices: expected " +
                     std::to_string(expected_counts[n]) + ", got " +
                     std::to_string(canon.size()));
        total += static_cast<int>(canon.size());
        if (n < 2) continue;
        std::uniform_int_distribution<int> vd(0, n - 1);
        auto pick_pair = [&](int& s, int& t) {
            s = vd(rng);
            do { t = vd(rng); } while (t == s);
        };
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (uint32_t mask : canon) {
            Graph g;
            for (int v = 1; v <= n; ++v) g.add_vertex("v" + std::to_string(v));
            int eid = 0;
            for (size_t b = 0; b < pairs.size(); ++b)
                if (mask >> b & 1u)
                    g.add_edge(pairs[b].first, pairs[b].second,
                               "e" + std::to_string(++eid));
            for (int k = 0; k < 50; ++k) {
                Terminals t;
                pick_pair(t.s1, t.t1);
                pick_pair(t.s2, t.t2);
                DetectReport det = detect_bc(g, t, opt);
                ++searches;
                if (det.embedding) {
                    c.expect(false, "embedding on a " + std::to_string(n) +
                                        "-vertex graph (mask " + std::to_string(mask) +
                                        ")");
                    return;
                }
                ++c.checks;
            }
        }
    }
    c.expect(total == 143, "143 connected graphs up to isomorphism, got " +
                               std::to_string(total));
    c.expect(searches == (143 - 1) * 50L,
             "searched 50 labelings per graph: " + std::to_string(searches));
}

// ---- criterion 7: class properties ------------------------------------------

void criterion_classes(Checker& c) {
    std::mt19937_64 rng(0x5eed0007ULL);
    auto sample_pairs = [&](const Graph& g) {
        std::uniform_int_distribution<int> vd(0, g.n() - 1);
        Terminals t;
        t.s1 = vd(rng);
        do { t.t1 = vd(rng); } while (t.t1 == t.s1);
        t.s2 = vd(rng);
        do { t.t2 = vd(rng); } while (t.t2 == t.s2);
        return t;
    };
    for (int n = 3; n <= 9; ++n) {
        for (int fam = 0; fam < 2; ++fam) {
            Graph g = fam == 0 ? wheel_graph(n) : fan_graph(n);
            const std::string tag = (fam == 0 ? " (wheel " : " (fan ") +
                                    std::to_string(n) + ")";
            for (int k = 0; k < 200; ++k) {
                ClassifyReport rep = classify_efficiency(g, sample_pairs(g));
                if (rep.verdict != Efficiency::efficient) {
                    c.expect(false, "efficient" + tag + " sample " + std::to_string(k));
                    break;
                }
                ++c.checks;
            }
        }
    }
    int sp_done = 0;
    for (int i = 0; i < 30; ++i) {
        Graph g = random_series_parallel(rng, 5 + i % 8);
        if (g.n() < 2) continue;
        ClassifyReport rep = classify_efficiency(g, sample_pairs(g));
        c.expect(rep.verdict == Efficiency::efficient,
                 "series-parallel composition " + std::to_string(i) + " efficient");
        ++sp_done;
    }
    c.expect(sp_done > 20, "enough sp compositions sampled");

    for (const char* id : {"bipartite-bc1a", "planar-bc1a"}) {
        Instance inst = fixture_instance(id);
        Terminals t = instance_terminals(inst);
        ClassifyReport rep = classify_efficiency(inst.g, t);
        c.expect(rep.verdict == Efficiency::not_efficient,
                 std::string(id) + " classified not-efficient");
        c.expect(rep.reason == "BC1a",
                 std::string(id) + " pattern BC1a, got " + rep.reason);
        if (rep.embedding) {
            std::string why;
            c.expect(validate_embedding(*rep.embedding, inst.g, t, &why),
                     std::string(id) + " embedding validates: " + why);
        }
    }
}

// ---- criterion 8: transform properties --------------------------------------

void criterion_transforms(Checker& c) {
    std::mt19937_64 rng(0x5eed0008ULL);
    for (int i = 0; i < 30; ++i) {
        if (c.fails.size() >= 4) break;
        Instance inst = random_instance(rng, 5, 7);
        const std::string tag = " (instance " + std::to_string(i) + ")";
        auto opt = optimal_forests(inst);
        const SteinerForest& f = opt.forests.front();
        EnforceReport rep = check_enforceable(inst, f);

        CostShares pl = push_left(inst, f, rep.shares);
        Rational pl_total = pl.player_total(0) + pl.player_total(1);
        c.expect(pl_total == rep.lp_optimum, "push_left preserves the optimum" + tag);
        PlCheck chk = is_pushed_left(inst, f, pl);
        c.expect(chk.pushed_left, "push_left output is pushed left" + tag);
        CostShares pl2 = push_left(inst, f, pl);
        c.expect(pl2 == pl, "push_left idempotent" + tag);

        Max2Result m2 = maximize_for_player2(inst, f);
        c.expect(m2.lp_optimum == rep.lp_optimum, "max2 stays optimal" + tag);
        c.expect(m2.two_m_ok, "(2M) verified" + tag + " " + m2.note);
        c.expect(m2.nc_ok, "(NC) verified" + tag + " " + m2.note);
        const int cap = static_cast<int>(f.edges.size() * f.edges.size());
        c.expect(m2.change_steps <= cap, "Change within |F|^2 iterations" + tag);
    }
}

// ---- criterion 9: solver vs vertex-enumeration oracle -----------------------

void criterion_solver_oracle(Checker& c) {
    std::mt19937_64 rng(0x5eed0009ULL);
    std::uniform_int_distribution<int> nd(2, 5), rows(1, 6), coef(-4, 6), box(1, 12),
        obj(-3, 8);
    for (int i = 0; i < 50; ++i) {
        const int n = nd(rng);
        LinearProgram lp(n);
        for (int j = 0; j < n; ++j) lp.objective[j] = Rational(obj(rng));
        for (int j = 0; j < n; ++j) {  // box keeps it bounded
            std::vector<Rational> e(n);
            e[j] = Rational(1);
            lp.add_le(std::move(e), Rational(box(rng)));
        }
        const int extra = rows(rng);
        for (int r = 0; r < extra; ++r) {
            std::vector<Rational> row(n);
            for (int j = 0; j < n; ++j) row[j] = Rational(coef(rng));
            lp.add_le(std::move(row), Rational(box(rng)));  // rhs >= 1 keeps 0 feasible
        }
        if (i % 3 == 0) {  // exercise equality handling; x = e_1 stays feasible
            std::vector<Rational> row(n, Rational(1));
            lp.add_eq(std::move(row), Rational(1));
        }
        const std::string tag = " (lp " + std::to_string(i) + ")";
        LpSolution simplex = lp_solve(lp);
        LpSolution oracle = lp_solve_by_vertex_enumeration(lp);
        c.expect(simplex.status == oracle.status, "statuses agree" + tag);
        if (simplex.status == LpStatus::optimal &&
            oracle.status == LpStatus::optimal) {
            c.expect(lp_feasible(lp, simplex.values), "simplex point feasible" + tag);
            c.expect(simplex.objective == oracle.objective,
                     "objectives agree" + tag + ": simplex " + simplex.objective.str() +
                         " vs oracle " + oracle.objective.str());
        }
    }
}

struct CriterionSpec {
    int index;
    const char* name;
    void (*run)(Checker&);
};

const CriterionSpec kCriteria[] = {
    {1, "figure3-reproduction", criterion_figure3},
    {2, "pos-lower-bound", criterion_pos},
    {3, "witness-tables", criterion_witness_tables},
    {4, "fig1-protocols", criterion_fig1},
    {5, "soundness-random", criterion_soundness},
    {6, "small-graph-completeness", criterion_small_graphs},
    {7, "class-properties", criterion_classes},
    {8, "transform-properties", criterion_transforms},
    {9, "solver-oracle", criterion_solver_oracle},
};

} // namespace

CriterionResult run_criterion(int index) {
    const CriterionSpec* spec = nullptr;
    for (const auto& s : kCriteria)
        if (s.index == index) spec = &s;
    if (!spec) throw bad_parameter("criterion index must be 1..9");

    CriterionResult res;
    res.index = index;
    res.name = spec->name;
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
        spec->run(c);
        res.pass = c.ok();
        res.detail = res.pass ? std::to_string(c.checks) + " checks"
                              : c.failure_summary();
    } catch (const std::exception& ex) {
        res.pass = false;
        res.detail = std::string("exception: ") + ex.what();
    }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return res;
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& indices) {
    std::vector<CriterionResult> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(run_criterion(i));
    return out;
}

std::vector<CriterionResult> run_all_criteria() {
    return run_criteria({1, 2, 3, 4, 5, 6, 7, 8, 9});
}

std::string criteria_table(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        std::ostringstream head;
        head << (r.pass ? "PASS" : "FAIL") << "  " << r.index << ". " << r.name;
        os << head.str();
        for (int pad = static_cast<int>(head.str().size()); pad < 34; ++pad) os << ' ';
        os << "  [" << std::fixed;
        os.precision(2);
        os << r.seconds << "s]  " << r.detail << "\n";
    }
    return os.str();
}

} // namespace ndg
