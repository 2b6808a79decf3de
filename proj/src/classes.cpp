// Families, fixtures, the efficiency classifier, and seeded random
// instance generators.
#include "ndg/classes.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ndg/errors.hpp"

namespace ndg {

namespace {

std::string vname(int i) { return "v" + std::to_string(i); }

} // namespace

Graph wheel_graph(int n) {
    if (n < 3) throw bad_parameter("wheel needs at least 3 rim vertices");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(vname(i));
    int hub = g.add_vertex("hub");
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n, "rim" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        g.add_edge(hub, i, "spoke" + std::to_string(i + 1));
    return g;
}

Graph fan_graph(int n) {
    if (n < 2) throw bad_parameter("fan needs at least 2 path vertices");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(vname(i));
    int hub = g.add_vertex("hub");
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1, "path" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        g.add_edge(hub, i, "spoke" + std::to_string(i + 1));
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw bad_parameter("cycle needs at least 3 vertices");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(vname(i));
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n, "e" + std::to_string(i + 1));
    return g;
}

Graph path_graph(int n) {
    if (n < 2) throw bad_parameter("path needs at least 2 vertices");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(vname(i));
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1, "e" + std::to_string(i + 1));
    return g;
}

Graph complete_graph(int n) {
    if (n < 2) throw bad_parameter("complete graph needs at least 2 vertices");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(vname(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j, "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    return g;
}

Instance fig1_shapley(const Rational& eps) {
    if (!(Rational(0) < eps))
        throw bad_parameter("fig1-shapley needs eps > 0");
    Instance inst;
    int s = inst.g.add_vertex("s");
    int t2 = inst.g.add_vertex("t2");
    int t1 = inst.g.add_vertex("t1");
    inst.g.add_edge(s, t2, "st2");
    inst.g.add_edge(t2, t1, "t2t1");
    inst.g.add_edge(s, t1, "st1");
    inst.cost = {Rational(2), Rational(1) + eps * 2, Rational(2) + eps};
    inst.s1 = s; inst.t1 = t1;
    inst.s2 = s; inst.t2 = t2;
    inst.validate();
    return inst;
}

Instance pos_lower_bound(const Rational& x) {
    if (!(Rational(0) < x))
        throw bad_parameter("pos-lower-bound needs x > 0");
    Instance inst;
    int s2 = inst.g.add_vertex("s2");
    int s1 = inst.g.add_vertex("s1");
    int v4 = inst.g.add_vertex("v4");
    int v6 = inst.g.add_vertex("v6");
    int v7 = inst.g.add_vertex("v7");
    int t1 = inst.g.add_vertex("t1");
    int t2 = inst.g.add_vertex("t2");
    inst.g.add_edge(s2, s1, "s2s1");
    inst.g.add_edge(s1, v4, "s1v4");
    inst.g.add_edge(v4, v6, "v4v6");
    inst.g.add_edge(v6, v7, "v6v7");
    inst.g.add_edge(v7, t1, "v7t1");
    inst.g.add_edge(v7, t2, "v7t2");
    inst.g.add_edge(v4, t2, "q3");
    inst.g.add_edge(s2, v6, "q2");
    inst.g.add_edge(s1, t1, "q1");
    inst.cost = {x * 3 + 2, x * 2 + 1, x + 1,     x * 2 + 1, x * 3 + 1,
                 x * 3 + 2, x * 4 + 2, x * 4 + 2, x * 6 + 3};
    inst.s1 = s1; inst.t1 = t1;
    inst.s2 = s2; inst.t2 = t2;
    inst.validate();
    return inst;
}

Instance bipartite_bc1a() {
    Instance inst;
    Graph& g = inst.g;
    int s1 = g.add_vertex("s1");
    int s2 = g.add_vertex("s2");
    int v3 = g.add_vertex("v3");
    int v4 = g.add_vertex("v4");
    int v5 = g.add_vertex("v5");
    int v6 = g.add_vertex("v6");
    int v7 = g.add_vertex("v7");
    int v8 = g.add_vertex("v8");
    int t1 = g.add_vertex("t1");
    int t2 = g.add_vertex("t2");
    g.add_edge(s1, v3, "s1v3");
    g.add_edge(s2, v3, "s2v3");
    g.add_edge(v3, v4, "v3v4");
    g.add_edge(v4, v5, "v4v5");
    g.add_edge(v5, v6, "v5v6");
    g.add_edge(v6, v7, "v6v7");
    g.add_edge(v7, v8, "v7v8");
    g.add_edge(v8, t1, "v8t1");
    g.add_edge(v8, t2, "v8t2");
    g.add_edge(s2, v7, "q2");
    g.add_edge(v4, t1, "q1");
    g.add_edge(v6, t2, "q3");
    inst.cost.assign(g.m(), Rational(1));
    inst.s1 = s1; inst.t1 = t1;
    inst.s2 = s2; inst.t2 = t2;
    inst.validate();
    return inst;
}

Instance planar_bc1a() {
    Instance inst;
    Graph& g = inst.g;
    int s1 = g.add_vertex("s1");
    int s2 = g.add_vertex("s2");
    int v3 = g.add_vertex("v3");
    int v4 = g.add_vertex("v4");
    int v6 = g.add_vertex("v6");
    int v7 = g.add_vertex("v7");
    int v8 = g.add_vertex("v8");
    int t1 = g.add_vertex("t1");
    int t2 = g.add_vertex("t2");
    g.add_edge(s1, v3, "s1v3");
    g.add_edge(s2, v3, "s2v3");
    g.add_edge(v3, v4, "v3v4");
    g.add_edge(v4, v6, "v4v6");
    g.add_edge(v6, v7, "v6v7");
    g.add_edge(v7, v8, "v7v8");
    g.add_edge(v8, t1, "v8t1");
    g.add_edge(v8, t2, "v8t2");
    g.add_edge(s2, v7, "q2");
    g.add_edge(v4, t1, "q1");
    g.add_edge(v6, t2, "q3");
    inst.cost.assign(g.m(), Rational(1));
    inst.s1 = s1; inst.t1 = t1;
    inst.s2 = s2; inst.t2 = t2;
    inst.validate();
    return inst;
}

namespace {

// Parse trailing integer of family ids like "wheel7"; 0 if malformed.
int family_size(const std::string& id, const std::string& prefix) {
    if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0)
        return 0;
    int n = 0;
    for (size_t i = prefix.size(); i < id.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return 0;
        n = n * 10 + (id[i] - '0');
        if (n > 1000) return 0;
    }
    return n;
}

Instance graph_family_instance(Graph g, const FixtureParams& params,
                               const std::string& id) {
    if (params.terminals.empty())
        throw bad_parameter("fixture '" + id +
                            "' is a plain graph family: pass terminals "
                            "as \"s1,t1,s2,t2\" vertex names");
    std::vector<std::string> names;
    std::string cur;
    for (char ch : params.terminals) {
        if (ch == ',') { names.push_back(cur); cur.clear(); }
        else cur.push_back(ch);
    }
    names.push_back(cur);
    if (names.size() != 4)
        throw bad_parameter("terminals must be four comma-separated vertex names");
    Instance inst;
    inst.g = std::move(g);
    inst.cost.assign(inst.g.m(), Rational(1));
    inst.s1 = inst.g.vertex_checked(names[0]);
    inst.t1 = inst.g.vertex_checked(names[1]);
    inst.s2 = inst.g.vertex_checked(names[2]);
    inst.t2 = inst.g.vertex_checked(names[3]);
    inst.validate();
    return inst;
}

} // namespace

Instance fixture_instance(const std::string& id, const FixtureParams& params) {
    if (id == "fig1-shapley") return fig1_shapley(params.eps);
    if (id == "pos-lower-bound") return pos_lower_bound(params.x);
    if (id == "fig1bc1") return pos_lower_bound(Rational(1));
    if (id == "bipartite-bc1a") return bipartite_bc1a();
    if (id == "planar-bc1a") return planar_bc1a();
    if (id.rfind("bc-minimal-", 0) == 0) {
        std::string tail = id.substr(std::string("bc-minimal-").size());
        // accept lowercase ids like bc1a
        std::string norm = tail;
        if (norm.size() >= 2 && (norm[0] == 'b' || norm[0] == 'B') &&
            (norm[1] == 'c' || norm[1] == 'C'))
            norm = "BC" + norm.substr(2);
        MinimalBc mb = bc_minimal(norm);
        return generate_witness(mb.emb, mb.g);
    }
    if (int n = family_size(id, "wheel"); n > 0)
        return graph_family_instance(wheel_graph(n), params, id);
    if (int n = family_size(id, "fan"); n > 0)
        return graph_family_instance(fan_graph(n), params, id);
    if (int n = family_size(id, "cycle"); n > 0)
        return graph_family_instance(cycle_graph(n), params, id);
    if (int n = family_size(id, "path"); n > 0)
        return graph_family_instance(path_graph(n), params, id);
    if (int n = family_size(id, "complete"); n > 0)
        return graph_family_instance(complete_graph(n), params, id);
    throw bad_parameter("unknown fixture id '" + id + "'");
}

std::vector<std::string> fixture_ids() {
    std::vector<std::string> ids = {"fig1-shapley", "fig1bc1", "pos-lower-bound",
                                    "bipartite-bc1a", "planar-bc1a"};
    for (const auto& p : bc_patterns()) {
        std::string low = p.id;
        for (char& ch : low) ch = (char)std::tolower((unsigned char)ch);
        ids.push_back("bc-minimal-" + low);
    }
    ids.push_back("wheelN");
    ids.push_back("fanN");
    ids.push_back("cycleN");
    ids.push_back("pathN");
    ids.push_back("completeN");
    return ids;
}

ClassifyReport classify_efficiency(const Graph& g, const Terminals& t,
                                   const DetectOptions& opt) {
    ClassifyReport rep;
    try {
        DetectReport det = detect_bc(g, t, opt);
        if (det.embedding) {
            rep.verdict = Efficiency::not_efficient;
            rep.reason = det.embedding->pattern;
            rep.embedding = std::move(det.embedding);
        } else {
            rep.verdict = Efficiency::efficient;
            rep.reason = det.prefilter;
        }
    } catch (const search_budget_exceeded&) {
        rep.verdict = Efficiency::unknown;
        rep.reason = "search-budget-exceeded";
    }
    return rep;
}

Graph random_connected_graph(std::mt19937_64& rng, int min_n, int max_n,
                             int extra_min, int extra_max) {
    if (min_n < 2 || max_n < min_n || extra_min < 0 || extra_max < extra_min)
        throw bad_parameter("malformed random graph spec");
    std::uniform_int_distribution<int> nd(min_n, max_n);
    const int n = nd(rng);
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(vname(i));
    std::set<std::pair<int, int>> present;
    int eid = 0;
    auto add = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        if (a == b || present.count({a, b})) return false;
        present.insert({a, b});
        g.add_edge(a, b, "e" + std::to_string(++eid));
        return true;
    };
    // random attachment tree keeps the graph connected
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pd(0, i - 1);
        add(i, pd(rng));
    }
    const int max_extra = n * (n - 1) / 2 - (n - 1);
    std::uniform_int_distribution<int> xd(extra_min, extra_max);
    int extra = std::min(xd(rng), max_extra);
    std::uniform_int_distribution<int> vd(0, n - 1);
    while (extra > 0)
        if (add(vd(rng), vd(rng))) --extra;
    return g;
}

Terminals random_terminals(std::mt19937_64& rng, const Graph& g) {
    if (g.n() < 4) throw bad_parameter("need at least 4 vertices for terminals");
    std::vector<int> verts(g.n());
    for (int i = 0; i < g.n(); ++i) verts[i] = i;
    std::shuffle(verts.begin(), verts.end(), rng);
    return Terminals{verts[0], verts[1], verts[2], verts[3]};
}

std::vector<Rational> random_costs(std::mt19937_64& rng, int m,
                                   int max_num, int max_den) {
    if (m < 0 || max_num < 1 || max_den < 1)
        throw bad_parameter("malformed random cost spec");
    std::uniform_int_distribution<int> num(0, max_num), den(1, max_den);
    std::vector<Rational> costs;
    costs.reserve(m);
    for (int i = 0; i < m; ++i)
        costs.emplace_back(num(rng), den(rng));
    return costs;
}

Instance random_instance(std::mt19937_64& rng, int min_n, int max_n) {
    Instance inst;
    inst.g = random_connected_graph(rng, min_n, max_n);
    inst.cost = random_costs(rng, inst.g.m());
    Terminals t = random_terminals(rng, inst.g);
    inst.s1 = t.s1; inst.t1 = t.t1;
    inst.s2 = t.s2; inst.t2 = t.t2;
    inst.validate();
    return inst;
}

namespace {

// Series-parallel composition over abstract nodes; terminal
// identifications are collected in a union-find and the graph is
// materialized afterwards (one vertex per node class).
struct SpBuild {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> uf;

    int fresh() {
        uf.push_back(static_cast<int>(uf.size()));
        return static_cast<int>(uf.size()) - 1;
    }
    int find(int a) {
        while (uf[a] != a) a = uf[a] = uf[uf[a]];
        return a;
    }

    std::pair<int, int> build(std::mt19937_64& rng, int ops) {
        if (ops <= 0) {
            int s = fresh(), t = fresh();
            edges.emplace_back(s, t);
            return {s, t};
        }
        std::uniform_int_distribution<int> split(0, ops - 1);
        const int left_ops = split(rng);
        const int right_ops = ops - 1 - left_ops;
        auto [ls, lt] = build(rng, left_ops);
        auto [rs, rt] = build(rng, right_ops);
        std::uniform_int_distribution<int> coin(0, 1);
        if (coin(rng) == 0) {
            uf[find(lt)] = find(rs);  // series
            return {ls, rt};
        }
        uf[find(ls)] = find(rs);      // parallel
        uf[find(lt)] = find(rt);
        return {ls, lt};
    }
};

} // namespace

Graph random_series_parallel(std::mt19937_64& rng, int ops) {
    if (ops < 0) throw bad_parameter("ops must be nonnegative");
    SpBuild sp;
    sp.build(rng, ops);
    Graph g;
    std::map<int, int> vertex_of;
    auto vertex_for = [&](int node) {
        int root = sp.find(node);
        auto it = vertex_of.find(root);
        if (it != vertex_of.end()) return it->second;
        int v = g.add_vertex("sp" + std::to_string(vertex_of.size() + 1));
        vertex_of.emplace(root, v);
        return v;
    };
    int eid = 0;
    for (const auto& [a, b] : sp.edges)
        g.add_edge(vertex_for(a), vertex_for(b), "e" + std::to_string(++eid));
    return g;
}

} // namespace ndg
