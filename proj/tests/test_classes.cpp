// Graph families, named fixtures, the efficiency classifier, and the
// seeded random-instance utilities.
#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "doctest.h"
#include "ndg/classes.hpp"
#include "ndg/errors.hpp"
#include "ndg/forests.hpp"

using namespace ndg;

namespace {

// proper 2-coloring by BFS; false if an odd cycle exists
bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : g.adj[v]) {
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("family generators produce the advertised vertex and edge counts") {
    Graph w5 = wheel_graph(5);
    CHECK(w5.n() == 6);
    CHECK(w5.m() == 10);
    Graph w3 = wheel_graph(3);
    CHECK(w3.n() == 4);
    CHECK(w3.m() == 6);  // K4

    for (int n : {2, 3, 5, 9}) {
        CAPTURE(n);
        Graph f = fan_graph(n);
        CHECK(f.n() == n + 1);
        CHECK(f.m() == 2 * n - 1);
    }
    Graph c7 = cycle_graph(7);
    CHECK(c7.n() == 7);
    CHECK(c7.m() == 7);
    Graph p5 = path_graph(5);
    CHECK(p5.n() == 5);
    CHECK(p5.m() == 4);
    Graph k6 = complete_graph(6);
    CHECK(k6.n() == 6);
    CHECK(k6.m() == 15);

    CHECK_THROWS_AS(wheel_graph(2), bad_parameter);
    CHECK_THROWS_AS(fan_graph(1), bad_parameter);
    CHECK_THROWS_AS(cycle_graph(2), bad_parameter);
    CHECK_THROWS_AS(path_graph(1), bad_parameter);
    CHECK_THROWS_AS(complete_graph(1), bad_parameter);

    for (const Graph* g : {&w5, &c7, &p5, &k6}) {
        CHECK(g->adjacency_consistent());
        std::set<std::pair<int, int>> seen;
        for (const auto& e : g->edges) {
            CHECK(e.u != e.v);
            auto key = std::minmax(e.u, e.v);
            CHECK(!seen.count(key));  // simple graphs
            seen.insert(key);
        }
    }
}

TEST_CASE("the shared-source triangle fixture") {
    Instance inst = fig1_shapley();  // eps = 1/4
    CHECK(inst.g.n() == 3);
    CHECK(inst.g.m() == 3);
    CHECK(inst.s1 == inst.s2);  // both players start at the common source
    CHECK(inst.t1 != inst.t2);
    CHECK(inst.cost[0] == Rational(2));
    CHECK(inst.cost[1] == Rational(3, 2));
    CHECK(inst.cost[2] == Rational(9, 4));

    Instance tight = fig1_shapley(Rational(1, 100));
    CHECK(tight.cost[1] == Rational(51, 50));
    CHECK_THROWS_AS(fig1_shapley(Rational(0)), bad_parameter);
    CHECK_THROWS_AS(fig1_shapley(Rational(-1, 4)), bad_parameter);
}

TEST_CASE("the seven-vertex lower-bound fixture scales linearly in x") {
    Instance inst = pos_lower_bound();  // x = 1
    CHECK(inst.g.n() == 7);
    CHECK(inst.g.m() == 9);
    std::vector<Rational> expect = {Rational(5), Rational(3), Rational(2),
                                    Rational(3), Rational(4), Rational(5),
                                    Rational(6), Rational(6), Rational(9)};
    CHECK(inst.cost == expect);

    Instance big = pos_lower_bound(Rational(10));
    CHECK(big.cost[0] == Rational(32));   // 3x + 2
    CHECK(big.cost[2] == Rational(11));   // x + 1
    CHECK(big.cost[8] == Rational(63));   // 6x + 3
    CHECK_THROWS_AS(pos_lower_bound(Rational(0)), bad_parameter);
    CHECK_THROWS_AS(pos_lower_bound(Rational(-2)), bad_parameter);

    // half-integral scale stays exact
    Instance half = pos_lower_bound(Rational(1, 2));
    CHECK(half.cost[0] == Rational(7, 2));
    auto opt = optimal_forests(half);
    CHECK(opt.cost == Rational(15));  // 14x + 8 at x = 1/2
}

TEST_CASE("fixture ids all dispatch and validate") {
    auto ids = fixture_ids();
    CHECK(ids.size() == 19);
    CHECK(std::count(ids.begin(), ids.end(), "fig1bc1") == 1);
    FixtureParams family_params;
    family_params.terminals = "v1,v3,v2,v4";
    for (const auto& id : ids) {
        CAPTURE(id);
        if (id.back() == 'N') {
            // template entry: instantiate a representative size
            std::string concrete = id.substr(0, id.size() - 1) + "6";
            Instance inst = fixture_instance(concrete, family_params);
            CHECK_NOTHROW(inst.validate());
            CHECK(inst.cost == std::vector<Rational>(inst.g.m(), Rational(1)));
        } else {
            Instance inst = fixture_instance(id);
            CHECK_NOTHROW(inst.validate());
        }
    }

    // the contracted counterexample is the lower-bound fixture at x = 1
    Instance a = fixture_instance("fig1bc1");
    Instance b = pos_lower_bound(Rational(1));
    CHECK(a.cost == b.cost);
    CHECK(a.g.n() == b.g.n());
    CHECK(a.g.m() == b.g.m());

    // parameters reach the underlying constructors
    FixtureParams px;
    px.x = Rational(2);
    CHECK(fixture_instance("pos-lower-bound", px).cost[0] == Rational(8));
    FixtureParams pe;
    pe.eps = Rational(1, 8);
    CHECK(fixture_instance("fig1-shapley", pe).cost[1] == Rational(5, 4));

    CHECK_THROWS_AS(fixture_instance("no-such-fixture"), bad_parameter);
    CHECK_THROWS_AS(fixture_instance("wheel6"), bad_parameter);  // no terminals
    FixtureParams bad_terms;
    bad_terms.terminals = "v1,v2";
    CHECK_THROWS_AS(fixture_instance("wheel6", bad_terms), bad_parameter);
    FixtureParams unknown_vertex;
    unknown_vertex.terminals = "v1,v3,v2,zz";
    CHECK_THROWS_AS(fixture_instance("wheel6", unknown_vertex), bad_input);

    // case-normalized minimal-configuration ids
    Instance mbc = fixture_instance("bc-minimal-bc2a");
    auto opt = optimal_forests(mbc);
    CHECK(opt.cost == Rational(26));
}

TEST_CASE("the bipartite host really is bipartite") {
    Instance inst = fixture_instance("bipartite-bc1a");
    CHECK(is_bipartite(inst.g));
    CHECK(!is_bipartite(cycle_graph(5)));
    CHECK(is_bipartite(cycle_graph(6)));
}

TEST_CASE("classifier names the cheapest reason on each family") {
    FixtureParams fp;
    fp.terminals = "v1,v3,v2,v4";

    auto classify_fixture = [&](const std::string& id) {
        Instance inst = fixture_instance(id, fp);
        Terminals t{inst.s1, inst.t1, inst.s2, inst.t2};
        return classify_efficiency(inst.g, t);
    };

    ClassifyReport w5 = classify_fixture("wheel5");
    CHECK(w5.verdict == Efficiency::efficient);
    CHECK(w5.reason == "fewer-than-7-vertices");

    ClassifyReport c8 = classify_fixture("cycle8");
    CHECK(c8.verdict == Efficiency::efficient);
    CHECK(c8.reason == "fewer-than-9-edges");

    ClassifyReport f7 = classify_fixture("fan7");
    CHECK(f7.verdict == Efficiency::efficient);
    CHECK(f7.reason == "k4-minor-free");

    ClassifyReport w6 = classify_fixture("wheel6");
    CHECK(w6.verdict == Efficiency::efficient);
    CHECK(w6.reason == "no-bc-by-search");  // survives the full search

    for (const char* id : {"bipartite-bc1a", "planar-bc1a"}) {
        CAPTURE(id);
        Instance inst = fixture_instance(id);
        Terminals t{inst.s1, inst.t1, inst.s2, inst.t2};
        ClassifyReport rep = classify_efficiency(inst.g, t);
        CHECK(rep.verdict == Efficiency::not_efficient);
        CHECK(rep.reason == "BC1a");
        REQUIRE(rep.embedding.has_value());
        std::string why;
        bool ok = validate_embedding(*rep.embedding, inst.g, t, &why);
        CAPTURE(why);
        CHECK(ok);
    }
}

TEST_CASE("random connected graphs honor their spec") {
    std::mt19937_64 rng(0xc1a55e01);
    for (int trial = 0; trial < 40; ++trial) {
        CAPTURE(trial);
        Graph g = random_connected_graph(rng, 7, 9, 3, 7);
        CHECK(g.n() >= 7);
        CHECK(g.n() <= 9);
        CHECK(g.m() >= g.n() - 1 + 3);
        CHECK(g.m() <= g.n() - 1 + 7);
        CHECK(g.adjacency_consistent());
        std::set<std::pair<int, int>> seen;
        for (const auto& e : g.edges) {
            CHECK(e.u != e.v);
            auto key = std::minmax(e.u, e.v);
            CHECK(!seen.count(key));
            seen.insert(key);
        }
        for (int v = 1; v < g.n(); ++v) CHECK(is_connected_between(g, 0, v));

        Terminals t = random_terminals(rng, g);
        std::set<int> distinct{t.s1, t.t1, t.s2, t.t2};
        CHECK(distinct.size() == 4);
        for (int v : distinct) {
            CHECK(v >= 0);
            CHECK(v < g.n());
        }
    }
    CHECK_THROWS_AS(random_terminals(rng, path_graph(3)), bad_parameter);
}

TEST_CASE("random costs are canonical rationals within the requested box") {
    std::mt19937_64 rng(0xc1a55e02);
    auto costs = random_costs(rng, 200, 20, 4);
    REQUIRE(costs.size() == 200);
    bool saw_fraction = false;
    for (const auto& c : costs) {
        CHECK(c.sign() >= 0);
        CHECK(c <= Rational(20));
        if (!c.is_integer()) saw_fraction = true;
    }
    CHECK(saw_fraction);  // denominators up to 4 actually occur
}

TEST_CASE("random instances validate and stay in range") {
    std::mt19937_64 rng(0xc1a55e03);
    for (int trial = 0; trial < 25; ++trial) {
        CAPTURE(trial);
        Instance inst = random_instance(rng, 5, 8);
        CHECK_NOTHROW(inst.validate());
        CHECK(inst.g.n() >= 5);
        CHECK(inst.g.n() <= 8);
        CHECK((int)inst.cost.size() == inst.g.m());
    }
}

TEST_CASE("series-parallel compositions never acquire a K4 minor") {
    std::mt19937_64 rng(0xc1a55e04);
    for (int trial = 0; trial < 30; ++trial) {
        CAPTURE(trial);
        Graph g = random_series_parallel(rng, 10);
        CHECK(!has_k4_minor(g));
        CHECK(g.adjacency_consistent());
        for (int v = 1; v < g.n(); ++v) CHECK(is_connected_between(g, 0, v));
    }
    CHECK_THROWS_AS(random_series_parallel(rng, -1), bad_parameter);
}
