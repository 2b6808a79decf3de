// Graph family generators, the named cost-bearing fixtures, the
// instance-level efficiency classifier, and seeded random-instance
// utilities used by the test and selftest suites.
#pragma once

#include <random>

#include "ndg/bc.hpp"
#include "ndg/instance.hpp"

namespace ndg {

// ---- parametric families (deterministic labeled graphs) -------------------
Graph wheel_graph(int n);     // rim cycle v1..vn plus hub adjacent to all; n >= 3
Graph fan_graph(int n);       // path v1..vn plus hub adjacent to all; n >= 2
Graph cycle_graph(int n);     // v1..vn; n >= 3
Graph path_graph(int n);      // v1..vn; n >= 2
Graph complete_graph(int n);  // v1..vn; n >= 2

// ---- named fixtures ---------------------------------------------------------
// Three-edge triangle with a shared source: the classic example where the
// equal-split protocol misses the optimum.  eps must be positive.
Instance fig1_shapley(const Rational& eps = Rational(1, 4));

// Seven-vertex lower-bound instance parameterized by x > 0; costs
// 3x+2, 2x+1, x+1, 2x+1, 3x+1, 3x+2 on the optimal forest and
// 4x+2, 4x+2, 6x+3 on the three alternative edges.
Instance pos_lower_bound(const Rational& x = Rational(1));

// Bipartite / planar host graphs that embed BC1a (unit edge costs; the
// classifier is cost-independent, witness costs come from the embedding).
Instance bipartite_bc1a();
Instance planar_bc1a();

struct FixtureParams {
    Rational x = Rational(1);        // pos-lower-bound scale
    Rational eps = Rational(1, 4);   // fig1-shapley epsilon
    std::string terminals;           // "s1,t1,s2,t2" names for graph families
};

// Fixture ids: "fig1-shapley", "fig1bc1", "pos-lower-bound",
// "bipartite-bc1a", "planar-bc1a", "bc-minimal-<pattern>" (e.g.
// bc-minimal-bc1a), and graph families "wheelN" / "fanN" / "cycleN" /
// "pathN" / "completeN" (unit costs; these require params.terminals).
// "fig1bc1" is the contracted nine-edge form of the non-enforceable
// example, identical to pos-lower-bound at x = 1.
Instance fixture_instance(const std::string& id, const FixtureParams& params = {});
std::vector<std::string> fixture_ids();

// ---- efficiency classification ---------------------------------------------
enum class Efficiency { efficient, not_efficient, unknown };

struct ClassifyReport {
    Efficiency verdict = Efficiency::unknown;
    // why: a pre-filter tag or "no-bc-by-search" for efficient;
    // the pattern id for not_efficient; "search-budget-exceeded" for unknown
    std::string reason;
    std::optional<BCEmbedding> embedding;  // present iff not_efficient
};

ClassifyReport classify_efficiency(const Graph& g, const Terminals& t,
                                   const DetectOptions& opt = {});

// ---- seeded randomness -------------------------------------------------------
// Random connected simple graph: n uniform in [min_n, max_n], a uniform
// random attachment tree plus `extra` uniform in [extra_min, extra_max]
// distinct non-tree edges.
Graph random_connected_graph(std::mt19937_64& rng, int min_n = 7, int max_n = 9,
                             int extra_min = 3, int extra_max = 7);

// Four distinct vertices (s1, t1, s2, t2); requires n >= 4.
Terminals random_terminals(std::mt19937_64& rng, const Graph& g);

// Per-edge costs p/q with p in [0, max_num] and q in [1, max_den].
std::vector<Rational> random_costs(std::mt19937_64& rng, int m,
                                   int max_num = 20, int max_den = 4);

// Connected graph + distinct terminals + random costs, validated.
Instance random_instance(std::mt19937_64& rng, int min_n = 7, int max_n = 9);

// Random two-terminal series-parallel composition with `ops` compose
// steps (K4-minor-free by construction; may contain parallel edges).
Graph random_series_parallel(std::mt19937_64& rng, int ops = 8);

} // namespace ndg
