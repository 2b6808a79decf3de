// Two-player network design instances: an undirected graph with exact
// rational edge costs and two terminal pairs.  JSON (de)serialization with
// strict validation -- each player's pair must be connected or the file is
// rejected outright.
#pragma once

#include <string>

#include "ndg/graph.hpp"
#include "ndg/rational.hpp"

namespace ndg {

struct Instance {
    Graph g;
    std::vector<Rational> cost;  // per edge id
    int s1 = -1, t1 = -1, s2 = -1, t2 = -1;

    int source(int player) const { return player == 0 ? s1 : s2; }
    int target(int player) const { return player == 0 ? t1 : t2; }

    Rational edge_set_cost(const std::vector<int>& edge_ids) const;

    // Throws bad_input on any structural violation (negative cost, missing
    // terminals, equal endpoints of a pair, disconnected pair).
    void validate() const;
};

// Parse instance JSON:
// {"vertices": [..], "edges": [{"id","u","v","cost"}, ..],
//  "terminals": {"s1","t1","s2","t2"}}
// Costs are "p/q" strings or integers; floats are rejected.
Instance parse_instance(const std::string& json_text);

std::string instance_to_json(const Instance& inst);

// Graph-only JSON (no costs, no terminals): {"vertices", "edges":[{id,u,v}]}.
Graph parse_graph(const std::string& json_text);
std::string graph_to_json(const Graph& g);

// DOT with costs as labels and an optional highlighted edge subset.
std::string instance_to_dot(const Instance& inst,
                            const std::vector<int>& highlight_edges = {});

} // namespace ndg
