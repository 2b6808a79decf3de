// Undirected multigraphs (parallel edges allowed, self-loops rejected),
// simple-path and cycle enumeration with hard caps, a K4-minor test via
// series-parallel reduction, and DOT export.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ndg/rational.hpp"

namespace ndg {

// A simple path: verts.size() == edges.size() + 1, all vertices distinct.
// A single vertex (no edges) is a valid degenerate path.
struct Path {
    std::vector<int> verts;
    std::vector<int> edges;

    int length() const { return (int)edges.size(); }
    int source() const { return verts.front(); }
    int target() const { return verts.back(); }
    bool contains_vertex(int v) const;
    bool contains_edge(int e) const;
};

struct Graph {
    struct Edge {
        int u = -1, v = -1;
        std::string name;
    };

    std::vector<std::string> vnames;
    std::vector<Edge> edges;
    // adjacency: vertex -> list of (neighbor, edge id), kept sorted by edge id
    std::vector<std::vector<std::pair<int, int>>> adj;

    int n() const { return (int)vnames.size(); }
    int m() const { return (int)edges.size(); }

    int add_vertex(const std::string& name);
    int add_edge(int u, int v, const std::string& name);

    int vertex(const std::string& name) const;         // -1 if absent
    int vertex_checked(const std::string& name) const; // throws bad_input

    void rebuild_adj();
    bool adjacency_consistent() const;  // recompute and compare

    int other_end(int e, int v) const {
        return edges[e].u == v ? edges[e].v : edges[e].u;
    }
};

inline constexpr long long default_path_cap = 100000;

// All simple s-t paths, ordered lexicographically by edge-id sequence.
// Throws path_explosion if more than `cap` paths exist (never truncates).
// s == t yields the single zero-length path.
std::vector<Path> enumerate_simple_paths(const Graph& g, int s, int t,
                                         long long cap = default_path_cap);

// Number of edges of a longest simple cycle; 0 if the graph is acyclic.
// Parallel edges form 2-cycles.  `cap` bounds search-tree expansions.
int longest_cycle_length(const Graph& g, long long cap = 50'000'000);

// True iff the graph has a K4 minor, decided by exhaustive series-parallel
// reduction (delete isolated/pendant vertices, merge parallel edges,
// suppress degree-2 vertices) applied per component.
bool has_k4_minor(const Graph& g);

// True iff the given edge subset is acyclic.
bool is_forest(const Graph& g, const std::vector<int>& edge_ids);

bool is_connected_between(const Graph& g, int s, int t);

// DOT export.  Optional per-edge labels and a highlight map
// edge id -> color name; highlighted edges are drawn bold.
std::string to_dot(const Graph& g,
                   const std::map<int, std::string>& edge_labels = {},
                   const std::map<int, std::string>& highlight = {});

} // namespace ndg
