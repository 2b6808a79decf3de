// Bad Configurations: the nine forbidden terminal-anchored patterns, their
// embedding search (backtracking over internally-disjoint slot paths, all
// terminal-role orientations), independent embedding validation, and the
// witness cost functions certifying non-efficiency.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ndg/instance.hpp"

namespace ndg {

// One abstract path slot of a pattern.  Solid slots embed as >= 1 edge;
// dashed slots may collapse to a single node (identifying endpoints).
struct BCSlot {
    std::string name;
    int a = -1, b = -1;      // pattern node indices, direction a -> b
    bool solid = true;
    Rational witness_cost;   // whole-slot cost in the witness table
};

struct BCPattern {
    std::string id;
    std::vector<std::string> nodes;
    int u = -1, v = -1, w = -1, x = -1;   // role node indices
    std::vector<BCSlot> slots;
    std::vector<int> pu_slots, pl_slots;  // the two terminal paths as slot sequences
    // derived at construction:
    int min_vertices = 0;     // distinct node classes with all dashed slots collapsed
    int min_edges = 0;        // number of solid slots
    std::vector<int> search_order;  // slot indices, each with an endpoint placed
                                    // by the time it is processed

    int node_index(const std::string& name) const;
    int slot_index(const std::string& name) const;
    Rational witness_total() const;   // sum of all slot costs
};

// The nine patterns in listing order:
// BC1a, BC1b, BC2a, BC2b, BC2c, BC2d, BC3, BC4a, BC4b.
const std::vector<BCPattern>& bc_patterns();
const BCPattern& bc_pattern(const std::string& id);  // throws bad_parameter

struct Terminals {
    int s1 = -1, t1 = -1, s2 = -1, t2 = -1;
};

// Orientation o in 0..7: bit 0 = {u,v} belongs to player 2 instead of
// player 1; bit 1 = u,v swapped within their pair; bit 2 = w,x swapped.
std::array<int, 4> orientation_roles(const Terminals& t, int o);  // images of u,v,w,x
std::string orientation_name(int o);

struct BCEmbedding {
    std::string pattern;
    int orientation = 0;
    std::array<int, 4> role_image{-1, -1, -1, -1};  // images of u, v, w, x
    std::vector<int> node_image;                    // pattern node -> host vertex
    std::vector<Path> slot_image;                   // directed a -> b; single-vertex
                                                    // paths are collapsed dashed slots
};

struct DetectOptions {
    bool use_prefilters = true;
    long long search_cap = 20'000'000;  // node expansions per (pattern, orientation)
    bool parallel = true;
};

struct DetectReport {
    std::optional<BCEmbedding> embedding;
    // which pre-filter proved absence ("fewer-than-7-vertices",
    // "fewer-than-9-edges", "k4-minor-free", "longest-cycle-at-most-6"),
    // "no-bc-by-search" when the full search exhausted, "" when found
    std::string prefilter;
};

// Search all patterns x all 8 orientations; first embedding in
// deterministic (pattern, orientation, search) order, or none.
DetectReport detect_bc(const Graph& g, const Terminals& t, const DetectOptions& opt = {});

// Independent structural re-validation of an embedding (path validity,
// solid/dashed lengths, endpoint consistency, pairwise disjointness).
bool validate_embedding(const BCEmbedding& emb, const Graph& g,
                        std::string* why = nullptr);
// Additionally checks that role images match the terminals under the
// embedding's orientation.
bool validate_embedding(const BCEmbedding& emb, const Graph& g, const Terminals& t,
                        std::string* why = nullptr);

// Witness cost function: slot costs on each slot's first edge, zero on
// remaining slot edges, and 1 + (total table cost) on every edge outside
// the embedding.  Terminals are the embedding's role images.
Instance generate_witness(const BCEmbedding& emb, const Graph& g);

// Minimal instantiation of a pattern: every slot realized as one edge.
struct MinimalBc {
    Graph g;
    Terminals t;
    BCEmbedding emb;
};
MinimalBc bc_minimal(const std::string& pattern_id);

} // namespace ndg
