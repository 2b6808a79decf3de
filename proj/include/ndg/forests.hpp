// Steiner forests of a two-pair instance: acyclic unions of one path per
// terminal pair.  Exhaustive enumeration (deduplicated, deterministically
// ordered) plus optimal-forest extraction.
#pragma once

#include <vector>

#include "ndg/instance.hpp"

namespace ndg {

struct SteinerForest {
    std::vector<int> edges;  // sorted edge ids; union of p1 and p2, acyclic
    Path p1, p2;             // the unique terminal paths inside the forest
    Rational cost;
};

// All Steiner forests, ordered by (cost, lexicographic edge set).  Both
// players' path enumerations respect `path_cap`.
std::vector<SteinerForest> enumerate_forests(const Instance& inst,
                                             long long path_cap = default_path_cap);

// Serial reference implementation (identical output; kept for testing the
// parallel kernel against).
std::vector<SteinerForest> enumerate_forests_serial(const Instance& inst,
                                                    long long path_cap = default_path_cap);

struct OptimalForests {
    Rational cost;                      // minimum forest cost
    std::vector<SteinerForest> forests; // every forest attaining it
};

OptimalForests optimal_forests(const Instance& inst,
                               long long path_cap = default_path_cap);

} // namespace ndg
