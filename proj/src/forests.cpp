#include "ndg/forests.hpp"

#include <algorithm>
#include <set>

#include "ndg/errors.hpp"

#ifdef NDG_HAVE_OPENMP
#include <omp.h>
#endif

namespace ndg {

namespace {

std::vector<int> sorted_union(const Path& a, const Path& b) {
    std::vector<int> u = a.edges;
    u.insert(u.end(), b.edges.begin(), b.edges.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

void sort_forests(std::vector<SteinerForest>& out) {
    // Cost ascending, then lexicographic edge-id sets, so the output order
    // is reproducible byte for byte.
    std::sort(out.begin(), out.end(), [](const SteinerForest& a, const SteinerForest& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        return a.edges < b.edges;
    });
}

void dedup_forests(std::vector<SteinerForest>& out) {
    // An acyclic union determines its terminal paths uniquely, so duplicates
    // cannot arise from distinct path pairs; the guard is defensive.
    std::set<std::vector<int>> seen;
    std::vector<SteinerForest> uniq;
    for (auto& f : out)
        if (seen.insert(f.edges).second) uniq.push_back(std::move(f));
    out = std::move(uniq);
}

std::vector<SteinerForest> combine(const Instance& inst,
                                   const std::vector<Path>& paths1,
                                   const std::vector<Path>& paths2,
                                   bool parallel) {
    const int n1 = (int)paths1.size();
    std::vector<std::vector<SteinerForest>> buckets(n1);

    auto handle = [&](int i) {
        for (const auto& p2 : paths2) {
            std::vector<int> u = sorted_union(paths1[i], p2);
            if (!is_forest(inst.g, u)) continue;
            SteinerForest f;
            f.edges = std::move(u);
            f.p1 = paths1[i];
            f.p2 = p2;
            f.cost = inst.edge_set_cost(f.edges);
            buckets[i].push_back(std::move(f));
        }
    };

    if (parallel) {
#ifdef NDG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < n1; ++i) handle(i);
    } else {
        for (int i = 0; i < n1; ++i) handle(i);
    }

    std::vector<SteinerForest> out;
    for (auto& b : buckets)
        for (auto& f : b) out.push_back(std::move(f));
    dedup_forests(out);
    sort_forests(out);
    return out;
}

} // namespace

std::vector<SteinerForest> enumerate_forests_serial(const Instance& inst, long long path_cap) {
    auto paths1 = enumerate_simple_paths(inst.g, inst.s1, inst.t1, path_cap);
    auto paths2 = enumerate_simple_paths(inst.g, inst.s2, inst.t2, path_cap);
    return combine(inst, paths1, paths2, false);
}

std::vector<SteinerForest> enumerate_forests(const Instance& inst, long long path_cap) {
    auto paths1 = enumerate_simple_paths(inst.g, inst.s1, inst.t1, path_cap);
    auto paths2 = enumerate_simple_paths(inst.g, inst.s2, inst.t2, path_cap);
    return combine(inst, paths1, paths2, true);
}

OptimalForests optimal_forests(const Instance& inst, long long path_cap) {
    auto all = enumerate_forests(inst, path_cap);
    if (all.empty())
        throw internal_consistency_error("no Steiner forest exists despite connected pairs");
    OptimalForests res;
    res.cost = all.front().cost;
    for (auto& f : all) {
        if (f.cost != res.cost) break;  // sorted by cost
        res.forests.push_back(std::move(f));
    }
    return res;
}

} // namespace ndg
