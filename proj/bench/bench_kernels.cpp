// Micro-benchmark for the three parallel kernels, each timed against its
// serial reference on the same inputs.  The parallel and serial results are
// compared for equality along the way -- a benchmark that silently computes
// something else is worse than no benchmark.
//
// Usage: bench_kernels [repeats]   (default 3)
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef NDG_HAVE_OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "ndg/bc.hpp"
#include "ndg/classes.hpp"
#include "ndg/enforce.hpp"
#include "ndg/forests.hpp"
#include "ndg/shares.hpp"

using namespace ndg;

namespace {

double now_seconds() {
#ifdef NDG_HAVE_OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

struct Timing {
    double serial = 0.0;
    double parallel = 0.0;
};

void report(const std::string& name, const Timing& t, int repeats) {
    double speedup = t.parallel > 0.0 ? t.serial / t.parallel : 0.0;
    std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
                name.c_str(), 1000.0 * t.serial / repeats,
                1000.0 * t.parallel / repeats, speedup);
}

// ---- kernel 1: forest enumeration over first-player paths ------------------

Timing bench_forests(int repeats) {
    std::mt19937_64 rng(0xbe9c0001);
    std::vector<Instance> inputs;
    for (int k = 0; k < 6; ++k) inputs.push_back(random_instance(rng, 8, 9));

    Timing t;
    size_t check_serial = 0, check_parallel = 0;
    for (int r = 0; r < repeats; ++r) {
        double t0 = now_seconds();
        for (const auto& inst : inputs)
            check_serial += enumerate_forests_serial(inst).size();
        double t1 = now_seconds();
        for (const auto& inst : inputs)
            check_parallel += enumerate_forests(inst).size();
        double t2 = now_seconds();
        t.serial += t1 - t0;
        t.parallel += t2 - t1;
    }
    if (check_serial != check_parallel) {
        std::fprintf(stderr, "forest kernel mismatch: %zu vs %zu\n", check_serial,
                     check_parallel);
        std::exit(1);
    }
    return t;
}

// ---- kernel 2: pushed-left pair sweep (one epsilon LP per pair) -------------

Timing bench_pushed_left(int repeats) {
    std::mt19937_64 rng(0xbe9c0002);
    struct Case {
        Instance inst;
        SteinerForest forest;
        CostShares shares;
    };
    std::vector<Case> cases;
    Instance fig = fixture_instance("fig1bc1");
    auto opt = optimal_forests(fig);
    cases.push_back({fig, opt.forests[0], check_enforceable(fig, opt.forests[0]).shares});
    for (int k = 0; k < 5; ++k) {
        Instance inst = random_instance(rng, 7, 8);
        auto o = optimal_forests(inst);
        EnforceReport rep = check_enforceable(inst, o.forests[0]);
        cases.push_back({std::move(inst), o.forests[0], rep.shares});
    }

    Timing t;
    int check_serial = 0, check_parallel = 0;
    for (int r = 0; r < repeats; ++r) {
        double t0 = now_seconds();
        for (const auto& c : cases)
            check_serial += is_pushed_left_serial(c.inst, c.forest, c.shares).pushed_left;
        double t1 = now_seconds();
        for (const auto& c : cases)
            check_parallel += is_pushed_left(c.inst, c.forest, c.shares).pushed_left;
        double t2 = now_seconds();
        t.serial += t1 - t0;
        t.parallel += t2 - t1;
    }
    if (check_serial != check_parallel) {
        std::fprintf(stderr, "pushed-left kernel mismatch\n");
        std::exit(1);
    }
    return t;
}

// ---- kernel 3: configuration search over the 72-task list -------------------

Timing bench_detect(int repeats) {
    std::mt19937_64 rng(0xbe9c0003);
    struct Host {
        Graph g;
        Terminals t;
    };
    std::vector<Host> hosts;
    for (const char* id : {"bipartite-bc1a", "planar-bc1a"}) {
        Instance inst = fixture_instance(id);
        hosts.push_back({inst.g, Terminals{inst.s1, inst.t1, inst.s2, inst.t2}});
    }
    for (int k = 0; k < 4; ++k) {
        Graph g = random_connected_graph(rng, 8, 9, 5, 8);
        Terminals t = random_terminals(rng, g);
        hosts.push_back({std::move(g), t});
    }

    DetectOptions ser, par;
    ser.parallel = false;
    par.parallel = true;
    // skip the prefilters so the search itself is what gets measured
    ser.use_prefilters = par.use_prefilters = false;

    Timing t;
    int check_serial = 0, check_parallel = 0;
    for (int r = 0; r < repeats; ++r) {
        double t0 = now_seconds();
        for (const auto& h : hosts)
            check_serial += detect_bc(h.g, h.t, ser).embedding.has_value();
        double t1 = now_seconds();
        for (const auto& h : hosts)
            check_parallel += detect_bc(h.g, h.t, par).embedding.has_value();
        double t2 = now_seconds();
        t.serial += t1 - t0;
        t.parallel += t2 - t1;
    }
    if (check_serial != check_parallel) {
        std::fprintf(stderr, "detect kernel mismatch\n");
        std::exit(1);
    }
    return t;
}

} // namespace

int main(int argc, char** argv) {
    int repeats = 3;
    if (argc > 1) repeats = std::max(1, std::atoi(argv[1]));

#ifdef NDG_HAVE_OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; 'parallel' runs the same serial path\n");
#endif
    std::printf("repeats per kernel: %d\n\n", repeats);

    report("forest-enumeration", bench_forests(repeats), repeats);
    report("pushed-left-sweep", bench_pushed_left(repeats), repeats);
    report("bc-search-72-tasks", bench_detect(repeats), repeats);

    std::printf("\nnote: single-hardware-thread machines will show speedup near "
                "1.0x;\nthe point of the comparison is the equality check, the "
                "speedup is a bonus.\n");
    return 0;
}
