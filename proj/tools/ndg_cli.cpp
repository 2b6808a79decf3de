// ndg: command-line front end for the network-design-game analyzer.
//
// Verbs:
//   opt        enumerate Steiner forests, report the optimum
//   enforce    LP(F) enforceability check for one forest
//   shares     share normal forms: pushed-left check/transform, player-2 max
//   detect-bc  search the nine bad configurations
//   witness    emit a witness cost function from a found configuration
//   pos        exact price of stability
//   classify   efficiency verdict for a graph + terminals
//   gen        seeded random instance, printed as JSON
//   selftest   fixture-pinned acceptance criteria (1-4)
//
// Exit codes: 0 ok, 1 bad input, 2 budget exhausted, 3 internal
// inconsistency (a bug, or a broken invariant worth reporting).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ndg/acceptance.hpp"
#include "ndg/bc.hpp"
#include "ndg/classes.hpp"
#include "ndg/enforce.hpp"
#include "ndg/errors.hpp"
#include "ndg/forests.hpp"
#include "ndg/instance.hpp"
#include "ndg/shares.hpp"

using nlohmann::ordered_json;
using namespace ndg;

namespace {

// ---- shared options ----------------------------------------------------------

struct CommonOpts {
    std::string input;      // instance JSON file
    std::string fixture;    // named fixture id
    std::string x = "1";    // pos-lower-bound scale
    std::string eps = "1/4";  // fig1-shapley epsilon
    std::string terminals;  // graph-family terminals "s1,t1,s2,t2"
    std::string format = "json";
    std::string dot_file;
    long long path_cap = default_path_cap;
};

void add_instance_options(CLI::App* cmd, CommonOpts& o) {
    auto* input = cmd->add_option("--input", o.input, "instance JSON file");
    auto* fixture =
        cmd->add_option("--fixture", o.fixture, "named fixture id (see README)");
    input->excludes(fixture);
    cmd->add_option("--x", o.x, "pos-lower-bound scale (rational, default 1)");
    cmd->add_option("--eps", o.eps, "fig1-shapley epsilon (rational, default 1/4)");
    cmd->add_option("--terminals", o.terminals,
                    "graph-family terminals as s1,t1,s2,t2 vertex names");
    cmd->add_option("--path-cap", o.path_cap, "simple-path enumeration cap");
    cmd->add_option("--format", o.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--dot", o.dot_file, "also write the instance as DOT");
}

Instance load_instance(const CommonOpts& o) {
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw bad_input("cannot open input file '" + o.input + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_instance(buf.str());
    }
    if (!o.fixture.empty()) {
        FixtureParams params;
        params.x = Rational::parse(o.x);
        params.eps = Rational::parse(o.eps);
        params.terminals = o.terminals;
        return fixture_instance(o.fixture, params);
    }
    throw bad_input("pass --input FILE or --fixture ID");
}

void maybe_write_dot(const CommonOpts& o, const Instance& inst,
                     const std::vector<int>& highlight) {
    if (o.dot_file.empty()) return;
    std::ofstream out(o.dot_file);
    if (!out) throw bad_input("cannot write DOT file '" + o.dot_file + "'");
    out << instance_to_dot(inst, highlight);
}

// ---- rendering ---------------------------------------------------------------

void render_text(const ordered_json& j, const std::string& prefix,
                 std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) {
            std::string path = prefix.empty() ? key : prefix + "." + key;
            if (val.is_object() || (val.is_array() && !val.empty() &&
                                    (val[0].is_object() || val[0].is_array()))) {
                render_text(val, path, os);
            } else if (val.is_array()) {
                os << path << ":";
                for (const auto& e : val) os << " " << e.dump();
                os << "\n";
            } else {
                os << path << ": " << (val.is_string()
                                           ? val.get<std::string>()
                                           : val.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (size_t k = 0; k < j.size(); ++k)
            render_text(j[k], prefix + "[" + std::to_string(k) + "]", os);
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

void emit(const ordered_json& j, const CommonOpts& o) {
    if (o.format == "text")
        render_text(j, "", std::cout);
    else
        std::cout << j.dump(2) << "\n";
}

ordered_json forest_json(const Instance& inst, const SteinerForest& f) {
    ordered_json ids = ordered_json::array();
    ordered_json names = ordered_json::array();
    for (int e : f.edges) {
        ids.push_back(e);
        names.push_back(inst.g.edges[e].name);
    }
    return ordered_json{{"edges", ids}, {"edge_names", names},
                        {"cost", f.cost.str()}};
}

ordered_json shares_json(const Instance& inst, const CostShares& shares) {
    ordered_json players = ordered_json::array();
    for (int p = 0; p < 2; ++p) {
        ordered_json per_edge = ordered_json::object();
        for (const auto& [e, val] : shares.share[p])
            per_edge[inst.g.edges[e].name] = val.str();
        players.push_back(ordered_json{{"player", p + 1},
                                       {"total", shares.player_total(p).str()},
                                       {"edges", per_edge}});
    }
    return players;
}

ordered_json embedding_json(const Graph& g, const BCEmbedding& emb) {
    const BCPattern& pat = bc_pattern(emb.pattern);
    ordered_json nodes = ordered_json::object();
    for (size_t k = 0; k < pat.nodes.size(); ++k)
        nodes[pat.nodes[k]] = g.vnames[emb.node_image[k]];
    ordered_json slots = ordered_json::array();
    for (size_t k = 0; k < pat.slots.size(); ++k) {
        ordered_json verts = ordered_json::array();
        for (int v : emb.slot_image[k].verts) verts.push_back(g.vnames[v]);
        slots.push_back(ordered_json{{"slot", pat.slots[k].name},
                                     {"solid", pat.slots[k].solid},
                                     {"collapsed", emb.slot_image[k].length() == 0},
                                     {"vertices", verts}});
    }
    ordered_json roles = ordered_json::object();
    const char* role_names[4] = {"u", "v", "w", "x"};
    for (int k = 0; k < 4; ++k)
        roles[role_names[k]] = g.vnames[emb.role_image[k]];
    return ordered_json{{"pattern", emb.pattern},
                        {"orientation", emb.orientation},
                        {"orientation_name", orientation_name(emb.orientation)},
                        {"roles", roles},
                        {"nodes", nodes},
                        {"slots", slots}};
}

// parse --forest: "OPT" or comma-separated edge ids
SteinerForest pick_forest(const Instance& inst, const std::string& spec,
                          long long path_cap) {
    if (spec.empty() || spec == "OPT") {
        auto opt = optimal_forests(inst, path_cap);
        return opt.forests.front();
    }
    std::vector<int> ids;
    std::string cur;
    std::istringstream in(spec);
    while (std::getline(in, cur, ',')) {
        try {
            size_t used = 0;
            int e = std::stoi(cur, &used);
            if (used != cur.size()) throw std::invalid_argument(cur);
            ids.push_back(e);
        } catch (const std::exception&) {
            throw bad_input("--forest wants OPT or comma-separated edge ids, got '" +
                            cur + "'");
        }
    }
    std::sort(ids.begin(), ids.end());
    for (const auto& f : enumerate_forests(inst, path_cap))
        if (f.edges == ids) return f;
    throw bad_input("edge set {" + spec + "} is not a Steiner forest of the instance");
}

// ---- verbs -------------------------------------------------------------------

int cmd_opt(const CommonOpts& o) {
    Instance inst = load_instance(o);
    auto forests = enumerate_forests(inst, o.path_cap);
    auto opt = optimal_forests(inst, o.path_cap);
    ordered_json out{{"schema_version", 1},
                     {"forest_count", forests.size()},
                     {"optimal_cost", opt.cost.str()}};
    ordered_json best = ordered_json::array();
    for (const auto& f : opt.forests) best.push_back(forest_json(inst, f));
    out["optimal_forests"] = best;
    maybe_write_dot(o, inst, opt.forests.front().edges);
    emit(out, o);
    return 0;
}

int cmd_enforce(const CommonOpts& o, const std::string& forest_spec,
                bool with_protocol) {
    Instance inst = load_instance(o);
    SteinerForest f = pick_forest(inst, forest_spec, o.path_cap);
    EnforceReport rep = check_enforceable(inst, f, o.path_cap);
    ordered_json out{{"schema_version", 1},
                     {"forest", forest_json(inst, f)},
                     {"forest_cost", rep.forest_cost.str()},
                     {"lp_optimum", rep.lp_optimum.str()},
                     {"enforceable", rep.enforceable},
                     {"shares", shares_json(inst, rep.shares)}};
    if (!rep.unpaid.empty()) {
        ordered_json unpaid = ordered_json::array();
        for (const auto& [e, gap] : rep.unpaid)
            unpaid.push_back(ordered_json{{"edge", inst.g.edges[e].name},
                                          {"deficit", gap.str()}});
        out["unpaid"] = unpaid;
    }
    if (with_protocol) {
        if (rep.enforceable) {
            SeparableProtocol proto = emit_protocol(inst, f, rep.shares);
            ordered_json rows = ordered_json::array();
            for (const auto& [key, vals] : proto.table)
                rows.push_back(ordered_json{{"edge", inst.g.edges[key.first].name},
                                            {"mask", key.second},
                                            {"share1", vals[0].str()},
                                            {"share2", vals[1].str()}});
            out["protocol"] = rows;
            out["pne_verified"] = verify_pne(inst, f, proto, o.path_cap);
        } else {
            out["protocol"] = nullptr;  // nothing to emit for a deficit forest
        }
    }
    maybe_write_dot(o, inst, f.edges);
    emit(out, o);
    return 0;
}

int cmd_shares(const CommonOpts& o, const std::string& forest_spec, bool push,
               bool max2) {
    Instance inst = load_instance(o);
    SteinerForest f = pick_forest(inst, forest_spec, o.path_cap);
    EnforceReport rep = check_enforceable(inst, f, o.path_cap);
    EdgeOrdering ord = compute_ordering(inst, f);
    ordered_json order = ordered_json::array();
    for (int e : ord.order) order.push_back(inst.g.edges[e].name);
    ordered_json out{{"schema_version", 1},
                     {"forest", forest_json(inst, f)},
                     {"lp_optimum", rep.lp_optimum.str()},
                     {"enforceable", rep.enforceable},
                     {"ordering", ordered_json{{"order", order},
                                               {"l1", ord.l1},
                                               {"l2", ord.l2},
                                               {"m", ord.m},
                                               {"r1", ord.r1},
                                               {"r2", ord.r2}}},
                     {"shares", shares_json(inst, rep.shares)}};

    PlCheck pl = is_pushed_left(inst, f, rep.shares, o.path_cap);
    out["pushed_left"] = pl.pushed_left;
    if (pl.violation) {
        out["violation"] =
            ordered_json{{"player", pl.violation->player + 1},
                         {"early", inst.g.edges[pl.violation->edge_early].name},
                         {"late", inst.g.edges[pl.violation->edge_late].name},
                         {"eps", pl.violation->eps.str()}};
    }
    if (push) {
        CostShares pushed = push_left(inst, f, rep.shares, o.path_cap);
        out["pushed_shares"] = shares_json(inst, pushed);
    }
    if (max2) {
        Max2Result m2 = maximize_for_player2(inst, f, o.path_cap);
        ordered_json mj{{"enforceable", m2.enforceable},
                        {"player2_total", m2.shares.player_total(1).str()},
                        {"change_steps", m2.change_steps},
                        {"two_m_ok", m2.two_m_ok},
                        {"nc_ok", m2.nc_ok},
                        {"case_r", m2.case_r},
                        {"first_unpaid_pos", m2.first_unpaid_pos},
                        {"shares", shares_json(inst, m2.shares)}};
        if (!m2.note.empty()) mj["note"] = m2.note;
        out["max2"] = mj;
    }
    maybe_write_dot(o, inst, f.edges);
    emit(out, o);
    return 0;
}

int cmd_detect(const CommonOpts& o, long long search_cap, bool no_prefilters,
               bool serial) {
    Instance inst = load_instance(o);
    Terminals t{inst.s1, inst.t1, inst.s2, inst.t2};
    DetectOptions opt;
    opt.search_cap = search_cap;
    opt.use_prefilters = !no_prefilters;
    opt.parallel = !serial;
    DetectReport rep = detect_bc(inst.g, t, opt);
    ordered_json out{{"schema_version", 1},
                     {"found", rep.embedding.has_value()}};
    if (rep.embedding) {
        std::string why;
        if (!validate_embedding(*rep.embedding, inst.g, t, &why))
            throw internal_consistency_error("embedding failed revalidation: " + why);
        out["embedding"] = embedding_json(inst.g, *rep.embedding);
    } else {
        out["reason"] = rep.prefilter;
    }
    maybe_write_dot(o, inst, {});
    emit(out, o);
    return 0;
}

int cmd_witness(const CommonOpts& o, long long search_cap) {
    Instance inst = load_instance(o);
    Terminals t{inst.s1, inst.t1, inst.s2, inst.t2};
    DetectOptions opt;
    opt.search_cap = search_cap;
    DetectReport rep = detect_bc(inst.g, t, opt);
    if (!rep.embedding) {
        emit(ordered_json{{"schema_version", 1},
                          {"found", false},
                          {"reason", rep.prefilter}},
             o);
        return 0;
    }
    Instance w = generate_witness(*rep.embedding, inst.g);
    auto opt_forests = optimal_forests(w, o.path_cap);
    EnforceReport enf = check_enforceable(w, opt_forests.forests.front(), o.path_cap);
    ordered_json out{{"schema_version", 1},
                     {"found", true},
                     {"pattern", rep.embedding->pattern},
                     {"optimal_cost", opt_forests.cost.str()},
                     {"lp_optimum", enf.lp_optimum.str()},
                     {"witness", ordered_json::parse(instance_to_json(w))}};
    maybe_write_dot(o, w, opt_forests.forests.front().edges);
    emit(out, o);
    return 0;
}

int cmd_pos(const CommonOpts& o) {
    Instance inst = load_instance(o);
    PosResult pr = price_of_stability(inst, o.path_cap);
    ordered_json out{{"schema_version", 1},
                     {"pos", pr.pos.str()},
                     {"optimal_cost", pr.optimal_cost.str()},
                     {"best_enforceable", forest_json(inst, pr.best)},
                     {"lp_optimum", pr.report.lp_optimum.str()}};
    maybe_write_dot(o, inst, pr.best.edges);
    emit(out, o);
    return 0;
}

int cmd_classify(const CommonOpts& o, long long search_cap) {
    Instance inst = load_instance(o);
    Terminals t{inst.s1, inst.t1, inst.s2, inst.t2};
    DetectOptions opt;
    opt.search_cap = search_cap;
    ClassifyReport rep = classify_efficiency(inst.g, t, opt);
    const char* verdict = rep.verdict == Efficiency::efficient
                              ? "efficient"
                              : rep.verdict == Efficiency::not_efficient
                                    ? "not-efficient"
                                    : "unknown";
    ordered_json out{{"schema_version", 1},
                     {"verdict", verdict},
                     {"reason", rep.reason}};
    if (rep.embedding) out["embedding"] = embedding_json(inst.g, *rep.embedding);
    emit(out, o);
    return 0;
}

int cmd_gen(const CommonOpts& o, unsigned long long seed, int min_n, int max_n) {
    std::mt19937_64 rng(seed);
    Instance inst = random_instance(rng, min_n, max_n);
    maybe_write_dot(o, inst, {});
    std::cout << instance_to_json(inst) << "\n";
    return 0;
}

int cmd_selftest() {
    auto results = run_criteria({1, 2, 3, 4});
    std::cout << criteria_table(results);
    int fails = 0;
    for (const auto& r : results) fails += r.pass ? 0 : 1;
    return fails == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of two-player network design games"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string forest_spec = "OPT";
    bool with_protocol = false, push = false, max2 = false;
    bool no_prefilters = false, serial = false;
    long long search_cap = DetectOptions{}.search_cap;
    unsigned long long seed = 1;
    int min_n = 7, max_n = 9;

    auto* opt_cmd = app.add_subcommand("opt", "enumerate forests, report the optimum");
    add_instance_options(opt_cmd, o);

    auto* enforce_cmd =
        app.add_subcommand("enforce", "LP enforceability check for one forest");
    add_instance_options(enforce_cmd, o);
    enforce_cmd->add_option("--forest", forest_spec,
                            "OPT or comma-separated edge ids (default OPT)");
    enforce_cmd->add_flag("--protocol", with_protocol,
                          "emit a protocol table when enforceable");

    auto* shares_cmd =
        app.add_subcommand("shares", "share normal forms for one forest");
    add_instance_options(shares_cmd, o);
    shares_cmd->add_option("--forest", forest_spec,
                           "OPT or comma-separated edge ids (default OPT)");
    shares_cmd->add_flag("--push", push, "apply the pushed-left transform");
    shares_cmd->add_flag("--max2", max2, "maximize player 2's total");

    auto* detect_cmd =
        app.add_subcommand("detect-bc", "search the nine bad configurations");
    add_instance_options(detect_cmd, o);
    detect_cmd->add_option("--search-cap", search_cap, "node-expansion budget");
    detect_cmd->add_flag("--no-prefilters", no_prefilters,
                         "skip the cheap absence proofs");
    detect_cmd->add_flag("--serial", serial, "disable the parallel task sweep");

    auto* witness_cmd =
        app.add_subcommand("witness", "witness costs from a found configuration");
    add_instance_options(witness_cmd, o);
    witness_cmd->add_option("--search-cap", search_cap, "node-expansion budget");

    auto* pos_cmd = app.add_subcommand("pos", "exact price of stability");
    add_instance_options(pos_cmd, o);

    auto* classify_cmd =
        app.add_subcommand("classify", "efficiency verdict for the instance graph");
    add_instance_options(classify_cmd, o);
    classify_cmd->add_option("--search-cap", search_cap, "node-expansion budget");

    auto* gen_cmd = app.add_subcommand("gen", "seeded random instance as JSON");
    gen_cmd->add_option("--dot", o.dot_file, "also write the instance as DOT");
    gen_cmd->add_option("--seed", seed, "RNG seed (default 1)");
    gen_cmd->add_option("--min-n", min_n, "minimum vertex count");
    gen_cmd->add_option("--max-n", max_n, "maximum vertex count");

    auto* selftest_cmd =
        app.add_subcommand("selftest", "fixture-pinned acceptance criteria");
    (void)selftest_cmd;

    CLI11_PARSE(app, argc, argv);

    try {
        if (opt_cmd->parsed()) return cmd_opt(o);
        if (enforce_cmd->parsed()) return cmd_enforce(o, forest_spec, with_protocol);
        if (shares_cmd->parsed()) return cmd_shares(o, forest_spec, push, max2);
        if (detect_cmd->parsed())
            return cmd_detect(o, search_cap, no_prefilters, serial);
        if (witness_cmd->parsed()) return cmd_witness(o, search_cap);
        if (pos_cmd->parsed()) return cmd_pos(o);
        if (classify_cmd->parsed()) return cmd_classify(o, search_cap);
        if (gen_cmd->parsed()) return cmd_gen(o, seed, min_n, max_n);
        if (selftest_cmd->parsed()) return cmd_selftest();
    } catch (const bad_input& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const path_explosion& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const search_budget_exceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const internal_consistency_error& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 3;
    } catch (const error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
