#include "ndg/instance.hpp"

#include <json.hpp>

#include "ndg/errors.hpp"

namespace ndg {

using json = nlohmann::ordered_json;

Rational Instance::edge_set_cost(const std::vector<int>& edge_ids) const {
    Rational total;
    for (int e : edge_ids) total += cost[e];
    return total;
}

void Instance::validate() const {
    if ((int)cost.size() != g.m())
        throw bad_input("cost vector size mismatch");
    for (int e = 0; e < g.m(); ++e)
        if (cost[e].sign() < 0)
            throw bad_input("edge '" + g.edges[e].name + "' has negative cost");
    for (int v : {s1, t1, s2, t2})
        if (v < 0 || v >= g.n()) throw bad_input("terminal vertex out of range");
    if (s1 == t1) throw bad_input("terminal pair 1 has equal endpoints");
    if (s2 == t2) throw bad_input("terminal pair 2 has equal endpoints");
    if (!is_connected_between(g, s1, t1))
        throw bad_input("terminal pair 1 is not connected");
    if (!is_connected_between(g, s2, t2))
        throw bad_input("terminal pair 2 is not connected");
}

namespace {

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw bad_input(std::string("invalid JSON: ") + e.what());
    }
}

std::string get_string(const json& j, const std::string& field) {
    if (!j.contains(field)) throw bad_input("missing field '" + field + "'");
    const auto& v = j.at(field);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw bad_input("field '" + field + "' must be a string");
}

Rational get_cost(const json& j) {
    if (!j.contains("cost")) throw bad_input("edge missing field 'cost'");
    const auto& v = j.at("cost");
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational((long)v.get<long long>());
    if (v.is_number_float())
        throw bad_input("edge cost must be exact (\"p/q\" string or integer), got float");
    throw bad_input("edge cost must be a \"p/q\" string or integer");
}

Graph graph_from_json(const json& j) {
    Graph g;
    if (!j.contains("vertices") || !j.at("vertices").is_array())
        throw bad_input("missing or non-array field 'vertices'");
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw bad_input("vertex names must be strings");
        g.add_vertex(v.get<std::string>());
    }
    if (!j.contains("edges") || !j.at("edges").is_array())
        throw bad_input("missing or non-array field 'edges'");
    for (const auto& e : j.at("edges")) {
        std::string id = get_string(e, "id");
        int u = g.vertex(get_string(e, "u"));
        int v = g.vertex(get_string(e, "v"));
        if (u < 0 || v < 0)
            throw bad_input("edge '" + id + "' references unknown vertex");
        g.add_edge(u, v, id);
    }
    return g;
}

} // namespace

Instance parse_instance(const std::string& json_text) {
    json j = parse_text(json_text);
    Instance inst;
    inst.g = graph_from_json(j);
    for (const auto& e : j.at("edges")) inst.cost.push_back(get_cost(e));
    if (!j.contains("terminals") || !j.at("terminals").is_object())
        throw bad_input("missing or non-object field 'terminals'");
    const auto& t = j.at("terminals");
    inst.s1 = inst.g.vertex_checked(get_string(t, "s1"));
    inst.t1 = inst.g.vertex_checked(get_string(t, "t1"));
    inst.s2 = inst.g.vertex_checked(get_string(t, "s2"));
    inst.t2 = inst.g.vertex_checked(get_string(t, "t2"));
    inst.validate();
    return inst;
}

std::string instance_to_json(const Instance& inst) {
    json j;
    j["vertices"] = json::array();
    for (const auto& name : inst.g.vnames) j["vertices"].push_back(name);
    j["edges"] = json::array();
    for (int e = 0; e < inst.g.m(); ++e) {
        json je;
        je["id"] = inst.g.edges[e].name;
        je["u"] = inst.g.vnames[inst.g.edges[e].u];
        je["v"] = inst.g.vnames[inst.g.edges[e].v];
        je["cost"] = inst.cost[e].str();
        j["edges"].push_back(je);
    }
    j["terminals"] = {{"s1", inst.g.vnames[inst.s1]},
                      {"t1", inst.g.vnames[inst.t1]},
                      {"s2", inst.g.vnames[inst.s2]},
                      {"t2", inst.g.vnames[inst.t2]}};
    return j.dump(2) + "\n";
}

Graph parse_graph(const std::string& json_text) {
    json j = parse_text(json_text);
    return graph_from_json(j);
}

std::string graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = json::array();
    for (const auto& name : g.vnames) j["vertices"].push_back(name);
    j["edges"] = json::array();
    for (int e = 0; e < g.m(); ++e) {
        json je;
        je["id"] = g.edges[e].name;
        je["u"] = g.vnames[g.edges[e].u];
        je["v"] = g.vnames[g.edges[e].v];
        j["edges"].push_back(je);
    }
    return j.dump(2) + "\n";
}

std::string instance_to_dot(const Instance& inst, const std::vector<int>& highlight_edges) {
    std::map<int, std::string> labels;
    for (int e = 0; e < inst.g.m(); ++e)
        labels[e] = inst.g.edges[e].name + ": " + inst.cost[e].str();
    std::map<int, std::string> hl;
    for (int e : highlight_edges) hl[e] = "red";
    return to_dot(inst.g, labels, hl);
}

} // namespace ndg
