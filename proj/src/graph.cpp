#include "ndg/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "ndg/errors.hpp"

namespace ndg {

bool Path::contains_vertex(int v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
}

bool Path::contains_edge(int e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

int Graph::add_vertex(const std::string& name) {
    if (vertex(name) >= 0) throw bad_input("duplicate vertex name '" + name + "'");
    vnames.push_back(name);
    adj.emplace_back();
    return n() - 1;
}

int Graph::add_edge(int u, int v, const std::string& name) {
    if (u < 0 || u >= n() || v < 0 || v >= n())
        throw bad_input("edge '" + name + "' references unknown vertex");
    if (u == v) throw bad_input("self-loop '" + name + "' not allowed");
    for (const auto& e : edges)
        if (e.name == name) throw bad_input("duplicate edge id '" + name + "'");
    int id = m();
    edges.push_back({u, v, name});
    adj[u].push_back({v, id});
    adj[v].push_back({u, id});
    return id;
}

int Graph::vertex(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (vnames[i] == name) return i;
    return -1;
}

int Graph::vertex_checked(const std::string& name) const {
    int v = vertex(name);
    if (v < 0) throw bad_input("unknown vertex '" + name + "'");
    return v;
}

void Graph::rebuild_adj() {
    adj.assign(n(), {});
    for (int e = 0; e < m(); ++e) {
        adj[edges[e].u].push_back({edges[e].v, e});
        adj[edges[e].v].push_back({edges[e].u, e});
    }
    // keep incident edges sorted by edge id so traversal order is canonical
    for (auto& lst : adj)
        std::sort(lst.begin(), lst.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
}

bool Graph::adjacency_consistent() const {
    Graph copy = *this;
    copy.rebuild_adj();
    return copy.adj == adj;
}

// ==================== simple path enumeration ====================

std::vector<Path> enumerate_simple_paths(const Graph& g, int s, int t, long long cap) {
    std::vector<Path> out;
    std::vector<char> used(g.n(), 0);
    Path cur;
    cur.verts.push_back(s);
    used[s] = 1;

    std::function<void(int)> dfs = [&](int v) {
        if (v == t) {
            if ((long long)out.size() >= cap) throw path_explosion(cap);
            out.push_back(cur);
            return;  // extending past t cannot stay simple and still end at t
        }
        for (const auto& [w, e] : g.adj[v]) {
            if (used[w]) continue;
            used[w] = 1;
            cur.verts.push_back(w);
            cur.edges.push_back(e);
            dfs(w);
            cur.verts.pop_back();
            cur.edges.pop_back();
            used[w] = 0;
        }
    };
    dfs(s);
    // DFS with edge-ascending adjacency already yields lexicographic order
    // by edge-id sequence; keep an explicit sort as a belt-and-suspenders
    // canonicalization (it is a no-op in practice).
    std::sort(out.begin(), out.end(),
              [](const Path& a, const Path& b) { return a.edges < b.edges; });
    return out;
}

// ==================== longest simple cycle ====================

int longest_cycle_length(const Graph& g, long long cap) {
    int best = 0;
    long long budget = cap;
    std::vector<char> used(g.n(), 0);

    // Canonical form: enumerate cycles whose minimum vertex is `root`,
    // never walking through vertices below the root.
    std::function<void(int, int, int, int)> dfs = [&](int root, int v, int in_edge, int depth) {
        if (--budget < 0) throw path_explosion(cap);
        for (const auto& [w, e] : g.adj[v]) {
            if (e == in_edge) continue;
            if (w == root) {
                if (depth + 1 >= 2) best = std::max(best, depth + 1);
                continue;
            }
            if (w < root || used[w]) continue;
            used[w] = 1;
            dfs(root, w, e, depth + 1);
            used[w] = 0;
        }
    };

    for (int root = 0; root < g.n(); ++root) {
        used[root] = 1;
        dfs(root, root, -1, 0);
        used[root] = 0;
    }
    return best;
}

// ==================== K4 minor via series-parallel reduction ====================

namespace {

// Reduce one component presented as a multigraph edge list.  Returns true
// iff it reduces to at most one edge (i.e. is K4-minor-free).
bool sp_reduces(std::vector<std::pair<int, int>> es, int n) {
    bool changed = true;
    while (changed) {
        changed = false;

        // merge parallel edges
        std::sort(es.begin(), es.end());
        for (size_t i = 0; i + 1 < es.size(); ++i) {
            if (es[i] == es[i + 1]) {
                es.erase(es.begin() + (long)i + 1);
                changed = true;
                --i;
            }
        }

        // degree census
        std::vector<int> deg(n, 0);
        for (auto& [u, v] : es) { ++deg[u]; ++deg[v]; }

        // delete pendant vertices
        for (int v = 0; v < n; ++v) {
            if (deg[v] == 1) {
                for (size_t i = 0; i < es.size(); ++i)
                    if (es[i].first == v || es[i].second == v) {
                        es.erase(es.begin() + (long)i);
                        break;
                    }
                changed = true;
            }
        }
        if (changed) continue;

        // suppress one degree-2 vertex
        for (int v = 0; v < n && !changed; ++v) {
            if (deg[v] != 2) continue;
            int a = -1, b = -1;
            std::vector<size_t> inc;
            for (size_t i = 0; i < es.size(); ++i) {
                if (es[i].first == v || es[i].second == v) {
                    int o = es[i].first == v ? es[i].second : es[i].first;
                    (a < 0 ? a : b) = o;
                    inc.push_back(i);
                }
            }
            es.erase(es.begin() + (long)inc[1]);
            es.erase(es.begin() + (long)inc[0]);
            if (a != b)  // a == b was a parallel pair; drop the resulting loop
                es.push_back({std::min(a, b), std::max(a, b)});
            changed = true;
        }
    }
    return es.size() <= 1;
}

} // namespace

bool has_k4_minor(const Graph& g) {
    // split into components, reduce each
    std::vector<int> comp(g.n(), -1);
    int ncomp = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : g.adj[v])
                if (comp[w] < 0) { comp[w] = ncomp; stack.push_back(w); }
        }
        ++ncomp;
    }
    for (int c = 0; c < ncomp; ++c) {
        std::vector<std::pair<int, int>> es;
        for (const auto& e : g.edges)
            if (comp[e.u] == c)
                es.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
        if (!sp_reduces(std::move(es), g.n())) return true;
    }
    return false;
}

// ==================== forests / connectivity ====================

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

} // namespace

bool is_forest(const Graph& g, const std::vector<int>& edge_ids) {
    Dsu dsu(g.n());
    for (int e : edge_ids)
        if (!dsu.unite(g.edges[e].u, g.edges[e].v)) return false;
    return true;
}

bool is_connected_between(const Graph& g, int s, int t) {
    if (s == t) return true;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == t) return true;
        for (const auto& [w, e] : g.adj[v])
            if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
    }
    return false;
}

// ==================== DOT export ====================

std::string to_dot(const Graph& g,
                   const std::map<int, std::string>& edge_labels,
                   const std::map<int, std::string>& highlight) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.n(); ++v)
        os << "  \"" << g.vnames[v] << "\";\n";
    for (int e = 0; e < g.m(); ++e) {
        os << "  \"" << g.vnames[g.edges[e].u] << "\" -- \""
           << g.vnames[g.edges[e].v] << "\"";
        std::vector<std::string> attrs;
        auto it = edge_labels.find(e);
        if (it != edge_labels.end()) attrs.push_back("label=\"" + it->second + "\"");
        auto hl = highlight.find(e);
        if (hl != highlight.end()) {
            attrs.push_back("color=\"" + hl->second + "\"");
            attrs.push_back("penwidth=2.0");
        }
        if (!attrs.empty()) {
            os << " [";
            for (size_t i = 0; i < attrs.size(); ++i)
                os << (i ? ", " : "") << attrs[i];
            os << "]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace ndg
