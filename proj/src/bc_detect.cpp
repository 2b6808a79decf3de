// Embedding search for the nine bad-configuration patterns.
//
// A task is one (pattern, terminal orientation) pair: 9 x 8 = 72 tasks,
// searched independently (in parallel when OpenMP is available).  Each task
// runs a backtracking search that places pattern nodes and realizes slots
// as internally-disjoint host paths.  Dashed slots try the collapsed
// (empty) realization first, so the first hit is a minimal-ish embedding
// and the search order is fully deterministic: the report is the first
// success in (pattern, orientation) task order.
#include "ndg/bc.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ndg/errors.hpp"

#ifdef NDG_HAVE_OPENMP
#include <omp.h>
#endif

namespace ndg {

std::array<int, 4> orientation_roles(const Terminals& t, int o) {
    if (o < 0 || o > 7) throw bad_parameter("orientation must be in 0..7");
    int s_uv = (o & 1) ? t.s2 : t.s1;
    int t_uv = (o & 1) ? t.t2 : t.t1;
    int s_wx = (o & 1) ? t.s1 : t.s2;
    int t_wx = (o & 1) ? t.t1 : t.t2;
    int u = (o & 2) ? t_uv : s_uv;
    int v = (o & 2) ? s_uv : t_uv;
    int w = (o & 4) ? t_wx : s_wx;
    int x = (o & 4) ? s_wx : t_wx;
    return {u, v, w, x};
}

std::string orientation_name(int o) {
    if (o < 0 || o > 7) throw bad_parameter("orientation must be in 0..7");
    std::string s = (o & 1) ? "uv=p2" : "uv=p1";
    s += (o & 2) ? ",u=t" : ",u=s";
    s += (o & 4) ? ",w=t" : ",w=s";
    return s;
}

namespace {

Path reverse_path(const Path& p) {
    Path r;
    r.verts.assign(p.verts.rbegin(), p.verts.rend());
    r.edges.assign(p.edges.rbegin(), p.edges.rend());
    return r;
}

// Backtracking state for one (pattern, orientation) task.
struct Embedder {
    const Graph& g;
    const BCPattern& pat;
    long long budget;
    const long long cap;

    std::vector<int> node_img;   // pattern node -> host vertex, -1 unplaced
    std::vector<char> v_used;    // occupied by a node image or slot interior
    std::vector<char> e_used;
    std::vector<Path> slot_img;  // canonical direction a -> b

    Embedder(const Graph& g_, const BCPattern& p_, long long cap_)
        : g(g_), pat(p_), budget(cap_), cap(cap_),
          node_img(p_.nodes.size(), -1),
          v_used(g_.n(), 0), e_used(g_.m(), 0),
          slot_img(p_.slots.size()) {}

    void spend() {
        if (--budget < 0) throw search_budget_exceeded(cap);
    }

    bool place_roles(const std::array<int, 4>& roles) {
        const int nodes[4] = {pat.u, pat.v, pat.w, pat.x};
        for (int i = 0; i < 4; ++i) {
            int img = roles[i];
            if (img < 0 || img >= g.n() || v_used[img]) return false;
            node_img[nodes[i]] = img;
            v_used[img] = 1;
        }
        return true;
    }

    bool assign(size_t k) {
        if (k == pat.search_order.size()) return true;
        const int si = pat.search_order[k];
        const BCSlot& slot = pat.slots[si];
        int a_img = node_img[slot.a];
        int b_img = node_img[slot.b];
        // search from a placed endpoint; reversed when only b is placed
        bool reversed = (a_img < 0);
        int start = reversed ? b_img : a_img;
        int goal_node = reversed ? slot.a : slot.b;
        int goal_img = node_img[goal_node];

        // collapsed realization first (dashed slots only)
        if (!slot.solid) {
            if (goal_img == start || goal_img < 0) {
                bool fresh = (goal_img < 0);
                if (fresh) node_img[goal_node] = start;
                Path single;
                single.verts = {start};
                slot_img[si] = std::move(single);
                if (assign(k + 1)) return true;
                slot_img[si] = Path{};
                if (fresh) node_img[goal_node] = -1;
            }
        }
        Path cur;
        cur.verts = {start};
        return extend(k, si, goal_node, cur, reversed);
    }

    // Grow the current slot path from its last vertex.
    bool extend(size_t k, int si, int goal_node, Path& cur, bool reversed) {
        const int at = cur.verts.back();
        const int goal_img = node_img[goal_node];
        for (const auto& [nbr, e] : g.adj[at]) {
            spend();
            if (e_used[e]) continue;
            if (goal_img >= 0) {
                if (nbr == goal_img) {
                    // complete at the placed goal (its vertex stays owned
                    // by the node image, not marked here)
                    e_used[e] = 1;
                    cur.verts.push_back(nbr);
                    cur.edges.push_back(e);
                    slot_img[si] = reversed ? reverse_path(cur) : cur;
                    if (assign(k + 1)) return true;
                    slot_img[si] = Path{};
                    cur.verts.pop_back();
                    cur.edges.pop_back();
                    e_used[e] = 0;
                    continue;
                }
                if (v_used[nbr]) continue;
                e_used[e] = 1;
                v_used[nbr] = 1;
                cur.verts.push_back(nbr);
                cur.edges.push_back(e);
                if (extend(k, si, goal_node, cur, reversed)) return true;
                cur.verts.pop_back();
                cur.edges.pop_back();
                v_used[nbr] = 0;
                e_used[e] = 0;
            } else {
                if (v_used[nbr]) continue;
                e_used[e] = 1;
                v_used[nbr] = 1;
                cur.verts.push_back(nbr);
                cur.edges.push_back(e);
                // terminate here: nbr becomes the goal node's image ...
                node_img[goal_node] = nbr;
                slot_img[si] = reversed ? reverse_path(cur) : cur;
                if (assign(k + 1)) return true;
                slot_img[si] = Path{};
                node_img[goal_node] = -1;
                // ... or keep extending through nbr
                if (extend(k, si, goal_node, cur, reversed)) return true;
                cur.verts.pop_back();
                cur.edges.pop_back();
                v_used[nbr] = 0;
                e_used[e] = 0;
            }
        }
        return false;
    }
};

std::optional<BCEmbedding> search_one(const Graph& g, const BCPattern& pat,
                                      int orientation,
                                      const std::array<int, 4>& roles,
                                      long long cap) {
    Embedder emb(g, pat, cap);
    if (!emb.place_roles(roles)) return std::nullopt;
    if (!emb.assign(0)) return std::nullopt;
    BCEmbedding out;
    out.pattern = pat.id;
    out.orientation = orientation;
    out.role_image = roles;
    out.node_image = emb.node_img;
    out.slot_image = emb.slot_img;
    return out;
}

} // namespace

DetectReport detect_bc(const Graph& g, const Terminals& t, const DetectOptions& opt) {
    DetectReport rep;
    if (opt.use_prefilters) {
        if (g.n() < 7) { rep.prefilter = "fewer-than-7-vertices"; return rep; }
        if (g.m() < 9) { rep.prefilter = "fewer-than-9-edges"; return rep; }
        if (!has_k4_minor(g)) { rep.prefilter = "k4-minor-free"; return rep; }
        if (longest_cycle_length(g) <= 6) {
            rep.prefilter = "longest-cycle-at-most-6";
            return rep;
        }
    }

    const auto& pats = bc_patterns();
    const int ntasks = static_cast<int>(pats.size()) * 8;
    std::vector<std::optional<BCEmbedding>> found(ntasks);
    std::vector<char> exceeded(ntasks, 0);
    std::vector<std::string> hard_error(ntasks);

#ifdef NDG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
#endif
    for (int task = 0; task < ntasks; ++task) {
        const BCPattern& pat = pats[task / 8];
        const int o = task % 8;
        if (pat.min_vertices > g.n() || pat.min_edges > g.m()) continue;
        try {
            found[task] = search_one(g, pat, o, orientation_roles(t, o),
                                     opt.search_cap);
        } catch (const search_budget_exceeded&) {
            exceeded[task] = 1;
        } catch (const std::exception& ex) {
            hard_error[task] = ex.what();
        }
    }

    // First event in task order decides the outcome, independent of how
    // the tasks were scheduled.
    for (int task = 0; task < ntasks; ++task) {
        if (!hard_error[task].empty())
            throw internal_consistency_error("embedding task failed: " +
                                             hard_error[task]);
        if (found[task]) {
            rep.embedding = std::move(found[task]);
            return rep;
        }
        if (exceeded[task]) throw search_budget_exceeded(opt.search_cap);
    }
    rep.prefilter = "no-bc-by-search";
    return rep;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

} // namespace

bool validate_embedding(const BCEmbedding& emb, const Graph& g, std::string* why) {
    const BCPattern* patp = nullptr;
    for (const auto& p : bc_patterns())
        if (p.id == emb.pattern) patp = &p;
    if (!patp) return fail(why, "unknown pattern id");
    const BCPattern& pat = *patp;
    if (emb.orientation < 0 || emb.orientation > 7)
        return fail(why, "orientation out of range");
    if (emb.node_image.size() != pat.nodes.size())
        return fail(why, "node image size mismatch");
    if (emb.slot_image.size() != pat.slots.size())
        return fail(why, "slot image size mismatch");
    for (int img : emb.node_image)
        if (img < 0 || img >= g.n()) return fail(why, "node image out of range");
    const int role_nodes[4] = {pat.u, pat.v, pat.w, pat.x};
    for (int i = 0; i < 4; ++i)
        if (emb.role_image[i] != emb.node_image[role_nodes[i]])
            return fail(why, "role image inconsistent with node images");

    // Per-slot path structure.
    std::set<int> edges_seen;
    for (size_t si = 0; si < pat.slots.size(); ++si) {
        const BCSlot& s = pat.slots[si];
        const Path& p = emb.slot_image[si];
        const std::string where = "slot " + s.name + ": ";
        if (p.verts.empty()) return fail(why, where + "empty vertex list");
        if (p.edges.size() + 1 != p.verts.size())
            return fail(why, where + "edge/vertex count mismatch");
        if (s.solid && p.length() < 1)
            return fail(why, where + "solid slot collapsed");
        std::set<int> distinct(p.verts.begin(), p.verts.end());
        if (distinct.size() != p.verts.size())
            return fail(why, where + "repeated vertex");
        for (size_t i = 0; i < p.edges.size(); ++i) {
            int e = p.edges[i];
            if (e < 0 || e >= g.m()) return fail(why, where + "edge id out of range");
            int a = p.verts[i], b = p.verts[i + 1];
            const auto& ed = g.edges[e];
            if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
                return fail(why, where + "edge does not join consecutive vertices");
            if (!edges_seen.insert(e).second)
                return fail(why, where + "edge reused across slots");
        }
        if (p.source() != emb.node_image[s.a] || p.target() != emb.node_image[s.b])
            return fail(why, where + "endpoints disagree with node images");
    }

    // Ownership: every host vertex is either one node-image class or the
    // interior of exactly one slot.
    std::vector<int> owner(g.n(), -1);  // -2 = node image, si = slot interior
    for (int img : emb.node_image) owner[img] = -2;
    for (size_t si = 0; si < pat.slots.size(); ++si) {
        const Path& p = emb.slot_image[si];
        for (size_t i = 1; i + 1 < p.verts.size(); ++i) {
            int vtx = p.verts[i];
            if (owner[vtx] != -1)
                return fail(why, "slot " + pat.slots[si].name +
                                     ": interior vertex shared");
            owner[vtx] = static_cast<int>(si);
        }
    }

    // Quotient injectivity: node images may coincide only along chains of
    // collapsed dashed slots.
    std::vector<int> uf(pat.nodes.size());
    for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
        while (uf[a] != a) a = uf[a] = uf[uf[a]];
        return a;
    };
    for (size_t si = 0; si < pat.slots.size(); ++si)
        if (emb.slot_image[si].length() == 0)
            uf[find(pat.slots[si].a)] = find(pat.slots[si].b);
    for (size_t i = 0; i < pat.nodes.size(); ++i)
        for (size_t j = i + 1; j < pat.nodes.size(); ++j)
            if (emb.node_image[i] == emb.node_image[j] &&
                find((int)i) != find((int)j))
                return fail(why, "nodes " + pat.nodes[i] + " and " + pat.nodes[j] +
                                     " identified without a collapsed chain");
    if (why) why->clear();
    return true;
}

bool validate_embedding(const BCEmbedding& emb, const Graph& g, const Terminals& t,
                        std::string* why) {
    if (!validate_embedding(emb, g, why)) return false;
    if (orientation_roles(t, emb.orientation) != emb.role_image)
        return fail(why, "role images do not match terminals under orientation");
    return true;
}

Instance generate_witness(const BCEmbedding& emb, const Graph& g) {
    std::string why;
    if (!validate_embedding(emb, g, &why))
        throw bad_parameter("cannot generate witness from invalid embedding: " + why);
    const BCPattern& pat = bc_pattern(emb.pattern);

    Instance inst;
    inst.g = g;
    const Rational big = pat.witness_total() + Rational(1);
    inst.cost.assign(g.m(), big);
    for (size_t si = 0; si < pat.slots.size(); ++si) {
        const Path& p = emb.slot_image[si];
        if (p.length() == 0) continue;  // collapsed: its table cost is zero anyway
        inst.cost[p.edges.front()] = pat.slots[si].witness_cost;
        for (size_t i = 1; i < p.edges.size(); ++i)
            inst.cost[p.edges[i]] = Rational(0);
    }

    // invert the orientation: role images back to terminal pairs
    const int o = emb.orientation;
    int u = emb.role_image[0], v = emb.role_image[1];
    int w = emb.role_image[2], x = emb.role_image[3];
    int s_uv = (o & 2) ? v : u, t_uv = (o & 2) ? u : v;
    int s_wx = (o & 4) ? x : w, t_wx = (o & 4) ? w : x;
    if (o & 1) {
        inst.s2 = s_uv; inst.t2 = t_uv;
        inst.s1 = s_wx; inst.t1 = t_wx;
    } else {
        inst.s1 = s_uv; inst.t1 = t_uv;
        inst.s2 = s_wx; inst.t2 = t_wx;
    }
    inst.validate();
    return inst;
}

} // namespace ndg
