// Static catalogue of the nine bad-configuration patterns.
//
// Shared anatomy: two terminal paths P_u (u to v) and P_l (w to x) that
// overlap in a common middle segment from a to b, plus transversal arcs
// that make every optimal cost share on the middle edges leak below the
// budget.  The families differ in where the long arc (q1 / the a-chain)
// starts and whether the q2 arc is replaced by a junction pair (b1/b3
// meeting the a-chain at j1, j2).
#include "ndg/bc.hpp"

#include <map>
#include <numeric>

#include "ndg/errors.hpp"

namespace ndg {

int BCPattern::node_index(const std::string& name) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == name) return static_cast<int>(i);
    throw bad_parameter("pattern " + id + " has no node named '" + name + "'");
}

int BCPattern::slot_index(const std::string& name) const {
    for (size_t i = 0; i < slots.size(); ++i)
        if (slots[i].name == name) return static_cast<int>(i);
    throw bad_parameter("pattern " + id + " has no slot named '" + name + "'");
}

Rational BCPattern::witness_total() const {
    Rational total = 0;
    for (const auto& s : slots) total = total + s.witness_cost;
    return total;
}

namespace {

class PatternBuilder {
  public:
    explicit PatternBuilder(std::string id) { p_.id = std::move(id); }

    PatternBuilder& roles(const std::string& u, const std::string& v,
                          const std::string& w, const std::string& x) {
        p_.u = node(u); p_.v = node(v); p_.w = node(w); p_.x = node(x);
        return *this;
    }

    PatternBuilder& solid(const std::string& name, const std::string& a,
                          const std::string& b, const Rational& cost) {
        add_slot(name, a, b, true, cost);
        return *this;
    }

    PatternBuilder& dashed(const std::string& name, const std::string& a,
                           const std::string& b) {
        add_slot(name, a, b, false, Rational(0));
        return *this;
    }

    PatternBuilder& pu(std::initializer_list<const char*> names) {
        for (const char* n : names) p_.pu_slots.push_back(p_.slot_index(n));
        return *this;
    }

    PatternBuilder& pl(std::initializer_list<const char*> names) {
        for (const char* n : names) p_.pl_slots.push_back(p_.slot_index(n));
        return *this;
    }

    PatternBuilder& order(std::initializer_list<const char*> names) {
        for (const char* n : names) p_.search_order.push_back(p_.slot_index(n));
        return *this;
    }

    BCPattern finish() {
        if (p_.search_order.size() != p_.slots.size())
            throw internal_consistency_error(
                "pattern " + p_.id + ": search order does not cover all slots");
        // min_edges: one edge per solid slot.
        p_.min_edges = 0;
        for (const auto& s : p_.slots)
            if (s.solid) ++p_.min_edges;
        // min_vertices: node classes after collapsing every dashed slot.
        std::vector<int> uf(p_.nodes.size());
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int a) {
            while (uf[a] != a) a = uf[a] = uf[uf[a]];
            return a;
        };
        for (const auto& s : p_.slots)
            if (!s.solid) uf[find(s.a)] = find(s.b);
        int classes = 0;
        for (size_t i = 0; i < p_.nodes.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++classes;
        p_.min_vertices = classes;
        // Every slot in the search order must have an endpoint placed
        // already (a role node or an endpoint of an earlier slot).
        std::vector<char> placed(p_.nodes.size(), 0);
        placed[p_.u] = placed[p_.v] = placed[p_.w] = placed[p_.x] = 1;
        for (int si : p_.search_order) {
            const auto& s = p_.slots[si];
            if (!placed[s.a] && !placed[s.b])
                throw internal_consistency_error(
                    "pattern " + p_.id + ": slot " + s.name +
                    " has no placed endpoint at its turn");
            placed[s.a] = placed[s.b] = 1;
        }
        return std::move(p_);
    }

  private:
    int node(const std::string& name) {
        auto it = idx_.find(name);
        if (it != idx_.end()) return it->second;
        int id = static_cast<int>(p_.nodes.size());
        p_.nodes.push_back(name);
        idx_.emplace(name, id);
        return id;
    }

    void add_slot(const std::string& name, const std::string& a,
                  const std::string& b, bool is_solid, const Rational& cost) {
        BCSlot s;
        s.name = name;
        s.a = node(a);
        s.b = node(b);
        s.solid = is_solid;
        s.witness_cost = cost;
        p_.slots.push_back(std::move(s));
    }

    BCPattern p_;
    std::map<std::string, int> idx_;
};

// ---- family 1: the long arc q1 leaves the middle (BC1a) or the u-side
//      approach (BC1b) ------------------------------------------------------

BCPattern make_bc1a() {
    return PatternBuilder("BC1a")
        .roles("u", "v", "w", "x")
        // P_u skeleton: u ~ a - g1 - c - d - b ~ v
        .dashed("Lu", "u", "a")
        .dashed("M1", "a", "g1")
        .solid("M2", "g1", "c", 3)
        .solid("M3", "c", "d", 2)
        .solid("M4", "d", "b", 3)
        .solid("Ru1", "b", "n3", 4)
        .dashed("Ru2", "n3", "v")
        // P_l approach / exit
        .dashed("Ll1", "w", "n2")
        .solid("Ll2", "n2", "a", 5)
        .solid("Rl1", "b", "n4", 5)
        .dashed("Rl2", "n4", "x")
        // transversal arcs
        .solid("q1", "g1", "n3", 9)
        .solid("q2", "n2", "d", 6)
        .solid("q3", "c", "n4", 6)
        .pu({"Lu", "M1", "M2", "M3", "M4", "Ru1", "Ru2"})
        .pl({"Ll1", "Ll2", "M1", "M2", "M3", "M4", "Rl1", "Rl2"})
        .order({"Lu", "M1", "M2", "M3", "M4", "Ru2", "Ru1", "Ll1", "Ll2",
                "Rl2", "Rl1", "q1", "q2", "q3"})
        .finish();
}

BCPattern make_bc1b() {
    return PatternBuilder("BC1b")
        .roles("u", "v", "w", "x")
        // q1 starts at n1 strictly before the middle
        .dashed("Lu1", "u", "n1")
        .solid("Lu2", "n1", "a", 0)
        .solid("M2", "a", "c", 3)
        .solid("M3", "c", "d", 2)
        .solid("M4", "d", "b", 3)
        .solid("Ru1", "b", "n3", 4)
        .dashed("Ru2", "n3", "v")
        .dashed("Ll1", "w", "n2")
        .solid("Ll2", "n2", "a", 5)
        .solid("Rl1", "b", "n4", 5)
        .dashed("Rl2", "n4", "x")
        .solid("q1", "n1", "n3", 9)
        .solid("q2", "n2", "d", 6)
        .solid("q3", "c", "n4", 6)
        .pu({"Lu1", "Lu2", "M2", "M3", "M4", "Ru1", "Ru2"})
        .pl({"Ll1", "Ll2", "M2", "M3", "M4", "Rl1", "Rl2"})
        .order({"Lu1", "Lu2", "M2", "M3", "M4", "Ru2", "Ru1", "Ll1", "Ll2",
                "Rl2", "Rl1", "q1", "q2", "q3"})
        .finish();
}

// ---- family 2: q1 and q2 are fused into a junction (a-chain meets b1/b3
//      at nodes j1, j2); four variants by arc start and junction wiring ----

BCPattern make_bc2a() {
    return PatternBuilder("BC2a")
        .roles("u", "v", "w", "x")
        .dashed("Lu", "u", "a")
        .dashed("M1", "a", "g1")
        .solid("M2", "g1", "c", 5)
        .solid("M3", "c", "d", 2)
        .solid("M4", "d", "b", 3)
        .solid("Ru1", "b", "n3", 6)
        .dashed("Ru2", "n3", "v")
        .dashed("Ll1", "w", "n2")
        .solid("Ll2", "n2", "a", 5)
        .solid("Rl1", "b", "n4", 5)
        .dashed("Rl2", "n4", "x")
        .solid("a1", "g1", "j1", 5)
        .dashed("a2", "j1", "j2")
        .solid("a3", "j2", "n3", 6)
        .solid("b1", "n2", "j1", 5)
        .solid("b3", "j2", "d", 3)
        .solid("q3", "c", "n4", 6)
        .pu({"Lu", "M1", "M2", "M3", "M4", "Ru1", "Ru2"})
        .pl({"Ll1", "Ll2", "M1", "M2", "M3", "M4", "Rl1", "Rl2"})
        .order({"Lu", "M1", "M2", "M3", "M4", "Ru2", "Ru1", "Ll1", "Ll2",
                "Rl2", "Rl1", "a1", "a2", "a3", "b1", "b3", "q3"})
        .finish();
}

BCPattern make_bc2b() {
    // BC2a with the two junction attachments swapped
    return PatternBuilder("BC2b")
        .roles("u", "v", "w", "x")
        .dashed("Lu", "u", "a")
        .dashed("M1", "a", "g1")
        .solid("M2", "g1", "c", 5)
        .solid("M3", "c", "d", 2)
        .solid("M4", "d", "b", 3)
        .solid("Ru1", "b", "n3", 6)
        .dashed("Ru2", "n3", "v")
        .dashed("Ll1", "w", "n2")
        .solid("Ll2", "n2", "a", 5)
        .solid("Rl1", "b", "n4", 5)
        .dashed("Rl2", "n4", "x")
        .solid("a1", "g1", "j1", 5)
        .dashed("a2", "j1", "j2")
        .solid("a3", "j2", "n3", 6)
        .solid("b1", "n2", "j2", 5)
        .solid("b3", "j1", "d", 3)
        .solid("q3", "c", "n4", 6)
        .pu({"Lu", "M1", "M2", "M3", "M4", "Ru1", "Ru2"})
        .pl({"Ll1", "Ll2", "M1", "M2", "M3", "M4", "Rl1", "Rl2"})
        .order({"Lu", "M1", "M2", "M3", "M4", "Ru2", "Ru1", "Ll1", "Ll2",
                "Rl2", "Rl1", "a1", "a2", "a3", "b1", "b3", "q3"})
        .finish();
}

BCPattern make_bc2c() {
    return PatternBuilder("BC2c")
        .roles("u", "v", "w", "x")
        .dashed("Lu1", "u", "n1")
        .solid("Lu2", "n1", "a", 0)
        .solid("M2", "a", "c", 5)
        .solid("M3", "c", "d", 2)
        .solid("M4", "d", "b", 3)
        .solid("Ru1", "b", "n3", 6)
        .dashed("Ru2", "n3", "v")
        .dashed("Ll1", "w", "n2")
        .solid("Ll2", "n2", "a", 5)
        .solid("Rl1", "b", "n4", 5)
        .dashed("Rl2", "n4", "x")
        .solid("a1", "n1", "j1", 5)
        .dashed("a2", "j1", "j2")
        .solid("a3", "j2", "n3", 6)
        .solid("b1", "n2", "j1", 5)
        .solid("b3", "j2", "d", 3)
        .solid("q3", "c", "n4", 6)
        .pu({"Lu1", "Lu2", "M2", "M3", "M4", "Ru1", "Ru2"})
        .pl({"Ll1", "Ll2", "M2", "M3", "M4", "Rl1", "Rl2"})
        .order({"Lu1", "Lu2", "M2", "M3", "M4", "Ru2", "Ru1", "Ll1", "Ll2",
                "Rl2", "Rl1", "a1", "a2", "a3", "b1", "b3", "q3"})
        .finish();
}

BCPattern make_bc2d() {
    return PatternBuilder("BC2d")
        .roles("u", "v", "w", "x")
        .dashed("Lu1", "u", "n1")
        .solid("Lu2", "n1", "a", 0)
        .solid("M2", "a", "c", 5)
        .solid("M3", "c", "d", 2)
        .solid("M4", "d", "b", 3)
        .solid("Ru1", "b", "n3", 6)
        .dashed("Ru2", "n3", "v")
        .dashed("Ll1", "w", "n2")
        .solid("Ll2", "n2", "a", 5)
        .solid("Rl1", "b", "n4", 5)
        .dashed("Rl2", "n4", "x")
        .solid("a1", "n1", "j1", 5)
        .dashed("a2", "j1", "j2")
        .solid("a3", "j2", "n3", 6)
        .solid("b1", "n2", "j2", 5)
        .solid("b3", "j1", "d", 3)
        .solid("q3", "c", "n4", 6)
        .pu({"Lu1", "Lu2", "M2", "M3", "M4", "Ru1", "Ru2"})
        .pl({"Ll1", "Ll2", "M2", "M3", "M4", "Rl1", "Rl2"})
        .order({"Lu1", "Lu2", "M2", "M3", "M4", "Ru2", "Ru1", "Ll1", "Ll2",
                "Rl2", "Rl1", "a1", "a2", "a3", "b1", "b3", "q3"})
        .finish();
}

// ---- family 3: the long arc starts inside the w-side approach ------------

BCPattern make_bc3() {
    return PatternBuilder("BC3")
        .roles("u", "v", "w", "x")
        .dashed("Lu", "u", "a")
        .solid("M2", "a", "c", 3)
        .solid("M3", "c", "d", 2)
        .solid("M4", "d", "b", 3)
        .solid("Ru1", "b", "n3", 4)
        .dashed("Ru2", "n3", "v")
        .dashed("Ll1", "w", "n2")
        .solid("Ll2a", "n2", "n7", 5)
        .solid("Ll2b", "n7", "a", 0)
        .solid("Rl1", "b", "n4", 5)
        .dashed("Rl2", "n4", "x")
        .solid("a2", "n7", "n3", 9)
        .solid("q2", "n2", "d", 6)
        .solid("q3", "c", "n4", 6)
        .pu({"Lu", "M2", "M3", "M4", "Ru1", "Ru2"})
        .pl({"Ll1", "Ll2a", "Ll2b", "M2", "M3", "M4", "Rl1", "Rl2"})
        .order({"Lu", "M2", "M3", "M4", "Ru2", "Ru1", "Ll1", "Ll2a", "Ll2b",
                "Rl2", "Rl1", "a2", "q2", "q3"})
        .finish();
}

BCPattern make_bc4a() {
    return PatternBuilder("BC4a")
        .roles("u", "v", "w", "x")
        .dashed("Lu", "u", "a")
        .solid("M2", "a", "c", 5)
        .solid("M3", "c", "d", 2)
        .solid("M4", "d", "b", 3)
        .solid("Ru1", "b", "n3", 6)
        .dashed("Ru2", "n3", "v")
        .dashed("Ll1", "w", "n9")
        .solid("Ll2a", "n9", "n2", 5)
        .solid("Ll2b", "n2", "a", 0)
        .solid("Rl1", "b", "n4", 5)
        .dashed("Rl2", "n4", "x")
        .solid("a2", "n2", "j1", 5)
        .dashed("a3", "j1", "j2")
        .solid("a4", "j2", "n3", 6)
        .solid("b1", "n9", "j1", 5)
        .solid("b3", "j2", "d", 3)
        .solid("q3", "c", "n4", 6)
        .pu({"Lu", "M2", "M3", "M4", "Ru1", "Ru2"})
        .pl({"Ll1", "Ll2a", "Ll2b", "M2", "M3", "M4", "Rl1", "Rl2"})
        .order({"Lu", "M2", "M3", "M4", "Ru2", "Ru1", "Ll1", "Ll2a", "Ll2b",
                "Rl2", "Rl1", "a2", "a3", "a4", "b1", "b3", "q3"})
        .finish();
}

BCPattern make_bc4b() {
    return PatternBuilder("BC4b")
        .roles("u", "v", "w", "x")
        .dashed("Lu", "u", "a")
        .solid("M2", "a", "c", 5)
        .solid("M3", "c", "d", 2)
        .solid("M4", "d", "b", 3)
        .solid("Ru1", "b", "n3", 6)
        .dashed("Ru2", "n3", "v")
        .dashed("Ll1", "w", "n9")
        .solid("Ll2a", "n9", "n2", 5)
        .solid("Ll2b", "n2", "a", 0)
        .solid("Rl1", "b", "n4", 5)
        .dashed("Rl2", "n4", "x")
        .solid("a2", "n2", "j1", 5)
        .dashed("a3", "j1", "j2")
        .solid("a4", "j2", "n3", 6)
        .solid("b1", "n9", "j2", 5)
        .solid("b3", "j1", "d", 3)
        .solid("q3", "c", "n4", 6)
        .pu({"Lu", "M2", "M3", "M4", "Ru1", "Ru2"})
        .pl({"Ll1", "Ll2a", "Ll2b", "M2", "M3", "M4", "Rl1", "Rl2"})
        .order({"Lu", "M2", "M3", "M4", "Ru2", "Ru1", "Ll1", "Ll2a", "Ll2b",
                "Rl2", "Rl1", "a2", "a3", "a4", "b1", "b3", "q3"})
        .finish();
}

} // namespace

const std::vector<BCPattern>& bc_patterns() {
    static const std::vector<BCPattern> all = [] {
        std::vector<BCPattern> v;
        v.push_back(make_bc1a());
        v.push_back(make_bc1b());
        v.push_back(make_bc2a());
        v.push_back(make_bc2b());
        v.push_back(make_bc2c());
        v.push_back(make_bc2d());
        v.push_back(make_bc3());
        v.push_back(make_bc4a());
        v.push_back(make_bc4b());
        return v;
    }();
    return all;
}

const BCPattern& bc_pattern(const std::string& id) {
    for (const auto& p : bc_patterns())
        if (p.id == id) return p;
    throw bad_parameter("unknown bad-configuration id '" + id + "'");
}

MinimalBc bc_minimal(const std::string& pattern_id) {
    const BCPattern& pat = bc_pattern(pattern_id);
    MinimalBc out;
    for (const auto& n : pat.nodes) out.g.add_vertex(n);
    BCEmbedding emb;
    emb.pattern = pat.id;
    emb.orientation = 0;
    emb.node_image.resize(pat.nodes.size());
    for (size_t i = 0; i < pat.nodes.size(); ++i)
        emb.node_image[i] = static_cast<int>(i);
    emb.role_image = {pat.u, pat.v, pat.w, pat.x};
    emb.slot_image.resize(pat.slots.size());
    for (size_t si = 0; si < pat.slots.size(); ++si) {
        const BCSlot& s = pat.slots[si];
        int eid = out.g.add_edge(s.a, s.b, s.name);
        Path p;
        p.verts = {s.a, s.b};
        p.edges = {eid};
        emb.slot_image[si] = std::move(p);
    }
    out.t.s1 = pat.u;
    out.t.t1 = pat.v;
    out.t.s2 = pat.w;
    out.t.t2 = pat.x;
    out.emb = std::move(emb);
    return out;
}

} // namespace ndg
