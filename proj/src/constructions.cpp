#include "dgraph/constructions.hpp"

#include <unordered_map>

namespace dgraph {

namespace {

// Renumber g's vertices to start above `floor` when any id collides with
// `taken`; returns the (possibly identity) id map.
std::map<VertexId, VertexId> disjoint_map(const Graph& g, const Graph& other) {
    std::map<VertexId, VertexId> m;
    bool clash = false;
    for (VertexId v : g.vertices())
        if (other.has_vertex(v)) { clash = true; break; }
    if (!clash) {
        for (VertexId v : g.vertices()) m[v] = v;
        return m;
    }
    VertexId next = other.vertex_count() ? other.max_vertex_id() + 1 : 0;
    for (VertexId v : g.vertices()) m[v] = next++;
    return m;
}

}  // namespace

Graph join(const Graph& g1, const Graph& g2) {
    Graph out = g1;
    auto m = disjoint_map(g2, g1);
    for (VertexId v : g2.vertices()) out.add_vertex(m[v]);
    for (const auto& [u, v] : g2.edges()) out.add_edge(m[u], m[v]);
    for (VertexId a : g1.vertices())
        for (VertexId b : g2.vertices()) out.add_edge(a, m[b]);
    return out;
}

Graph cone(const Graph& g) {
    Graph apex;
    apex.add_vertex(g.vertex_count() ? g.max_vertex_id() + 1 : 0);
    return join(g, apex);
}

Graph suspension(const Graph& g) {
    Graph poles;
    VertexId base = g.vertex_count() ? g.max_vertex_id() + 1 : 0;
    poles.add_vertex(base);
    poles.add_vertex(base + 1);
    return join(g, poles);
}

Refinement barycentric_refinement_of(const Complex& c) {
    // all faces of the complex
    std::set<Simplex> faces;
    for (const auto& f : c.facets) {
        const std::size_t n = f.size();
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            faces.insert(std::move(s));
        }
    }
    std::vector<Simplex> list(faces.begin(), faces.end());
    std::sort(list.begin(), list.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    Refinement out;
    std::map<Simplex, VertexId> id;
    for (std::size_t i = 0; i < list.size(); ++i) {
        id[list[i]] = static_cast<VertexId>(i);
        out.carrier[static_cast<VertexId>(i)] = list[i];
        out.graph.add_vertex(static_cast<VertexId>(i));
    }
    // strict containment: enumerate proper subsets of each face
    for (const auto& s : list) {
        const std::size_t n = s.size();
        if (n == 1) continue;
        for (std::size_t mask = 1; mask + 1 < (1u << n); ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.push_back(s[i]);
            out.graph.add_edge(id[sub], id[s]);
        }
    }
    return out;
}

Refinement barycentric_refinement(const Graph& g) {
    return barycentric_refinement_of(whitney_complex(g));
}

Graph edge_refinement(const Graph& g, Edge e) {
    Edge ed = make_edge(e.first, e.second);
    if (!g.has_edge(ed.first, ed.second))
        throw std::invalid_argument("edge_refinement: not an edge");
    Graph out = g;
    out.remove_edge(ed.first, ed.second);
    VertexId c = g.max_vertex_id() + 1;
    out.add_vertex(c);
    out.add_edge(c, ed.first);
    out.add_edge(c, ed.second);
    const auto& na = g.neighbors(ed.first);
    for (VertexId w : g.neighbors(ed.second))
        if (std::binary_search(na.begin(), na.end(), w)) out.add_edge(c, w);
    return out;
}

Graph stellate_facet(const Graph& g, const Simplex& f) {
    // f may be any face of the Whitney complex (boundary faces get stellated
    // when building apollonian-style graphs), so require a clique.
    if (f.empty()) throw std::invalid_argument("stellate_facet: empty face");
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!g.has_vertex(f[i]))
            throw std::invalid_argument("stellate_facet: unknown vertex");
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (!g.has_edge(f[i], f[j]))
                throw std::invalid_argument("stellate_facet: not a face of the Whitney complex");
    }
    Graph out = g;
    VertexId c = g.max_vertex_id() + 1;
    out.add_vertex(c);
    for (VertexId v : f) out.add_edge(c, v);
    return out;
}

Graph glue_along(const Graph& g1, const Graph& g2,
                 const Simplex& face1, const Simplex& face2) {
    if (face1.size() != face2.size())
        throw std::invalid_argument("glue_along: face sizes differ");
    auto is_clique = [](const Graph& g, const Simplex& s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (!g.has_vertex(s[i])) return false;
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!g.has_edge(s[i], s[j])) return false;
        }
        return s.size() == 1 ? g.has_vertex(s[0]) : true;
    };
    if (!is_clique(g1, face1) || !is_clique(g2, face2))
        throw std::invalid_argument("glue_along: faces are not simplices of their graphs");
    std::map<VertexId, VertexId> m;
    for (std::size_t i = 0; i < face2.size(); ++i) m[face2[i]] = face1[i];
    VertexId next = g1.max_vertex_id() + 1;
    for (VertexId v : g2.vertices())
        if (!m.count(v)) m[v] = next++;
    Graph out = g1;
    for (VertexId v : g2.vertices()) out.add_vertex(m[v]);
    for (const auto& [u, v] : g2.edges())
        if (m[u] != m[v]) out.add_edge(m[u], m[v]);
    return out;
}

}  // namespace dgraph
