#include "dgraph/hamiltonian.hpp"

#include <array>
#include <functional>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace dgraph {

Cycle normalize_cycle(std::vector<VertexId> vs) {
    if (vs.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    auto it = std::min_element(vs.begin(), vs.end());
    std::rotate(vs.begin(), it, vs.end());
    if (vs[1] > vs.back()) std::reverse(vs.begin() + 1, vs.end());
    return Cycle{std::move(vs)};
}

bool verify_hamiltonian(const Graph& g, const Cycle& c) {
    const auto& vs = c.vertices;
    if (vs.size() != g.vertex_count() || vs.size() < 3) return false;
    std::set<VertexId> seen(vs.begin(), vs.end());
    if (seen.size() != vs.size()) return false;
    for (VertexId v : g.vertices())
        if (!seen.count(v)) return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
    return true;
}

namespace {

std::set<Edge> cycle_edge_set(const Cycle& c) {
    std::set<Edge> out;
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        out.insert(make_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]));
    return out;
}

bool face_has_edge(const Simplex& f, const std::set<Edge>& edges) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (edges.count({f[i], f[j]})) return true;
    return false;
}

}  // namespace

bool verify_strong(const Graph& g, const Cycle& c, bool with_boundary) {
    if (!verify_hamiltonian(g, c)) return false;
    std::set<Edge> edges = cycle_edge_set(c);
    Complex w = whitney_complex(g);
    for (const auto& f : w.facets)
        if (!face_has_edge(f, edges)) return false;
    if (with_boundary) {
        for (const auto& f : boundary_of(w).faces)
            if (!face_has_edge(f, edges)) return false;
    }
    return true;
}

// --- cycle surgery primitives ----------------------------------------------------

namespace {

// 2-regular adjacency structure holding a disjoint union of cycles.
struct CycleLinks {
    std::map<VertexId, std::array<VertexId, 2>> link;
    std::set<Edge> edges;
    std::map<VertexId, int> comp_of;
    std::map<int, std::vector<VertexId>> members;
    int next_comp = 0;

    bool on_cycle(VertexId v) const { return link.count(v) != 0; }

    void add_cycle(const std::vector<VertexId>& order) {
        int id = next_comp++;
        for (std::size_t i = 0; i < order.size(); ++i) {
            VertexId a = order[i], b = order[(i + 1) % order.size()];
            link[a][1] = b;  // filled properly below
        }
        for (std::size_t i = 0; i < order.size(); ++i) {
            VertexId prev = order[(i + order.size() - 1) % order.size()];
            VertexId next = order[(i + 1) % order.size()];
            link[order[i]] = {prev, next};
            edges.insert(make_edge(order[i], next));
            comp_of[order[i]] = id;
            members[id].push_back(order[i]);
        }
    }

    void unlink(VertexId a, VertexId b) {
        edges.erase(make_edge(a, b));
        auto fix = [&](VertexId x, VertexId y) {
            auto& l = link[x];
            if (l[0] == y) l[0] = -1;
            else if (l[1] == y) l[1] = -1;
        };
        fix(a, b);
        fix(b, a);
    }

    void relink(VertexId a, VertexId b) {
        edges.insert(make_edge(a, b));
        auto fix = [&](VertexId x, VertexId y) {
            auto& l = link[x];
            if (l[0] == -1) l[0] = y;
            else if (l[1] == -1) l[1] = y;
            else throw std::logic_error("cycle link overflow");
        };
        fix(a, b);
        fix(b, a);
    }

    // replace edge (u,v) by the chain u - q... - v; q vertices are new
    void splice_path(VertexId u, VertexId v, const std::vector<VertexId>& q) {
        unlink(u, v);
        int id = comp_of.at(u);
        VertexId prev = u;
        for (VertexId z : q) {
            link[z] = {-1, -1};
            relink(prev, z);
            comp_of[z] = id;
            members[id].push_back(z);
            prev = z;
        }
        relink(prev, v);
    }

    // merge two cycles: remove (a,b) and (c,d), insert (a,c) and (b,d)
    void bridge(VertexId a, VertexId b, VertexId c, VertexId d) {
        int ia = comp_of.at(a), ic = comp_of.at(c);
        if (ia == ic) throw std::logic_error("bridge within one cycle");
        unlink(a, b);
        unlink(c, d);
        relink(a, c);
        relink(b, d);
        if (members[ia].size() < members[ic].size()) std::swap(ia, ic);
        for (VertexId v : members[ic]) {
            comp_of[v] = ia;
            members[ia].push_back(v);
        }
        members.erase(ic);
    }

    std::size_t cycle_count() const { return members.size(); }

    std::vector<VertexId> extract_single() const {
        if (members.size() != 1) throw std::logic_error("not a single cycle");
        VertexId start = members.begin()->second.front();
        std::vector<VertexId> out{start};
        VertexId prev = start, cur = link.at(start)[0];
        while (cur != start) {
            out.push_back(cur);
            auto l = link.at(cur);
            VertexId next = (l[0] == prev) ? l[1] : l[0];
            prev = cur;
            cur = next;
        }
        return out;
    }
};

}  // namespace

Cycle merge_cycles(const Cycle& c1, const Cycle& c2, const PrismBridge& b) {
    std::set<VertexId> v1(c1.vertices.begin(), c1.vertices.end());
    for (VertexId v : c2.vertices)
        if (v1.count(v)) throw std::invalid_argument("merge_cycles: cycles not vertex-disjoint");
    auto e1 = b.remove_edges[0], e2 = b.remove_edges[1];
    auto in_cycle = [](const Cycle& c, Edge e) {
        return cycle_edge_set(c).count(e) != 0;
    };
    if (!in_cycle(c1, e1) || !in_cycle(c2, e2))
        throw std::invalid_argument("merge_cycles: cycles do not traverse the bridge faces");
    CycleLinks links;
    links.add_cycle(c1.vertices);
    links.add_cycle(c2.vertices);
    // partner of a among the insert edges decides the orientation
    VertexId a = e1.first, bb = e1.second, c = e2.first, d = e2.second;
    auto partner_of = [&](VertexId x) -> std::optional<VertexId> {
        for (const Edge& ins : b.insert_edges) {
            if (ins.first == x) return ins.second;
            if (ins.second == x) return ins.first;
        }
        return std::nullopt;
    };
    auto pa = partner_of(a);
    if (!pa || (*pa != c && *pa != d))
        throw std::invalid_argument("merge_cycles: rewiring does not match removed edges");
    if (*pa == d) std::swap(c, d);
    links.bridge(a, bb, c, d);
    return normalize_cycle(links.extract_single());
}

Cycle facet_extension(const Graph& g, const Cycle& c, VertexId new_vertex, const Simplex& facet) {
    if (!g.has_vertex(new_vertex)) throw std::invalid_argument("facet_extension: unknown vertex");
    std::vector<VertexId> nb = g.neighbors(new_vertex);
    if (nb != facet)
        throw std::invalid_argument("facet_extension: new vertex is not attached to exactly the facet");
    std::set<Edge> edges = cycle_edge_set(c);
    std::optional<Edge> pick;
    for (std::size_t i = 0; i < facet.size(); ++i)
        for (std::size_t j = i + 1; j < facet.size(); ++j) {
            Edge e{facet[i], facet[j]};
            if (edges.count(e)) { pick = e; break; }
        }
    if (!pick) throw std::invalid_argument("facet_extension: cycle has no edge inside the facet");
    std::vector<VertexId> out;
    const auto& vs = c.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        out.push_back(vs[i]);
        VertexId u = vs[i], v = vs[(i + 1) % vs.size()];
        if (make_edge(u, v) == *pick) out.push_back(new_vertex);
    }
    return normalize_cycle(std::move(out));
}

Cycle hamiltonian_for_path_shellable(const Complex& c) {
    auto order = detail::dual_path_order(c);
    if (!order) throw std::invalid_argument("hamiltonian_for_path_shellable: dual graph is not a path");
    const auto& facets = *order;
    std::set<VertexId> seen(facets[0].begin(), facets[0].end());
    std::vector<VertexId> cyc(facets[0].begin(), facets[0].end());
    std::set<Edge> edges;
    for (std::size_t i = 0; i < cyc.size(); ++i) edges.insert(make_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    CycleLinks links;
    links.add_cycle(cyc);
    for (std::size_t j = 1; j < facets.size(); ++j) {
        std::vector<VertexId> fresh;
        Simplex attach;
        for (VertexId v : facets[j])
            (seen.count(v) ? attach : fresh).push_back(v);
        if (fresh.size() != 1)
            throw std::invalid_argument("hamiltonian_for_path_shellable: facet adds " +
                                        std::to_string(fresh.size()) + " new vertices");
        VertexId x = fresh[0];
        std::optional<Edge> pick;
        for (std::size_t a = 0; a < attach.size() && !pick; ++a)
            for (std::size_t b = a + 1; b < attach.size() && !pick; ++b)
                if (links.edges.count(make_edge(attach[a], attach[b])))
                    pick = make_edge(attach[a], attach[b]);
        if (!pick)
            throw std::invalid_argument("hamiltonian_for_path_shellable: no cycle edge in attachment face");
        links.splice_path(pick->first, pick->second, {x});
        seen.insert(x);
    }
    return normalize_cycle(links.extract_single());
}

// --- swiss-cheese construction ----------------------------------------------------

namespace swiss {

namespace {

struct RetryNeeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace

State init_state(const Graph& g) {
    State st;
    st.input = g;
    st.work = g;
    Complex w = whitney_complex(g);
    st.dim = w.dimension();
    auto info = boundary_of(w);
    st.boundary_vertices.insert(info.vertices.begin(), info.vertices.end());
    st.track_boundary_faces = st.dim >= 3 && !info.faces.empty();
    return st;
}

std::optional<VertexId> find_strong_interior(const Graph& work,
                                             const std::set<VertexId>& bound) {
    if (work.vertex_count() == 0) return std::nullopt;
    if (bound.empty()) return work.vertices().front();
    // BFS layers from the boundary
    std::map<VertexId, int> dist;
    std::vector<VertexId> frontier;
    for (VertexId v : bound)
        if (work.has_vertex(v)) {
            dist[v] = 0;
            frontier.push_back(v);
        }
    int level = 0;
    std::optional<VertexId> deep;  // smallest vertex at distance exactly 2
    while (!frontier.empty()) {
        std::vector<VertexId> next;
        ++level;
        for (VertexId v : frontier)
            for (VertexId u : work.neighbors(v))
                if (!dist.count(u)) {
                    dist[u] = level;
                    next.push_back(u);
                }
        if (level == 2) {
            for (VertexId u : next)
                if (!deep || u < *deep) deep = u;
            return deep;
        }
        frontier = std::move(next);
    }
    // vertices unreachable from the boundary count as deep interior
    for (VertexId v : work.vertices())
        if (!dist.count(v) && (!deep || v < *deep)) deep = v;
    return deep;
}

namespace {

// Boundary of the working graph over its top-dimensional facets only: hole
// growth can leave bare lower-dimensional cliques behind, which are harmless
// chords for the assembly.
BoundaryInfo work_boundary(const Graph& work, int d) {
    Complex w = whitney_complex(work);
    Complex top;
    for (auto& f : w.facets)
        if (simplex_dim(f) == d) top.facets.push_back(std::move(f));
    return boundary_of(top);
}

// the boundary vertex set is always derived from the working graph
void sync_boundary(State& st) {
    auto info = work_boundary(st.work, st.dim);
    st.boundary_vertices.clear();
    st.boundary_vertices.insert(info.vertices.begin(), info.vertices.end());
}

}  // namespace

void carve_cavity(State& st, VertexId x) {
    if (!st.work.has_vertex(x)) throw std::invalid_argument("carve_cavity: unknown vertex");
    if (st.boundary_vertices.count(x)) throw std::invalid_argument("carve_cavity: boundary vertex");
    std::vector<VertexId> sphere = st.work.neighbors(x);
    st.work.remove_vertex(x);
    st.holes.push_back(Hole{{x}, sphere});
    st.trace.steps.push_back(CarveCavityStep{x, sphere});
    sync_boundary(st);
}

void carve_all(State& st) {
    bool first = st.boundary_vertices.empty();
    int skip = first ? st.strategy.carve_rotation : 0;
    while (true) {
        auto x = find_strong_interior(st.work, st.boundary_vertices);
        if (!x) return;
        if (skip > 0 && st.boundary_vertices.empty()) {
            // rotate the bootstrap cavity among the smallest vertices
            auto vs = st.work.vertices();
            x = vs[std::min<std::size_t>(skip, vs.size() - 1)];
            skip = 0;
        }
        carve_cavity(st, *x);
    }
}

namespace {

std::set<Edge> boundary_edge_set(const Graph& work, int d) {
    std::set<Edge> out;
    for (const auto& face : work_boundary(work, d).faces)
        for (std::size_t i = 0; i < face.size(); ++i)
            for (std::size_t j = i + 1; j < face.size(); ++j)
                out.insert({face[i], face[j]});
    return out;
}

}  // namespace

std::vector<VertexId> boxed_points(const State& st) {
    std::vector<VertexId> out;
    if (st.dim != 2) return out;
    std::set<Edge> bedges = boundary_edge_set(st.work, st.dim);
    for (VertexId y : st.work.vertices()) {
        if (st.boundary_vertices.count(y)) continue;
        const auto& nb = st.work.neighbors(y);
        bool has = false;
        for (std::size_t i = 0; i < nb.size() && !has; ++i)
            for (std::size_t j = i + 1; j < nb.size() && !has; ++j)
                if (bedges.count(make_edge(nb[i], nb[j]))) has = true;
        if (!has) out.push_back(y);
    }
    return out;
}

// Pull z out of the boundary into the hole whose interior path it extends.
// The hole interior stays a path; cleanliness of the regrown boundary is
// re-checked globally by resolve_boundary_defects / the assembly phase.
bool absorb_vertex(State& st, VertexId reason, VertexId z) {
    if (!st.work.has_vertex(z)) return false;
    if (st.work.vertex_count() <= 3) return false;  // keep at least a 3-cycle
    for (auto& hole : st.holes) {
        bool at_front = st.input.has_edge(z, hole.path.front());
        bool at_back = st.input.has_edge(z, hole.path.back());
        if (!at_front && !at_back) continue;
        if (at_front) hole.path.insert(hole.path.begin(), z);
        else hole.path.push_back(z);
        st.work.remove_vertex(z);
        std::set<VertexId> interior(hole.path.begin(), hole.path.end());
        std::set<VertexId> sphere;
        for (VertexId p : interior)
            for (VertexId u : st.input.neighbors(p))
                if (st.work.has_vertex(u) && !interior.count(u)) sphere.insert(u);
        hole.sphere.assign(sphere.begin(), sphere.end());
        st.trace.steps.push_back(AbsorbBoxedPointStep{reason, z});
        sync_boundary(st);
        return true;
    }
    return false;
}

bool absorb_boxed_point(State& st, VertexId boxed) {
    for (VertexId z : st.work.neighbors(boxed)) {
        if (!st.boundary_vertices.count(z)) continue;
        if (absorb_vertex(st, boxed, z)) return true;
    }
    return false;
}

// d = 2 boundary repair: the boundary complex must decompose into disjoint
// cycles and no interior point may stay boxed; defects are absorbed into
// adjacent holes one vertex at a time.
bool absorb_any(State& st);

void resolve_boxed_points(State& st) {
    if (st.dim != 2) return;
    for (int guard = 0; guard < 4 * static_cast<int>(st.input.vertex_count()); ++guard) {
        // branch vertices of the boundary complex
        Graph b = work_boundary(st.work, st.dim).graph;
        std::optional<VertexId> branch;
        for (VertexId v : b.vertices())
            if (b.degree(v) != 2) { branch = v; break; }
        if (branch) {
            if (absorb_vertex(st, *branch, *branch) || absorb_any(st)) continue;
            throw RetryNeeded("boundary branch vertex " + std::to_string(*branch) +
                              " has no feasible absorption");
        }
        auto boxed = boxed_points(st);
        if (boxed.empty()) return;
        VertexId y = boxed.front();
        if (absorb_vertex(st, y, y) || absorb_boxed_point(st, y) || absorb_any(st)) continue;
        throw RetryNeeded("boxed point " + std::to_string(y) + " has no feasible absorption");
    }
    throw RetryNeeded("boundary repair did not terminate");
}

// Fallback when assembly fails: grow a hole by one more vertex. Growth snakes
// coherently from the interior-path ends (smallest adjacent vertex first) so
// the carved region stays path-shaped; any feasible absorption is a last
// resort.
bool absorb_any(State& st) {
    for (auto& hole : st.holes) {
        std::array<VertexId, 2> ends{hole.path.front(), hole.path.back()};
        if (st.strategy.reverse_candidates) std::swap(ends[0], ends[1]);
        for (VertexId end : ends)
            for (VertexId z : st.input.neighbors(end))
                if (st.work.has_vertex(z) && absorb_vertex(st, z, z)) return true;
    }
    for (VertexId v : st.work.vertices())
        if (absorb_vertex(st, v, v)) return true;
    return false;
}

DrillResult drill_hole(const Graph& g, VertexId x) {
    auto info = boundary(g);
    std::set<VertexId> bset(info.vertices.begin(), info.vertices.end());
    if (bset.count(x) || !g.has_vertex(x))
        throw std::invalid_argument("drill_hole: x must be an interior vertex");
    auto dist = graph_distance(g, bset, x);
    if (!dist || *dist != 1)
        throw std::invalid_argument("drill_hole: x must be at distance 1 from the boundary");
    std::set<Edge> bedges;
    for (const auto& face : info.faces)
        for (std::size_t i = 0; i < face.size(); ++i)
            for (std::size_t j = i + 1; j < face.size(); ++j)
                bedges.insert({face[i], face[j]});
    const auto& nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            Edge e = make_edge(nb[i], nb[j]);
            if (!g.has_edge(e.first, e.second) || !bedges.count(e)) continue;
            DrillResult res;
            res.removed_edge = e;
            for (const auto& s : all_cliques(g)) {
                if (std::binary_search(s.begin(), s.end(), e.first) &&
                    std::binary_search(s.begin(), s.end(), e.second) && s.size() >= 2)
                    res.removed_simplices.push_back(s);
            }
            res.remaining = g;
            res.remaining.remove_edge(e.first, e.second);
            return res;
        }
    throw std::invalid_argument("drill_hole: no boundary edge inside S(x)");
}

Cycle extend_detour(const Graph& g, const Cycle& c, VertexId x, Edge replaced) {
    Edge e = make_edge(replaced.first, replaced.second);
    if (!g.has_edge(x, e.first) || !g.has_edge(x, e.second))
        throw std::invalid_argument("extend_detour: x is not adjacent to both edge endpoints");
    if (!cycle_edge_set(c).count(e)) throw std::invalid_argument("extend_detour: not a cycle edge");
    for (VertexId v : c.vertices)
        if (v == x) throw std::invalid_argument("extend_detour: x already on the cycle");
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        out.push_back(c.vertices[i]);
        Edge cur = make_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
        if (cur == e) out.push_back(x);
    }
    return normalize_cycle(std::move(out));
}

}  // namespace swiss

// --- assembly ----------------------------------------------------------------------

namespace {

using swiss::RetryNeeded;

enum class Claim { Plain, StrongClosed, StrongBoundary };

struct Assembler {
    const Graph& input;
    swiss::State& st;
    Claim claim;

    CycleLinks links;
    std::set<VertexId> pending;               // vertices not yet on any cycle
    std::set<VertexId> hole_vertices;         // pending vertices placed as path units
    std::vector<Simplex> faces;               // watched: facets (+ boundary faces)
    std::map<Edge, std::vector<int>> edge_faces;
    std::map<VertexId, std::vector<int>> vertex_faces;
    std::vector<int> covered, pend_cnt;
    std::set<Edge> drillable;                 // current boundary-complex edges
    long long dfs_budget = 0;

    Assembler(swiss::State& s, Claim cl) : input(s.input), st(s), claim(cl) {}

    void watch_faces() {
        Complex w = whitney_complex(input);
        faces = w.facets;
        if (st.track_boundary_faces)
            for (const auto& f : boundary_of(w).faces) faces.push_back(f);
        covered.assign(faces.size(), 0);
        pend_cnt.assign(faces.size(), 0);
        for (std::size_t i = 0; i < faces.size(); ++i) {
            const auto& f = faces[i];
            for (std::size_t a = 0; a < f.size(); ++a) {
                vertex_faces[f[a]].push_back(static_cast<int>(i));
                for (std::size_t b = a + 1; b < f.size(); ++b)
                    edge_faces[make_edge(f[a], f[b])].push_back(static_cast<int>(i));
            }
        }
    }

    const std::vector<int>& faces_of(Edge e) const {
        static const std::vector<int> none;
        auto it = edge_faces.find(e);
        return it == edge_faces.end() ? none : it->second;
    }

    void register_cycle(const std::vector<VertexId>& order) {
        links.add_cycle(order);
        for (std::size_t i = 0; i < order.size(); ++i) {
            Edge e = make_edge(order[i], order[(i + 1) % order.size()]);
            for (int f : faces_of(e)) ++covered[f];
        }
    }

    void set_pending(const std::set<VertexId>& p) {
        pending = p;
        for (VertexId v : p) {
            auto it = vertex_faces.find(v);
            if (it != vertex_faces.end())
                for (int f : it->second) ++pend_cnt[f];
        }
    }

    bool add_inside(const Simplex& f, Edge e) const {
        return std::binary_search(f.begin(), f.end(), e.first) &&
               std::binary_search(f.begin(), f.end(), e.second);
    }

    // No watched face may end with zero cycle edges and zero pending vertices.
    bool coverage_ok(const std::vector<Edge>& removes, const std::vector<Edge>& adds,
                     const std::vector<VertexId>& places) const {
        if (claim == Claim::Plain) return true;
        std::set<int> touched;
        for (const auto& e : removes)
            for (int f : faces_of(e)) touched.insert(f);
        for (VertexId v : places) {
            auto it = vertex_faces.find(v);
            if (it != vertex_faces.end())
                for (int f : it->second) touched.insert(f);
        }
        for (int f : touched) {
            int cov = covered[f];
            for (const auto& e : removes)
                if (add_inside(faces[f], e)) --cov;
            for (const auto& e : adds)
                if (add_inside(faces[f], e)) ++cov;
            if (cov > 0) continue;
            int pnd = pend_cnt[f];
            for (VertexId v : places)
                if (std::binary_search(faces[f].begin(), faces[f].end(), v)) --pnd;
            if (pnd <= 0) return false;
        }
        return true;
    }

    // No single pending vertex may lose its last usable detour edge.
    bool stranding_ok(const std::vector<Edge>& removes, const std::vector<Edge>& adds,
                      const std::set<VertexId>& placing) const {
        std::set<VertexId> affected;
        for (const auto& e : removes) {
            const auto& na = input.neighbors(e.first);
            for (VertexId z : input.neighbors(e.second))
                if (pending.count(z) && !placing.count(z) && !hole_vertices.count(z) &&
                    std::binary_search(na.begin(), na.end(), z))
                    affected.insert(z);
        }
        std::set<Edge> rem(removes.begin(), removes.end());
        for (VertexId z : affected) {
            bool ok = false;
            const auto& nz = input.neighbors(z);
            for (const auto& e : adds)
                if (std::binary_search(nz.begin(), nz.end(), e.first) &&
                    std::binary_search(nz.begin(), nz.end(), e.second)) {
                    ok = true;
                    break;
                }
            for (VertexId u : nz) {
                if (ok) break;
                if (!links.on_cycle(u)) continue;
                for (VertexId v : links.link.at(u)) {
                    if (v < 0 || !std::binary_search(nz.begin(), nz.end(), v)) continue;
                    Edge e = make_edge(u, v);
                    if (!rem.count(e) && links.edges.count(e)) { ok = true; break; }
                }
            }
            if (!ok) return false;
        }
        return true;
    }

    void apply_edges(const std::vector<Edge>& removes, const std::vector<Edge>& adds,
                     const std::vector<VertexId>& places) {
        for (const auto& e : removes)
            for (int f : faces_of(e)) --covered[f];
        for (const auto& e : adds)
            for (int f : faces_of(e)) ++covered[f];
        for (VertexId v : places) {
            pending.erase(v);
            auto it = vertex_faces.find(v);
            if (it != vertex_faces.end())
                for (int f : it->second) --pend_cnt[f];
        }
    }

    // --- detour/path insertion -----------------------------------------------

    struct PathCandidate {
        Edge consumed;            // (entry, exit) kept oriented
        VertexId entry, exit;
        std::vector<VertexId> path;
    };

    std::vector<std::vector<VertexId>> orientations(const std::vector<VertexId>& path) const {
        std::vector<std::vector<VertexId>> out;
        out.push_back(path);
        if (path.size() > 1) {
            auto rev = path;
            std::reverse(rev.begin(), rev.end());
            out.push_back(rev);
        }
        if (path.size() >= 3 && path.size() <= 6) {
            // every Hamiltonian path of the carved region
            Graph h = induced(input, path);
            std::vector<VertexId> cur;
            std::set<VertexId> used;
            std::function<void(VertexId)> rec = [&](VertexId v) {
                cur.push_back(v);
                used.insert(v);
                if (cur.size() == path.size()) out.push_back(cur);
                else
                    for (VertexId u : h.neighbors(v))
                        if (!used.count(u)) rec(u);
                used.erase(v);
                cur.pop_back();
            };
            for (VertexId v : h.vertices()) rec(v);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
        return out;
    }

    std::vector<PathCandidate> path_candidates(const std::vector<VertexId>& path) const {
        std::vector<PathCandidate> out;
        for (const auto& p : orientations(path)) {
            const auto& nf = input.neighbors(p.front());
            const auto& nb = input.neighbors(p.back());
            for (VertexId u : nf) {
                if (!links.on_cycle(u)) continue;
                for (VertexId v : links.link.at(u)) {
                    if (v < 0) continue;
                    if (!std::binary_search(nb.begin(), nb.end(), v)) continue;
                    if (p.size() == 1 && u > v) continue;  // symmetric for single vertices
                    Edge e = make_edge(u, v);
                    if (!links.edges.count(e)) continue;
                    out.push_back(PathCandidate{e, u, v, p});
                }
            }
        }
        auto key = [](const PathCandidate& c) {
            return std::tuple(c.consumed, c.entry, c.path);
        };
        std::sort(out.begin(), out.end(),
                  [&](const PathCandidate& a, const PathCandidate& b) { return key(a) < key(b); });
        out.erase(std::unique(out.begin(), out.end(),
                              [&](const PathCandidate& a, const PathCandidate& b) {
                                  return key(a) == key(b);
                              }),
                  out.end());
        return out;
    }

    bool candidate_ok(const PathCandidate& c) const {
        std::vector<Edge> removes{c.consumed};
        std::vector<Edge> adds;
        VertexId prev = c.entry;
        for (VertexId z : c.path) {
            adds.push_back(make_edge(prev, z));
            prev = z;
        }
        adds.push_back(make_edge(prev, c.exit));
        if (!coverage_ok(removes, adds, c.path)) return false;
        return stranding_ok(removes, adds, std::set<VertexId>(c.path.begin(), c.path.end()));
    }

    void apply_candidate(const PathCandidate& c) {
        std::vector<Edge> adds;
        VertexId prev = c.entry;
        for (VertexId z : c.path) {
            adds.push_back(make_edge(prev, z));
            prev = z;
        }
        adds.push_back(make_edge(prev, c.exit));
        if (c.path.size() == 1 && drillable.count(c.consumed)) {
            DrillHoleStep drill;
            drill.removed_edge = c.consumed;
            for (const auto& s : all_cliques(st.work))
                if (s.size() >= 2 && std::binary_search(s.begin(), s.end(), c.consumed.first) &&
                    std::binary_search(s.begin(), s.end(), c.consumed.second))
                    drill.removed_simplices.push_back(s);
            st.trace.steps.push_back(std::move(drill));
        }
        links.splice_path(c.entry, c.exit, c.path);
        apply_edges({c.consumed}, adds, c.path);
        // incremental trace: each vertex replaces the previous partial edge
        VertexId tail = c.exit;
        VertexId lead = c.entry;
        for (VertexId z : c.path) {
            st.trace.steps.push_back(DetourStep{z, make_edge(lead, tail)});
            lead = z;
        }
    }

    // --- bridges ----------------------------------------------------------------

    struct BridgeCandidate {
        VertexId a, b, c, d;  // remove (a,b),(c,d); insert (a,c),(b,d)
    };

    std::optional<BridgeCandidate> best_bridge() const {
        std::optional<BridgeCandidate> best;
        auto better = [&](const BridgeCandidate& x) {
            if (!best) return true;
            return std::tuple(make_edge(x.a, x.b), make_edge(x.c, x.d), x.a, x.c) <
                   std::tuple(make_edge(best->a, best->b), make_edge(best->c, best->d), best->a,
                              best->c);
        };
        for (const auto& [p, q] : st.work.edges()) {
            if (!links.on_cycle(p) || !links.on_cycle(q)) continue;
            if (links.comp_of.at(p) == links.comp_of.at(q)) continue;
            for (int swap = 0; swap < 2; ++swap) {
                VertexId a = swap ? q : p, c = swap ? p : q;
                for (VertexId b : links.link.at(a)) {
                    if (b < 0) continue;
                    for (VertexId d : links.link.at(c)) {
                        if (d < 0) continue;
                        if (!st.work.has_edge(b, d)) continue;
                        BridgeCandidate cand{a, b, c, d};
                        std::vector<Edge> removes{make_edge(a, b), make_edge(c, d)};
                        std::vector<Edge> adds{make_edge(a, c), make_edge(b, d)};
                        if (!coverage_ok(removes, adds, {})) continue;
                        if (!stranding_ok(removes, adds, {})) continue;
                        if (better(cand)) best = cand;
                    }
                }
            }
        }
        return best;
    }

    Simplex bridge_face(VertexId a, VertexId b) const {
        // smallest (dim)-sized clique through {a,b} within a's component
        Simplex face{std::min(a, b), std::max(a, b)};
        int comp = links.comp_of.at(a);
        const auto& na = st.work.neighbors(a);
        for (VertexId w : st.work.neighbors(b)) {
            if (static_cast<int>(face.size()) >= st.dim) break;
            if (!std::binary_search(na.begin(), na.end(), w)) continue;
            auto it = links.comp_of.find(w);
            if (it == links.comp_of.end() || it->second != comp) continue;
            bool clique = true;
            for (VertexId x : face)
                if (x != w && !st.work.has_edge(x, w)) { clique = false; break; }
            if (!clique || std::binary_search(face.begin(), face.end(), w)) continue;
            face.insert(std::lower_bound(face.begin(), face.end(), w), w);
        }
        return face;
    }

    void merge_all_components() {
        while (links.cycle_count() > 1) {
            auto cand = best_bridge();
            if (!cand)
                throw RetryNeeded("no admissible prism bridge between boundary cycles");
            PrismBridge pb;
            pb.face_a = bridge_face(cand->a, cand->b);
            pb.face_b = bridge_face(cand->c, cand->d);
            for (VertexId x : pb.face_a)
                for (VertexId y : pb.face_b)
                    if (st.work.has_edge(x, y)) pb.cross_edges.push_back(make_edge(x, y));
            pb.remove_edges = {make_edge(cand->a, cand->b), make_edge(cand->c, cand->d)};
            pb.insert_edges = {make_edge(cand->a, cand->c), make_edge(cand->b, cand->d)};
            std::vector<Edge> removes{pb.remove_edges[0], pb.remove_edges[1]};
            std::vector<Edge> adds{pb.insert_edges[0], pb.insert_edges[1]};
            links.bridge(cand->a, cand->b, cand->c, cand->d);
            apply_edges(removes, adds, {});
            st.trace.steps.push_back(BridgeStep{std::move(pb)});
        }
    }

    // --- pending placement (DFS with snapshots) -----------------------------------

    struct Snapshot {
        CycleLinks links;
        std::set<VertexId> pending;
        std::vector<int> covered, pend_cnt;
        std::size_t trace_len;
    };

    Snapshot save() const {
        return Snapshot{links, pending, covered, pend_cnt, st.trace.steps.size()};
    }
    void restore(Snapshot&& snap) {
        links = std::move(snap.links);
        pending = std::move(snap.pending);
        covered = std::move(snap.covered);
        pend_cnt = std::move(snap.pend_cnt);
        st.trace.steps.resize(snap.trace_len);
    }

    bool place_units(std::vector<std::vector<VertexId>> units) {
        if (units.empty()) return true;
        std::size_t pick = 0;
        if (st.strategy.most_constrained && units.front().size() == 1) {
            std::size_t best = SIZE_MAX;
            for (std::size_t i = 0; i < units.size(); ++i) {
                if (units[i].size() != 1) { pick = i; break; }
                std::size_t n = path_candidates(units[i]).size();
                if (n < best) { best = n; pick = i; }
            }
        }
        auto unit = units[pick];
        units.erase(units.begin() + pick);
        auto cands = path_candidates(unit);
        if (st.strategy.reverse_candidates) std::reverse(cands.begin(), cands.end());
        if (st.strategy.shuffle_seed) {
            std::mt19937_64 rng(st.strategy.shuffle_seed * 7919 + unit.front());
            std::shuffle(cands.begin(), cands.end(), rng);
        }
        for (const auto& c : cands) {
            if (!candidate_ok(c)) continue;
            if (--dfs_budget < 0) throw RetryNeeded("detour search budget exhausted");
            Snapshot snap = save();
            apply_candidate(c);
            if (place_units(units)) return true;
            restore(std::move(snap));
        }
        // large carved regions: re-route the interior path for other end pairs
        if (unit.size() >= 3) {
            for (const auto& c : rerouted_candidates(unit)) {
                if (!candidate_ok(c)) continue;
                if (--dfs_budget < 0) throw RetryNeeded("detour search budget exhausted");
                Snapshot snap = save();
                apply_candidate(c);
                if (place_units(units)) return true;
                restore(std::move(snap));
            }
        }
        return false;
    }

    // Hamiltonian path of the carved region with prescribed ends, found by
    // budgeted backtracking.
    std::optional<std::vector<VertexId>> region_path(const std::vector<VertexId>& region,
                                                     VertexId s, VertexId t) const {
        Graph h = induced(input, region);
        std::vector<VertexId> path{s};
        std::set<VertexId> used{s};
        long long budget = 100000;
        std::function<bool()> rec = [&]() -> bool {
            if (--budget < 0) return false;
            VertexId v = path.back();
            if (path.size() == region.size()) return v == t;
            for (VertexId u : h.neighbors(v)) {
                if (used.count(u) || (u == t && path.size() + 1 != region.size())) continue;
                used.insert(u);
                path.push_back(u);
                if (rec()) return true;
                path.pop_back();
                used.erase(u);
            }
            return false;
        };
        if (s == t || !h.has_vertex(s) || !h.has_vertex(t)) return std::nullopt;
        if (rec()) return path;
        return std::nullopt;
    }

    std::vector<PathCandidate> rerouted_candidates(const std::vector<VertexId>& unit) const {
        std::vector<PathCandidate> out;
        std::set<VertexId> region(unit.begin(), unit.end());
        for (const Edge& e : links.edges) {
            for (int swap = 0; swap < 2; ++swap) {
                VertexId u = swap ? e.second : e.first;
                VertexId v = swap ? e.first : e.second;
                for (VertexId s : input.neighbors(u)) {
                    if (!region.count(s)) continue;
                    for (VertexId t : input.neighbors(v)) {
                        if (!region.count(t) || s == t) continue;
                        if (auto p = region_path(unit, s, t))
                            out.push_back(PathCandidate{e, u, v, *p});
                    }
                }
            }
        }
        return out;
    }
};

Claim claim_for(const Classification& cls, bool boundary_empty, int d) {
    if (boundary_empty) return Claim::StrongClosed;
    if (d >= 3) return Claim::StrongBoundary;
    (void)cls;
    return Claim::Plain;
}

HamiltonianOutput assemble(swiss::State& st, Claim claim) {
    Assembler as(st, claim);
    as.watch_faces();

    // boundary components of the carved graph
    BoundaryInfo info = swiss::work_boundary(st.work, st.dim);
    if (info.faces.empty())
        throw RetryNeeded("carved graph has no boundary complex");
    as.drillable = swiss::boundary_edge_set(st.work, st.dim);

    std::set<VertexId> pend;
    for (VertexId v : st.work.vertices())
        if (!st.boundary_vertices.count(v)) pend.insert(v);
    for (const auto& h : st.holes)
        for (VertexId p : h.path) {
            pend.insert(p);
            as.hole_vertices.insert(p);
        }
    as.set_pending(pend);

    int comp_id = 0;
    for (const auto& comp : connected_components(info.graph)) {
        Graph cg = induced(info.graph, comp);
        std::vector<VertexId> order;
        if (is_cycle_graph(cg)) {
            order = cycle_order(cg);
        } else {
            HamiltonianOutput sub = find_hamiltonian(cg);
            order = sub.cycle.vertices;
        }
        as.register_cycle(order);
        st.trace.steps.push_back(BoundaryCycleStep{comp_id++, order});
    }

    as.merge_all_components();

    // holes first (carve order), then plain interior points
    std::vector<std::vector<VertexId>> units;
    for (const auto& h : st.holes) units.push_back(h.path);
    std::vector<VertexId> singles;
    for (VertexId v : pend) {
        bool in_hole = false;
        for (const auto& h : st.holes)
            if (std::find(h.path.begin(), h.path.end(), v) != h.path.end()) in_hole = true;
        if (!in_hole) singles.push_back(v);
    }
    std::sort(singles.begin(), singles.end());
    if (st.strategy.shuffle_seed) {
        std::mt19937_64 rng(st.strategy.shuffle_seed);
        std::shuffle(singles.begin(), singles.end(), rng);
    }
    for (VertexId v : singles) units.push_back({v});

    as.dfs_budget = 400 + 8 * static_cast<long long>(units.size());
    if (!as.place_units(units)) throw RetryNeeded("no admissible detour assignment");

    HamiltonianOutput out;
    out.cycle = normalize_cycle(as.links.extract_single());
    out.trace = st.trace;
    return out;
}

std::vector<swiss::Strategy> strategy_ladder() {
    std::vector<swiss::Strategy> out;
    for (int rot : {0, 1, 2, 3})
        for (bool mc : {false, true})
            for (bool rev : {false, true}) out.push_back({rot, mc, rev, 0});
    for (std::uint64_t s = 1; s <= 8; ++s)
        out.push_back({static_cast<int>(s % 4), s % 2 == 0, false, s});
    return out;
}

}  // namespace

namespace swiss {

HamiltonianOutput boundary_cycles_and_bridges(const Graph& g) {
    State st = init_state(g);
    if (st.boundary_vertices.empty())
        throw std::invalid_argument("boundary_cycles_and_bridges: graph has no boundary");
    Assembler as(st, Claim::Plain);
    as.watch_faces();
    BoundaryInfo info = swiss::work_boundary(st.work, st.dim);
    int comp_id = 0;
    for (const auto& comp : connected_components(info.graph)) {
        Graph cg = induced(info.graph, comp);
        std::vector<VertexId> order =
            is_cycle_graph(cg) ? cycle_order(cg) : find_hamiltonian(cg).cycle.vertices;
        as.register_cycle(order);
        st.trace.steps.push_back(BoundaryCycleStep{comp_id++, order});
    }
    try {
        as.merge_all_components();
    } catch (const RetryNeeded& e) {
        throw ConstructionError(e.what(), st.trace);
    }
    HamiltonianOutput out;
    out.cycle = normalize_cycle(as.links.extract_single());
    out.trace = st.trace;
    return out;
}

}  // namespace swiss

// --- driver -------------------------------------------------------------------------

HamiltonianOutput find_hamiltonian(const Graph& g) {
    Classification cls = classify_dgraph(g);
    auto closed_dim = cls.dim_of(Tag::ClosedDGraph);
    auto wb_dim = cls.dim_of(Tag::DGraphWithBoundary);
    auto gen_dim = cls.dim_of(Tag::GeneralizedDGraph);
    bool ok = (closed_dim && *closed_dim >= 1) || (wb_dim && *wb_dim >= 2) ||
              (gen_dim && *gen_dim >= 2);
    if (!ok)
        throw PreconditionError("find_hamiltonian: input is not a d-graph (closed, with boundary "
                                "d>=2, or generalized d>=2); classified as " +
                                    std::string(tag_name(cls.tag)),
                                cls);
    if (!is_connected(g))
        throw PreconditionError("find_hamiltonian: graph is not connected", cls);

    const int d = closed_dim ? *closed_dim : (wb_dim ? *wb_dim : *gen_dim);
    const bool closed = closed_dim.has_value();
    Claim claim = claim_for(cls, closed, d);

    auto finish = [&](HamiltonianOutput out) {
        if (!verify_hamiltonian(g, out.cycle))
            throw ConstructionError("constructed sequence is not a Hamiltonian cycle", out.trace);
        if (claim == Claim::StrongClosed && !verify_strong(g, out.cycle, false))
            throw ConstructionError("cycle misses a facet (strong property)", out.trace);
        if (claim == Claim::StrongBoundary && !verify_strong(g, out.cycle, true))
            throw ConstructionError("cycle misses a facet or boundary face (strong property)",
                                    out.trace);
        return out;
    };

    // 1-dimensional case: the graph is the cycle
    if (d == 1 && closed) {
        HamiltonianOutput out;
        std::vector<VertexId> order = cycle_order(g);
        out.trace.steps.push_back(BoundaryCycleStep{0, order});
        out.cycle = normalize_cycle(order);
        return finish(std::move(out));
    }

    if (is_complete(g)) {
        HamiltonianOutput out;
        std::vector<VertexId> order = g.vertices();
        out.trace.steps.push_back(BoundaryCycleStep{0, order});
        out.cycle = normalize_cycle(order);
        return finish(std::move(out));
    }

    // path-shellable fast path
    Complex w = whitney_complex(g);
    if (auto order = detail::dual_path_order(w)) {
        Cycle c = hamiltonian_for_path_shellable(w);
        HamiltonianOutput out;
        // reconstruct the trace from the lift sequence
        const auto& facets = *order;
        std::vector<VertexId> first = facets[0];
        out.trace.steps.push_back(BoundaryCycleStep{0, first});
        Cycle cur = normalize_cycle(first);
        std::set<VertexId> seen(first.begin(), first.end());
        for (std::size_t j = 1; j < facets.size(); ++j) {
            Simplex attach;
            VertexId x = -1;
            for (VertexId v : facets[j])
                if (seen.count(v)) attach.push_back(v);
                else x = v;
            auto edges = cycle_edge_set(cur);
            for (std::size_t a = 0; a < attach.size(); ++a) {
                bool done = false;
                for (std::size_t b = a + 1; b < attach.size() && !done; ++b) {
                    Edge e = make_edge(attach[a], attach[b]);
                    if (edges.count(e)) {
                        out.trace.steps.push_back(DetourStep{x, e});
                        cur = swiss::extend_detour(g, cur, x, e);
                        done = true;
                    }
                }
                if (done) break;
            }
            seen.insert(x);
        }
        if (!(cur == c))
            throw ConstructionError("path-shellable trace does not reproduce the cycle", out.trace);
        out.cycle = cur;
        return finish(std::move(out));
    }

    // swiss-cheese route with the tie-break ladder
    std::string last_error = "construction failed";
    ConstructionTrace last_trace;
    for (const auto& strat : strategy_ladder()) {
        swiss::State st = swiss::init_state(g);
        st.strategy = strat;
        try {
            swiss::carve_all(st);
            // repair/assemble loop: a failed assembly grows a hole and retries
            for (std::size_t round = 0; round <= g.vertex_count(); ++round) {
                swiss::resolve_boxed_points(st);
                std::size_t mark = st.trace.steps.size();
                try {
                    return finish(assemble(st, claim));
                } catch (const RetryNeeded& e) {
                    st.trace.steps.resize(mark);
                    if (getenv("DGRAPH_DEBUG")) {
                        fprintf(stderr, "[assemble fail round %zu] %s (work=%zu) path=[", round,
                                e.what(), st.work.vertex_count());
                        for (const auto& h : st.holes) {
                            for (VertexId v : h.path) fprintf(stderr, "%d ", v);
                            fprintf(stderr, "| ");
                        }
                        fprintf(stderr, "] bnd={");
                        for (VertexId v : st.boundary_vertices) fprintf(stderr, "%d ", v);
                        fprintf(stderr, "}\n");
                    }
                    if (st.dim != 2 || !swiss::absorb_any(st)) throw;
                    last_error = e.what();
                }
            }
            throw RetryNeeded("assembly kept failing after hole growth");
        } catch (const RetryNeeded& e) {
            last_error = e.what();
            last_trace = st.trace;
        } catch (const ConstructionError& e) {
            last_error = e.what();
            last_trace = e.trace_prefix;
        }
    }
    throw ConstructionError("find_hamiltonian: all strategies failed: " + last_error,
                            last_trace);
}

// --- trace replay --------------------------------------------------------------------

Cycle replay_trace(const Graph& g, const ConstructionTrace& trace) {
    CycleLinks links;
    for (const auto& step : trace.steps) {
        if (const auto* bc = std::get_if<BoundaryCycleStep>(&step)) {
            for (VertexId v : bc->cycle)
                if (!g.has_vertex(v)) throw std::invalid_argument("replay: unknown vertex");
            links.add_cycle(bc->cycle);
        } else if (const auto* br = std::get_if<BridgeStep>(&step)) {
            const auto& pb = br->bridge;
            VertexId a = pb.remove_edges[0].first, b = pb.remove_edges[0].second;
            VertexId c = pb.remove_edges[1].first, d = pb.remove_edges[1].second;
            if (!links.edges.count(pb.remove_edges[0]) || !links.edges.count(pb.remove_edges[1]))
                throw std::invalid_argument("replay: bridge removes a non-cycle edge");
            // orient: insert edges pair a with c or with d
            Edge i0 = pb.insert_edges[0], i1 = pb.insert_edges[1];
            auto touches = [](Edge e, VertexId x) { return e.first == x || e.second == x; };
            VertexId cc = c, dd = d;
            if ((touches(i0, a) && touches(i0, d)) || (touches(i1, a) && touches(i1, d)))
                std::swap(cc, dd);
            links.bridge(a, b, cc, dd);
        } else if (const auto* de = std::get_if<DetourStep>(&step)) {
            Edge e = de->replaced;
            if (!links.edges.count(make_edge(e.first, e.second)))
                throw std::invalid_argument("replay: detour replaces a non-cycle edge");
            links.splice_path(e.first, e.second, {de->vertex});
        }
        // carve/absorb/drill steps shape the graph, not the cycle
    }
    std::vector<VertexId> order = links.extract_single();
    return normalize_cycle(std::move(order));
}

}  // namespace dgraph
