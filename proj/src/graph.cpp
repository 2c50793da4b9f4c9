#include "dgraph/graph.hpp"

#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace dgraph {

namespace {

// Pivoted Bron-Kerbosch over sorted vertex vectors.
void bron_kerbosch(const Graph& g, std::vector<VertexId>& R,
                   std::vector<VertexId> P, std::vector<VertexId> X,
                   std::vector<Simplex>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    // pivot: vertex of P ∪ X with most neighbors in P
    VertexId pivot = -1;
    std::size_t best = 0;
    bool have = false;
    auto count_in_p = [&](VertexId u) {
        const auto& nb = g.neighbors(u);
        std::size_t c = 0;
        for (VertexId w : P)
            if (std::binary_search(nb.begin(), nb.end(), w)) ++c;
        return c;
    };
    for (VertexId u : P) {
        std::size_t c = count_in_p(u);
        if (!have || c > best) { pivot = u; best = c; have = true; }
    }
    for (VertexId u : X) {
        std::size_t c = count_in_p(u);
        if (!have || c > best) { pivot = u; best = c; have = true; }
    }
    std::vector<VertexId> candidates;
    const auto& pnb = have ? g.neighbors(pivot) : std::vector<VertexId>{};
    for (VertexId v : P)
        if (!have || !std::binary_search(pnb.begin(), pnb.end(), v)) candidates.push_back(v);

    for (VertexId v : candidates) {
        const auto& nb = g.neighbors(v);
        std::vector<VertexId> P2, X2;
        for (VertexId w : P)
            if (std::binary_search(nb.begin(), nb.end(), w)) P2.push_back(w);
        for (VertexId w : X)
            if (std::binary_search(nb.begin(), nb.end(), w)) X2.push_back(w);
        R.push_back(v);
        bron_kerbosch(g, R, std::move(P2), std::move(X2), out);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), v));
        X.insert(std::lower_bound(X.begin(), X.end(), v), v);
    }
}

void sort_simplices(std::vector<Simplex>& xs) {
    for (auto& s : xs) std::sort(s.begin(), s.end());
    std::sort(xs.begin(), xs.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

}  // namespace

Complex whitney_complex(const Graph& g) {
    Complex c;
    if (g.vertex_count() == 0) return c;
    std::vector<VertexId> R;
    bron_kerbosch(g, R, g.vertices(), {}, c.facets);
    sort_simplices(c.facets);
    return c;
}

std::vector<Simplex> all_cliques(const Graph& g) {
    std::vector<Simplex> out;
    std::function<void(Simplex&, const std::vector<VertexId>&)> ext =
        [&](Simplex& cur, const std::vector<VertexId>& cand) {
            if (!cur.empty()) out.push_back(cur);
            for (std::size_t i = 0; i < cand.size(); ++i) {
                VertexId v = cand[i];
                const auto& nb = g.neighbors(v);
                std::vector<VertexId> next;
                for (std::size_t j = i + 1; j < cand.size(); ++j)
                    if (std::binary_search(nb.begin(), nb.end(), cand[j])) next.push_back(cand[j]);
                cur.push_back(v);
                ext(cur, next);
                cur.pop_back();
            }
        };
    Simplex cur;
    ext(cur, g.vertices());
    sort_simplices(out);
    return out;
}

Graph skeleton(const Complex& c) {
    Graph g;
    for (const auto& f : c.facets) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            g.add_vertex(f[i]);
            for (std::size_t j = i + 1; j < f.size(); ++j) g.add_edge(f[i], f[j]);
        }
    }
    return g;
}

Graph unit_sphere(const Graph& g, VertexId v) {
    return induced(g, g.neighbors(v));  // throws on unknown vertex
}

Graph induced(const Graph& g, const std::vector<VertexId>& verts) {
    Graph out;
    std::vector<VertexId> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    for (VertexId v : sorted) {
        if (!g.has_vertex(v)) throw std::invalid_argument("induced: unknown vertex " + std::to_string(v));
        out.add_vertex(v);
    }
    for (VertexId v : sorted)
        for (VertexId u : g.neighbors(v))
            if (u > v && std::binary_search(sorted.begin(), sorted.end(), u)) out.add_edge(v, u);
    return out;
}

Graph induced(const Graph& g, const std::set<VertexId>& verts) {
    return induced(g, std::vector<VertexId>(verts.begin(), verts.end()));
}

FVector f_vector(const Graph& g) {
    FVector fv;
    for (const auto& s : all_cliques(g)) {
        int d = simplex_dim(s);
        if (static_cast<int>(fv.counts.size()) <= d) fv.counts.resize(d + 1, 0);
        ++fv.counts[d];
    }
    return fv;
}

long long euler_characteristic(const Graph& g) {
    long long chi = 0;
    int sign = 1;
    for (long long c : f_vector(g).counts) {
        chi += sign * c;
        sign = -sign;
    }
    return chi;
}

Graph dual_graph_of(const Complex& c) {
    if (!c.pure()) {
        int lo = 1 << 30, hi = -1;
        for (const auto& f : c.facets) {
            lo = std::min(lo, simplex_dim(f));
            hi = std::max(hi, simplex_dim(f));
        }
        throw std::invalid_argument("dual_graph: complex not pure (facet dimensions " +
                                    std::to_string(lo) + " and " + std::to_string(hi) + ")");
    }
    Graph dual;
    for (std::size_t i = 0; i < c.facets.size(); ++i) dual.add_vertex(static_cast<VertexId>(i));
    std::map<Simplex, std::vector<int>> by_ridge;
    for (std::size_t i = 0; i < c.facets.size(); ++i) {
        const Simplex& f = c.facets[i];
        for (std::size_t k = 0; k < f.size(); ++k) {
            Simplex ridge;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != k) ridge.push_back(f[j]);
            by_ridge[ridge].push_back(static_cast<int>(i));
        }
    }
    for (const auto& [ridge, ids] : by_ridge)
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b) dual.add_edge(ids[a], ids[b]);
    return dual;
}

Graph dual_graph(const Graph& g) { return dual_graph_of(whitney_complex(g)); }

BoundaryInfo boundary_of(const Complex& c) {
    if (!c.pure()) throw std::invalid_argument("boundary: complex not pure");
    BoundaryInfo info;
    if (c.facets.empty()) return info;
    std::map<Simplex, int> ridge_count;
    for (const auto& f : c.facets) {
        for (std::size_t k = 0; k < f.size(); ++k) {
            Simplex ridge;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != k) ridge.push_back(f[j]);
            ++ridge_count[ridge];
        }
    }
    std::set<VertexId> verts;
    for (const auto& [ridge, n] : ridge_count) {
        if (n != 1) continue;
        info.faces.push_back(ridge);
        for (VertexId v : ridge) {
            verts.insert(v);
            info.graph.add_vertex(v);
        }
        for (std::size_t i = 0; i < ridge.size(); ++i)
            for (std::size_t j = i + 1; j < ridge.size(); ++j)
                info.graph.add_edge(ridge[i], ridge[j]);
    }
    info.vertices.assign(verts.begin(), verts.end());
    return info;
}

BoundaryInfo boundary(const Graph& g) { return boundary_of(whitney_complex(g)); }

std::optional<int> graph_distance(const Graph& g, const std::set<VertexId>& from, VertexId to) {
    if (!g.has_vertex(to)) throw std::invalid_argument("graph_distance: unknown target");
    if (from.empty()) return std::nullopt;
    std::unordered_map<VertexId, int> dist;
    std::deque<VertexId> q;
    for (VertexId v : from) {
        if (!g.has_vertex(v)) continue;
        dist[v] = 0;
        q.push_back(v);
    }
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        if (v == to) return dist[v];
        for (VertexId u : g.neighbors(v)) {
            if (dist.count(u)) continue;
            dist[u] = dist[v] + 1;
            q.push_back(u);
        }
    }
    return std::nullopt;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<std::vector<VertexId>> comps;
    std::unordered_set<VertexId> seen;
    for (VertexId s : g.vertices()) {
        if (seen.count(s)) continue;
        std::vector<VertexId> comp;
        std::deque<VertexId> q{s};
        seen.insert(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (VertexId u : g.neighbors(v))
                if (seen.insert(u).second) q.push_back(u);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return connected_components(g).size() == 1;
}

bool is_complete(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return false;
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    for (VertexId v : g.vertices())
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

std::vector<VertexId> cycle_order(const Graph& g) {
    if (!is_cycle_graph(g)) throw std::invalid_argument("cycle_order: not a cycle graph");
    std::vector<VertexId> order;
    VertexId start = g.vertices().front();
    VertexId prev = start;
    VertexId cur = g.neighbors(start).front();  // smaller neighbor fixes direction
    order.push_back(start);
    while (cur != start) {
        order.push_back(cur);
        const auto& nb = g.neighbors(cur);
        VertexId next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

}  // namespace dgraph
