#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dgraph {

using VertexId = int;

// Undirected edge, stored normalized (first < second).
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("self-loop edge " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Finite simple undirected graph. Vertex ids are arbitrary ints and are
// preserved through every induced-subgraph operation; adjacency lists are
// kept sorted so iteration order is deterministic.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(const std::vector<VertexId>& vertices,
                            const std::vector<Edge>& edges) {
        Graph g;
        for (VertexId v : vertices) g.add_vertex(v);
        for (const auto& e : edges) g.add_edge(e.first, e.second);
        return g;
    }

    void add_vertex(VertexId v) {
        adj_.try_emplace(v);
    }

    void add_edge(VertexId u, VertexId v) {
        Edge e = make_edge(u, v);
        add_vertex(e.first);
        add_vertex(e.second);
        insert_sorted(adj_[e.first], e.second);
        insert_sorted(adj_[e.second], e.first);
    }

    void remove_vertex(VertexId v) {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
        for (VertexId u : it->second) erase_sorted(adj_[u], v);
        adj_.erase(it);
    }

    void remove_edge(VertexId u, VertexId v) {
        if (!has_edge(u, v)) throw std::invalid_argument("unknown edge");
        erase_sorted(adj_[u], v);
        erase_sorted(adj_[v], u);
    }

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }

    bool has_edge(VertexId u, VertexId v) const {
        auto it = adj_.find(u);
        if (it == adj_.end()) return false;
        return std::binary_search(it->second.begin(), it->second.end(), v);
    }

    const std::vector<VertexId>& neighbors(VertexId v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
        return it->second;
    }

    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    std::size_t vertex_count() const { return adj_.size(); }

    std::size_t edge_count() const {
        std::size_t s = 0;
        for (const auto& [v, nb] : adj_) s += nb.size();
        return s / 2;
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(adj_.size());
        for (const auto& [v, nb] : adj_) out.push_back(v);
        return out;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (const auto& [v, nb] : adj_)
            for (VertexId u : nb)
                if (v < u) out.emplace_back(v, u);
        return out;  // lexicographically sorted by construction
    }

    VertexId max_vertex_id() const {
        if (adj_.empty()) throw std::logic_error("max_vertex_id on empty graph");
        return adj_.rbegin()->first;
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    static void insert_sorted(std::vector<VertexId>& xs, VertexId v) {
        auto it = std::lower_bound(xs.begin(), xs.end(), v);
        if (it == xs.end() || *it != v) xs.insert(it, v);
    }
    static void erase_sorted(std::vector<VertexId>& xs, VertexId v) {
        auto it = std::lower_bound(xs.begin(), xs.end(), v);
        if (it != xs.end() && *it == v) xs.erase(it);
    }

    std::map<VertexId, std::vector<VertexId>> adj_;
};

// Face of a Whitney complex: strictly increasing vertex ids.
using Simplex = std::vector<VertexId>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

// Simplicial complex given by its facets (maximal faces).
struct Complex {
    std::vector<Simplex> facets;  // sorted lexicographically, none contains another

    int dimension() const {
        int d = -1;
        for (const auto& f : facets) d = std::max(d, simplex_dim(f));
        return d;
    }
    bool pure() const {
        if (facets.empty()) return true;
        const std::size_t k = facets.front().size();
        for (const auto& f : facets)
            if (f.size() != k) return false;
        return true;
    }
    bool empty() const { return facets.empty(); }
};

struct FVector {
    std::vector<long long> counts;  // counts[i] = number of i-dimensional faces
    bool operator==(const FVector& o) const { return counts == o.counts; }
};

// --- complex_core operations -------------------------------------------------

// Facets of the Whitney complex: maximal cliques (pivoted Bron-Kerbosch).
Complex whitney_complex(const Graph& g);

// Every clique of g, grouped by nothing; sorted by (size, lexicographic).
std::vector<Simplex> all_cliques(const Graph& g);

// Graph of the 0- and 1-dimensional faces.
Graph skeleton(const Complex& c);

// Induced subgraph on the neighbors of v, ids preserved.
Graph unit_sphere(const Graph& g, VertexId v);

// Induced subgraph on a vertex set, ids preserved.
Graph induced(const Graph& g, const std::vector<VertexId>& verts);
Graph induced(const Graph& g, const std::set<VertexId>& verts);

FVector f_vector(const Graph& g);
long long euler_characteristic(const Graph& g);

// Facets as vertices 0..m-1 (in sorted facet order), adjacent when they share
// a (d-1)-face. Throws when the complex is not pure.
Graph dual_graph(const Graph& g);
Graph dual_graph_of(const Complex& c);

struct BoundaryInfo {
    std::vector<Simplex> faces;       // (d-1)-simplices lying in exactly one facet
    std::vector<VertexId> vertices;   // union of the faces, sorted
    Graph graph;                      // skeleton of the boundary faces
};

// Boundary of a pure d-dimensional graph by facet-membership count.
BoundaryInfo boundary(const Graph& g);
BoundaryInfo boundary_of(const Complex& c);

// BFS distance from a vertex set; nullopt when unreachable or `from` empty.
std::optional<int> graph_distance(const Graph& g, const std::set<VertexId>& from, VertexId to);

bool is_connected(const Graph& g);
std::vector<std::vector<VertexId>> connected_components(const Graph& g);
bool is_complete(const Graph& g);

// True when the graph is a single cycle C_n, n >= 3.
bool is_cycle_graph(const Graph& g);

// Vertices of a cycle graph in cyclic order, normalized to start at the
// smallest vertex and continue toward its smaller neighbor.
std::vector<VertexId> cycle_order(const Graph& g);

}  // namespace dgraph
