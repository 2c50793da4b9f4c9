#include "dgraph/zoo.hpp"

#include <random>
#include <stdexcept>

#include "dgraph/constructions.hpp"

namespace dgraph::zoo {

namespace {
void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

Graph cyclic(int n) {
    require(n >= 3, "cyclic: n >= 3");
    Graph g;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph wheel(int n) {
    require(n >= 4, "wheel: n >= 4");
    Graph g;
    for (int i = 1; i <= n; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i % n + 1);
    }
    return g;
}

Graph simplex(int d) {
    require(d >= 0, "simplex: d >= 0");
    Graph g;
    for (int i = 0; i <= d; ++i) {
        g.add_vertex(i);
        for (int j = 0; j < i; ++j) g.add_edge(j, i);
    }
    return g;
}

Graph cross_polytope(int d) {
    require(d >= 1, "cross_polytope: d >= 1");
    Graph g = cyclic(4);
    for (int k = 1; k < d; ++k) g = suspension(g);
    return g;
}

Graph icosahedron() {
    Graph g;
    // apex 0 over pentagon 1..5, apex 11 under pentagon 6..10
    const int up[5] = {1, 2, 3, 4, 5};
    const int lo[5] = {6, 7, 8, 9, 10};
    for (int i = 0; i < 5; ++i) {
        g.add_edge(0, up[i]);
        g.add_edge(up[i], up[(i + 1) % 5]);
        g.add_edge(11, lo[i]);
        g.add_edge(lo[i], lo[(i + 1) % 5]);
    }
    const int pair_a[5] = {6, 7, 8, 9, 10};  // up[i] sits over lo[i], lo[i+1]
    for (int i = 0; i < 5; ++i) {
        g.add_edge(up[i], pair_a[i]);
        g.add_edge(up[i], lo[(i + 1) % 5]);
    }
    return g;
}

Graph avici(int d) {
    require(d >= 1, "avici: d >= 1");
    Graph g = simplex(d);  // shared K_d on 0..d-1 plus tip d
    for (int i = 0; i < d; ++i) g.add_edge(i, d + 1);
    return g;
}

Graph goldner_harary(int d) {
    require(d == 3 || d == 4, "goldner_harary: d in {3,4}");
    Graph g = avici(d);
    Complex w = whitney_complex(g);
    for (const auto& face : boundary_of(w).faces) g = stellate_facet(g, face);
    return g;
}

Graph birkhoff_diamond() {
    // interior 0,1; boundary cycle 2..7
    Graph g;
    for (int v : {1, 2, 3, 4, 5}) g.add_edge(0, v);
    for (int v : {2, 5, 6, 7}) g.add_edge(1, v);
    for (int i = 2; i <= 7; ++i) g.add_edge(i, i == 7 ? 2 : i + 1);
    return g;
}

Graph stellated_square() {
    Graph g = wheel(4);
    for (int i = 1; i <= 4; ++i) {
        int j = i % 4 + 1;
        int tip = 4 + i;
        g.add_edge(tip, i);
        g.add_edge(tip, j);
    }
    return g;
}

Graph windmill() {
    Graph blades;
    for (int v : {2, 3, 4}) blades.add_vertex(v);
    return join(simplex(1), blades);
}

Graph stellated_octahedron(bool solid) {
    Graph g = cross_polytope(2);
    Complex faces = whitney_complex(g);  // the 8 triangles
    if (solid) g = cone(g);
    for (const auto& f : faces.facets) g = stellate_facet(g, f);
    return g;
}

Graph prism_graph(int d) {
    require(d >= 2, "prism_graph: d >= 2");
    // floor f_i = i, roof r_i = d+i; facets T_i = {f_0..f_i} ∪ {r_i..r_{d-1}}
    Graph g;
    for (int i = 0; i < d; ++i) {
        Simplex t;
        for (int a = 0; a <= i; ++a) t.push_back(a);
        for (int b = i; b < d; ++b) t.push_back(d + b);
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = a + 1; b < t.size(); ++b) g.add_edge(t[a], t[b]);
    }
    return g;
}

Graph moebius_strip(int n) {
    require(n >= 7 && n % 2 == 1, "moebius_strip: odd n >= 7");
    Graph g;
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, (i + 2) % n);
    }
    return g;
}

Graph torus(int m, int n) {
    require(m >= 4 && n >= 4, "torus: m,n >= 4");
    auto id = [&](int i, int j) { return ((i % m) + m) % m * n + ((j % n) + n) % n; };
    Graph g;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            g.add_edge(id(i, j), id(i + 1, j));
            g.add_edge(id(i, j), id(i, j + 1));
            g.add_edge(id(i, j), id(i + 1, j + 1));
        }
    return g;
}

Graph klein_bottle(int m, int n) {
    require(m >= 4 && n >= 4, "klein_bottle: m,n >= 4");
    auto id = [&](int i, int j) { return ((i % m) + m) % m * n + j; };
    Graph g;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            g.add_edge(id(i, j), id(i + 1, j));
            if (j + 1 < n) {
                g.add_edge(id(i, j), id(i, j + 1));
                g.add_edge(id(i, j), id(i + 1, j + 1));
            } else {  // orientation-reversing vertical gluing (i, n) ~ (-i, 0)
                g.add_edge(id(i, j), id(-i, 0));
                g.add_edge(id(i, j), id(-i - 1, 0));
            }
        }
    return g;
}

Graph projective_plane() {
    // hemi-icosahedron: icosahedron faces identified under the antipodal map
    Complex hemi;
    hemi.facets = {{0, 1, 2}, {0, 1, 5}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
                   {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
    return barycentric_refinement_of(hemi).graph;
}

Graph annulus(int k) {
    require(k >= 4, "annulus: k >= 4");
    Graph g;
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        g.add_edge(i, j);          // inner ring 0..k-1
        g.add_edge(k + i, k + j);  // outer ring k..2k-1
        g.add_edge(i, k + i);
        g.add_edge(j, k + i);      // diagonal
    }
    return g;
}

Graph random_refined_sphere(int d, int steps, std::uint64_t seed) {
    require(d >= 1 && steps >= 0, "random_refined_sphere: d >= 1, steps >= 0");
    Graph g = cross_polytope(d);
    std::mt19937_64 rng(seed);
    for (int s = 0; s < steps; ++s) {
        auto es = g.edges();
        std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
        g = edge_refinement(g, es[pick(rng)]);
    }
    return g;
}

std::vector<Fixture> corpus() {
    std::vector<Fixture> out;
    auto add = [&](std::string name, Graph g, Tag t, int d, Ham h) {
        out.push_back({std::move(name), std::move(g), t, d, h});
    };
    add("cyclic(3)", cyclic(3), Tag::SimplexGraph, 2, Ham::Yes);
    add("cyclic(5)", cyclic(5), Tag::Sphere, 1, Ham::Yes);
    add("cyclic(8)", cyclic(8), Tag::Sphere, 1, Ham::Yes);
    add("wheel(4)", wheel(4), Tag::Ball, 2, Ham::Yes);
    add("wheel(5)", wheel(5), Tag::Ball, 2, Ham::Yes);
    add("wheel(6)", wheel(6), Tag::Ball, 2, Ham::Yes);
    add("simplex(2)", simplex(2), Tag::SimplexGraph, 2, Ham::Yes);
    add("simplex(3)", simplex(3), Tag::SimplexGraph, 3, Ham::Yes);
    add("simplex(4)", simplex(4), Tag::SimplexGraph, 4, Ham::Yes);
    add("cross_polytope(1)", cross_polytope(1), Tag::Sphere, 1, Ham::Yes);
    add("cross_polytope(2)", cross_polytope(2), Tag::Sphere, 2, Ham::Yes);
    add("cross_polytope(3)", cross_polytope(3), Tag::Sphere, 3, Ham::Yes);
    add("cross_polytope(4)", cross_polytope(4), Tag::Sphere, 4, Ham::Yes);
    add("icosahedron", icosahedron(), Tag::Sphere, 2, Ham::Yes);
    add("avici(1)", avici(1), Tag::Ball, 1, Ham::No);  // path graph
    add("avici(2)", avici(2), Tag::GeneralizedDGraph, 2, Ham::Yes);
    add("avici(3)", avici(3), Tag::GeneralizedDGraph, 3, Ham::Yes);
    add("avici(4)", avici(4), Tag::GeneralizedDGraph, 4, Ham::Yes);
    add("goldner_harary(3)", goldner_harary(3), Tag::Other, -2, Ham::No);
    add("goldner_harary(4)", goldner_harary(4), Tag::Other, -2, Ham::No);
    add("birkhoff_diamond", birkhoff_diamond(), Tag::Ball, 2, Ham::Yes);
    add("stellated_square", stellated_square(), Tag::Other, -2, Ham::No);
    add("windmill", windmill(), Tag::Other, -2, Ham::No);
    add("stellated_octahedron(solid)", stellated_octahedron(true), Tag::Other, -2, Ham::No);
    add("stellated_octahedron(hollow)", stellated_octahedron(false), Tag::Other, -2, Ham::No);
    add("prism_graph(3)", prism_graph(3), Tag::GeneralizedDGraph, 3, Ham::Yes);
    add("prism_graph(4)", prism_graph(4), Tag::GeneralizedDGraph, 4, Ham::Yes);
    add("moebius_strip(7)", moebius_strip(7), Tag::DGraphWithBoundary, 2, Ham::Yes);
    add("torus(4,4)", torus(4, 4), Tag::ClosedDGraph, 2, Ham::Yes);
    add("projective_plane", projective_plane(), Tag::ClosedDGraph, 2, Ham::Yes);
    add("klein_bottle(4,4)", klein_bottle(4, 4), Tag::ClosedDGraph, 2, Ham::Yes);
    add("annulus(6)", annulus(6), Tag::DGraphWithBoundary, 2, Ham::Yes);
    return out;
}

Graph by_name(const std::string& name, const std::vector<int>& p, std::uint64_t seed) {
    auto argc = p.size();
    auto need = [&](std::size_t n) {
        if (argc != n)
            throw std::invalid_argument("generator " + name + " expects " + std::to_string(n) +
                                        " parameter(s)");
    };
    if (name == "cyclic") { need(1); return cyclic(p[0]); }
    if (name == "wheel") { need(1); return wheel(p[0]); }
    if (name == "simplex") { need(1); return simplex(p[0]); }
    if (name == "cross_polytope") { need(1); return cross_polytope(p[0]); }
    if (name == "icosahedron") { need(0); return icosahedron(); }
    if (name == "avici") { need(1); return avici(p[0]); }
    if (name == "goldner_harary") { need(1); return goldner_harary(p[0]); }
    if (name == "birkhoff_diamond") { need(0); return birkhoff_diamond(); }
    if (name == "stellated_square") { need(0); return stellated_square(); }
    if (name == "windmill") { need(0); return windmill(); }
    if (name == "stellated_octahedron") { need(1); return stellated_octahedron(p[0] != 0); }
    if (name == "prism_graph") { need(1); return prism_graph(p[0]); }
    if (name == "moebius_strip") { return argc == 0 ? moebius_strip() : moebius_strip(p[0]); }
    if (name == "torus") { need(2); return torus(p[0], p[1]); }
    if (name == "projective_plane") { need(0); return projective_plane(); }
    if (name == "klein_bottle") { return argc == 0 ? klein_bottle() : (need(2), klein_bottle(p[0], p[1])); }
    if (name == "annulus") { need(1); return annulus(p[0]); }
    if (name == "random_refined_sphere") { need(2); return random_refined_sphere(p[0], p[1], seed); }
    throw std::invalid_argument("unknown generator: " + name);
}

std::vector<std::string> generator_names() {
    return {"cyclic", "wheel", "simplex", "cross_polytope", "icosahedron", "avici",
            "goldner_harary", "birkhoff_diamond", "stellated_square", "windmill",
            "stellated_octahedron", "prism_graph", "moebius_strip", "torus",
            "projective_plane", "klein_bottle", "annulus", "random_refined_sphere"};
}

}  // namespace dgraph::zoo
