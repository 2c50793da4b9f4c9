#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgraph/graph.hpp"
#include "dgraph/recognition.hpp"

namespace dgraph::zoo {

Graph cyclic(int n);                    // C_n, n >= 3
Graph wheel(int n);                     // hub 0 over rim C_n, n >= 4
Graph simplex(int d);                   // K_{d+1}, d >= 0
Graph cross_polytope(int d);            // d-1 iterated suspensions of C_4, d >= 1
Graph icosahedron();
Graph avici(int d);                     // two K_{d+1} glued along K_d, d >= 1
Graph goldner_harary(int d);            // d in {3,4}
Graph birkhoff_diamond();               // 2-ball, two interior points, boundary C_6
Graph stellated_square();               // wheel W_4 with every rim edge stellated
Graph windmill();                       // join(K_2, 3 K_1)
Graph stellated_octahedron(bool solid); // octahedron (+ center when solid), all faces stellated
Graph prism_graph(int d);               // staircase of d d-simplices, simplex roof and floor
Graph moebius_strip(int n = 7);         // band {i,i+1,i+2} mod n, n odd >= 7
Graph torus(int m, int n);              // diagonal grid on Z_m x Z_n, m,n >= 4
Graph projective_plane();               // barycentric refinement of the hemi-icosahedron
Graph klein_bottle(int m = 4, int n = 4);
Graph annulus(int k);                   // two concentric C_k rings, k >= 4

// cross_polytope(d) followed by `steps` uniformly random edge refinements
Graph random_refined_sphere(int d, int steps, std::uint64_t seed);

enum class Ham { Yes, No, NotApplicable };

struct Fixture {
    std::string name;
    Graph graph;
    Tag expected_tag;
    int expected_dim;  // -2 when not applicable
    Ham expected_hamiltonian;
};

// The full named test corpus with expected classification and Hamiltonicity.
std::vector<Fixture> corpus();

// Generator dispatch for the CLI: name + integer params (+ seed).
Graph by_name(const std::string& name, const std::vector<int>& params, std::uint64_t seed);
std::vector<std::string> generator_names();

}  // namespace dgraph::zoo
