#pragma once

#include <map>

#include "dgraph/graph.hpp"

namespace dgraph {

// Disjoint union plus all cross edges. When vertex ids clash, g2 is renumbered
// above g1's maximum id (original relative order kept).
Graph join(const Graph& g1, const Graph& g2);

// join with K_1; the apex id is max(g)+1 (0 for the empty graph).
Graph cone(const Graph& g);

// join with two isolated vertices.
Graph suspension(const Graph& g);

struct Refinement {
    Graph graph;
    // new vertex id -> simplex of the input it stands for
    std::map<VertexId, Simplex> carrier;
};

// Graph on all simplices of the Whitney complex, edges by strict containment.
// Ids are ordinals of the (dimension, lexicographic)-sorted simplex list.
Refinement barycentric_refinement(const Graph& g);

// Same construction for an explicit facet list (complexes that are not
// Whitney complexes of their skeleton).
Refinement barycentric_refinement_of(const Complex& c);

// Remove edge (a,b); add a new vertex adjacent to a, b and S(a) ∩ S(b).
// New vertex id is max(g)+1.
Graph edge_refinement(const Graph& g, Edge e);

// New vertex adjacent to exactly the vertices of a facet; throws when f is
// not a facet of the Whitney complex.
Graph stellate_facet(const Graph& g, const Simplex& f);

// Glue g2 onto g1 identifying the simplex face2 (in g2) with face1 (in g1)
// pointwise; remaining g2 vertices are renumbered above g1's maximum id.
Graph glue_along(const Graph& g1, const Graph& g2,
                 const Simplex& face1, const Simplex& face2);

}  // namespace dgraph
