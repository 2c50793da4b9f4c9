#pragma once

#include <cstdint>
#include <set>
#include <variant>

#include "dgraph/graph.hpp"
#include "dgraph/levelset.hpp"
#include "dgraph/recognition.hpp"

namespace dgraph {

// Cyclic vertex sequence, normalized to start at the smallest vertex and run
// toward its smaller cycle neighbor.
struct Cycle {
    std::vector<VertexId> vertices;
    bool operator==(const Cycle& o) const { return vertices == o.vertices; }
};

Cycle normalize_cycle(std::vector<VertexId> vs);

// --- construction trace ---------------------------------------------------------

struct CarveCavityStep {
    VertexId center;
    std::vector<VertexId> sphere;
};
struct AbsorbBoxedPointStep {
    VertexId point;     // the boxed interior vertex being exposed
    VertexId absorbed;  // the sphere vertex pulled into the hole
};
struct DrillHoleStep {
    Edge removed_edge;
    std::vector<Simplex> removed_simplices;
};
struct BoundaryCycleStep {
    int component;
    std::vector<VertexId> cycle;
};
struct BridgeStep {
    PrismBridge bridge;
};
struct DetourStep {
    VertexId vertex;
    Edge replaced;
};

using TraceStep = std::variant<CarveCavityStep, AbsorbBoxedPointStep, DrillHoleStep,
                               BoundaryCycleStep, BridgeStep, DetourStep>;

struct ConstructionTrace {
    std::vector<TraceStep> steps;
};

// Folds the cycle-shaping steps over the input; returns the reconstructed
// cycle. Throws when the trace is inconsistent with g.
Cycle replay_trace(const Graph& g, const ConstructionTrace& trace);

struct HamiltonianOutput {
    Cycle cycle;
    ConstructionTrace trace;
};

// Raised when the input fails find_hamiltonian's precondition.
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(const std::string& msg, Classification cls)
        : std::invalid_argument(msg), classification(std::move(cls)) {}
    Classification classification;
};

// Raised when no strategy completes a valid construction; carries the last
// partial trace for diagnosis.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& msg, ConstructionTrace partial)
        : std::runtime_error(msg), trace_prefix(std::move(partial)) {}
    ConstructionTrace trace_prefix;
};

// --- verification ---------------------------------------------------------------

bool verify_hamiltonian(const Graph& g, const Cycle& c);

// Every facet must contain a cycle edge; with_boundary additionally requires an
// edge inside every boundary (d-1)-face.
bool verify_strong(const Graph& g, const Cycle& c, bool with_boundary);

// --- construction ---------------------------------------------------------------

// Swiss-cheese construction: cavities around strong interior points, recursive
// boundary cycles joined by prism bridges, then detours to the remaining
// near-boundary interior points. Strongness is asserted per the input class
// (closed: facet-strong; boundary and d >= 3: also boundary-face strong).
HamiltonianOutput find_hamiltonian(const Graph& g);

// Merge two vertex-disjoint cycles across a prism rewiring.
Cycle merge_cycles(const Cycle& c1, const Cycle& c2, const PrismBridge& b);

// Lift: replace a cycle edge inside `facet` by a detour through new_vertex
// (adjacent to exactly the facet).
Cycle facet_extension(const Graph& g, const Cycle& c, VertexId new_vertex, const Simplex& facet);

// Iterated facet_extension along the dual path of a linear shellable complex.
Cycle hamiltonian_for_path_shellable(const Complex& c);

// --- testable sub-steps of the construction --------------------------------------

namespace swiss {

struct Hole {
    std::vector<VertexId> path;    // carved vertices in Hamiltonian-path order
    std::vector<VertexId> sphere;  // current surrounding vertices, sorted
};

struct Strategy {
    int carve_rotation = 0;
    bool most_constrained = false;
    bool reverse_candidates = false;
    std::uint64_t shuffle_seed = 0;
};

struct State {
    Graph input;
    Graph work;
    int dim = 0;
    bool track_boundary_faces = false;
    std::set<VertexId> boundary_vertices;
    std::vector<Hole> holes;
    ConstructionTrace trace;
    Strategy strategy;
};

State init_state(const Graph& g);

// Interior vertex at distance >= 2 from the boundary, preferring distance
// exactly 2; min id breaks ties. nullopt when every interior vertex is within
// distance 1 (for an empty boundary: the smallest vertex).
std::optional<VertexId> find_strong_interior(const Graph& work,
                                             const std::set<VertexId>& boundary);

void carve_cavity(State& st, VertexId x);
void carve_all(State& st);

// The boxed condition for d = 2: an interior vertex whose unit sphere shares
// no edge with the current boundary complex.
std::vector<VertexId> boxed_points(const State& st);

// Grow a hole by one vertex: z must extend some hole's interior path at an
// end. `reason` is the vertex whose exposure motivated the growth (recorded in
// the trace).
bool absorb_vertex(State& st, VertexId reason, VertexId z);
bool absorb_boxed_point(State& st, VertexId boxed);

// d = 2 repair loop: absorb boundary branch vertices and boxed points until
// the boundary complex is a disjoint union of cycles with no boxed interior.
void resolve_boxed_points(State& st);

// Boundary surgery exposing a distance-1 interior point: removes the boundary
// edge separating x from the boundary along with every simplex containing it.
struct DrillResult {
    Graph remaining;
    Edge removed_edge;
    std::vector<Simplex> removed_simplices;
};
DrillResult drill_hole(const Graph& g, VertexId x);

// Replace cycle edge (u,v) by u-x-v, validating adjacency.
Cycle extend_detour(const Graph& g, const Cycle& c, VertexId x, Edge replaced);

// Recursive cycles on the boundary components of g merged with prism bridges;
// covers exactly the boundary vertices.
HamiltonianOutput boundary_cycles_and_bridges(const Graph& g);

}  // namespace swiss

}  // namespace dgraph
