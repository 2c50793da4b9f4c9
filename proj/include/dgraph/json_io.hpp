#pragma once

#include <string>

#include "dgraph/constructions.hpp"
#include "dgraph/hamiltonian.hpp"
#include "dgraph/levelset.hpp"
#include "dgraph/recognition.hpp"

namespace dgraph::io {

// {"vertices":[...],"edges":[[u,v],...]}; vertices sorted, edges
// lexicographically sorted on output.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

// {"values":{"0":3,"1":"1/2",...}}
std::string function_to_json(const VertexFunction& f);
VertexFunction function_from_json(const std::string& text);
VertexFunction load_function(const std::string& path);

std::string cycle_to_json(const Cycle& c);
Cycle cycle_from_json(const std::string& text);

std::string classification_to_json(const Classification& c);

std::string trace_to_json(const ConstructionTrace& t);
ConstructionTrace trace_from_json(const std::string& text);

std::string level_surface_to_json(const LevelSurface& s);

std::string refinement_carrier_to_json(const Refinement& r);

// DOT export; cycle edges highlighted when a cycle is supplied.
std::string graph_to_dot(const Graph& g, const Cycle* cycle = nullptr);

}  // namespace dgraph::io
