#pragma once

#include <cstdint>
#include <string>

#include "dgraph/graph.hpp"

namespace dgraph {

// Isomorphism-invariant key: iterated color refinement combined with the
// connected-component profile, serialized to bytes. Non-isomorphic graphs can
// collide (regular pairs), so memo caches pair this key with an exact
// isomorphism check.
std::string canonical_key(const Graph& g);

// Exact isomorphism test: color-refinement classes prune a backtracking
// vertex-map search.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace dgraph
