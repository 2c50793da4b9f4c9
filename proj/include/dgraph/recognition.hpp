#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgraph/graph.hpp"

namespace dgraph {

enum class Tag {
    MinusOneSphere,
    Sphere,
    Ball,
    ClosedDGraph,
    DGraphWithBoundary,
    GeneralizedDGraph,
    SimplexGraph,
    Contractible,
    Other,
};

const char* tag_name(Tag t);

struct TagDim {
    Tag tag;
    int dim;  // -1 for the empty sphere; ignored for Contractible/Other
    bool operator==(const TagDim& o) const { return tag == o.tag && dim == o.dim; }
};

// Witness that a graph collapses to K_1: vertices in removal order. At each
// step the removed vertex has a contractible unit sphere in the current graph.
struct CollapseSequence {
    std::vector<VertexId> removed;
};

struct ShellingOrder {
    std::vector<Simplex> facets;
};

struct Classification {
    Tag tag = Tag::Other;
    int dimension = -2;               // of the reported tag; -2 when n/a
    std::vector<TagDim> all_tags;     // every class the graph belongs to
    std::string reason;               // populated for Other

    bool has(Tag t) const;
    std::optional<int> dim_of(Tag t) const;
};

// Memoization switches. The default context is thread-local; passing nullptr
// to the functions below uses it.
struct RecognitionOptions {
    bool memoize = true;
    bool exact_contractibility = false;  // backtrack over collapse choices
};

namespace detail {
struct CacheEntry {
    Graph rep;  // exact-isomorphism disambiguation within a key bucket
    std::optional<std::optional<int>> sphere_dim;
    std::optional<std::optional<int>> ball_dim;  // K_1-as-0-ball variant
    std::optional<bool> contractible_greedy;
    std::optional<bool> contractible_exact;
    std::optional<std::optional<int>> linear_shellable;
};
}  // namespace detail

// Memo cache keyed by canonical_key with exact-isomorphism disambiguation.
class RecognitionContext {
public:
    explicit RecognitionContext(RecognitionOptions o) : opts(o) {}
    RecognitionOptions opts;

    detail::CacheEntry* find(const Graph& g, const std::string& key);
    detail::CacheEntry* insert(const Graph& g, const std::string& key);

private:
    std::map<std::string, std::vector<detail::CacheEntry>> buckets_;
};

RecognitionContext& default_context();
RecognitionContext make_context(RecognitionOptions opts);

// --- operations ---------------------------------------------------------------

// Collapse certificate, or nullopt. Greedy by default (ascending degree, first
// success); exact backtracking when the context asks for it.
std::optional<CollapseSequence> is_contractible(const Graph& g, RecognitionContext* ctx = nullptr);

// Validates a collapse certificate by replaying it.
bool replay_collapse(const Graph& g, const CollapseSequence& seq, RecognitionContext* ctx = nullptr);

// d when g is a d-sphere by the recursive definition (empty graph -> -1).
std::optional<int> sphere_dimension(const Graph& g, RecognitionContext* ctx = nullptr);

// d when g is a d-ball (a d-sphere minus one vertex), via the local
// characterization. Complete graphs report nullopt; see classify_dgraph.
std::optional<int> is_ball(const Graph& g, RecognitionContext* ctx = nullptr);

Classification classify_dgraph(const Graph& g, RecognitionContext* ctx = nullptr);

// Constructive shelling for a recognized d-sphere or d-ball; throws otherwise.
ShellingOrder shelling_for_sphere_or_ball(const Graph& g, RecognitionContext* ctx = nullptr);

// Shelling condition at every step; throws when order is not a permutation of
// the facets.
bool verify_shelling(const Complex& c, const ShellingOrder& order);

// --- internals shared with other modules --------------------------------------
namespace detail {

// K_1 counts as the 0-ball here (unit spheres of path endpoints need it).
std::optional<int> ball_dimension_allowing_point(const Graph& g, RecognitionContext* ctx);

// k when the Whitney complex is pure k-dimensional, shellable, and its dual
// graph is a path (a linear shellable complex; single facet counts).
std::optional<int> linear_shellable_dimension(const Graph& g, RecognitionContext* ctx);

// Dual-path facet order of a linear shellable complex (used by the
// path-shellable Hamiltonian route).
std::optional<std::vector<Simplex>> dual_path_order(const Complex& c);

bool shellable_complex_search(const Complex& c, std::vector<Simplex>* order_out);

}  // namespace detail

}  // namespace dgraph
