#include "dgraph/recognition.hpp"

#include <cassert>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "dgraph/canonical.hpp"

namespace dgraph {

const char* tag_name(Tag t) {
    switch (t) {
        case Tag::MinusOneSphere: return "MinusOneSphere";
        case Tag::Sphere: return "Sphere";
        case Tag::Ball: return "Ball";
        case Tag::ClosedDGraph: return "ClosedDGraph";
        case Tag::DGraphWithBoundary: return "DGraphWithBoundary";
        case Tag::GeneralizedDGraph: return "GeneralizedDGraph";
        case Tag::SimplexGraph: return "SimplexGraph";
        case Tag::Contractible: return "Contractible";
        case Tag::Other: return "Other";
    }
    return "?";
}

bool Classification::has(Tag t) const {
    for (const auto& td : all_tags)
        if (td.tag == t) return true;
    return false;
}

std::optional<int> Classification::dim_of(Tag t) const {
    for (const auto& td : all_tags)
        if (td.tag == t) return td.dim;
    return std::nullopt;
}

// --- memo cache ----------------------------------------------------------------

using detail::CacheEntry;

CacheEntry* RecognitionContext::find(const Graph& g, const std::string& key) {
    if (!opts.memoize) return nullptr;
    auto it = buckets_.find(key);
    if (it == buckets_.end()) return nullptr;
    for (auto& e : it->second)
        if (isomorphic(e.rep, g)) return &e;
    return nullptr;
}

CacheEntry* RecognitionContext::insert(const Graph& g, const std::string& key) {
    if (!opts.memoize) return nullptr;
    auto& bucket = buckets_[key];
    bucket.push_back(CacheEntry{g, {}, {}, {}, {}, {}});
    return &bucket.back();
}

RecognitionContext& default_context() {
    thread_local RecognitionContext ctx{RecognitionOptions{}};
    return ctx;
}

RecognitionContext make_context(RecognitionOptions opts) { return RecognitionContext(opts); }

namespace {

RecognitionContext& ctx_or_default(RecognitionContext* ctx) {
    return ctx ? *ctx : default_context();
}

// Looking up via canonical_key; entries disambiguated by exact isomorphism.
template <typename Field, typename Compute>
auto memoized(const Graph& g, RecognitionContext& ctx, Field field, Compute compute) {
    if (!ctx.opts.memoize) return compute();
    std::string key = canonical_key(g);
    CacheEntry* e = ctx.find(g, key);
    if (e && (e->*field).has_value()) return *(e->*field);
    auto value = compute();
    // recompute lookup: compute() may have grown the bucket vector
    e = ctx.find(g, key);
    if (!e) e = ctx.insert(g, key);
    (e->*field) = value;
    return value;
}

bool contractible_impl(const Graph& g, RecognitionContext& ctx);

// Greedy collapse: repeatedly delete the first vertex (ascending degree, then
// id) whose unit sphere is contractible.
std::optional<std::vector<VertexId>> greedy_collapse(const Graph& g, RecognitionContext& ctx) {
    Graph work = g;
    std::vector<VertexId> seq;
    while (work.vertex_count() > 1) {
        std::vector<VertexId> vs = work.vertices();
        std::stable_sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) {
            return work.degree(a) < work.degree(b);
        });
        bool found = false;
        for (VertexId x : vs) {
            if (contractible_impl(unit_sphere(work, x), ctx)) {
                seq.push_back(x);
                work.remove_vertex(x);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return work.vertex_count() == 1 ? std::optional(seq) : std::nullopt;
}

// Exact collapsibility: backtracking over removal choices.
bool exact_collapsible(const Graph& g, RecognitionContext& ctx,
                       std::vector<VertexId>* seq_out) {
    if (g.vertex_count() == 1) return true;
    if (g.vertex_count() == 0) return false;
    std::string key = canonical_key(g);
    CacheEntry* e = ctx.find(g, key);
    if (e && e->contractible_exact.has_value() && !*e->contractible_exact) return false;
    if (e && e->contractible_exact.has_value() && *e->contractible_exact && !seq_out) return true;

    std::vector<VertexId> vs = g.vertices();
    std::stable_sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) {
        return g.degree(a) < g.degree(b);
    });
    for (VertexId x : vs) {
        if (!contractible_impl(unit_sphere(g, x), ctx)) continue;
        Graph rest = g;
        rest.remove_vertex(x);
        std::vector<VertexId> tail;
        if (exact_collapsible(rest, ctx, seq_out ? &tail : nullptr)) {
            if (seq_out) {
                seq_out->push_back(x);
                seq_out->insert(seq_out->end(), tail.begin(), tail.end());
            }
            e = ctx.find(g, key);
            if (!e) e = ctx.insert(g, key);
            if (e) e->contractible_exact = true;
            return true;
        }
    }
    e = ctx.find(g, key);
    if (!e) e = ctx.insert(g, key);
    if (e) e->contractible_exact = false;
    return false;
}

bool contractible_impl(const Graph& g, RecognitionContext& ctx) {
    if (g.vertex_count() == 0) return false;
    if (g.vertex_count() == 1) return true;
    if (ctx.opts.exact_contractibility)
        return memoized(g, ctx, &CacheEntry::contractible_exact,
                        [&] { return exact_collapsible(g, ctx, nullptr); });
    return memoized(g, ctx, &CacheEntry::contractible_greedy,
                    [&] { return greedy_collapse(g, ctx).has_value(); });
}

std::optional<int> sphere_dim_impl(const Graph& g, RecognitionContext& ctx);

std::optional<int> sphere_dim_uncached(const Graph& g, RecognitionContext& ctx) {
    if (g.vertex_count() == 0) return -1;
    std::optional<int> k;
    for (VertexId v : g.vertices()) {
        auto sd = sphere_dim_impl(unit_sphere(g, v), ctx);
        if (!sd) return std::nullopt;
        if (k && *k != *sd) return std::nullopt;
        k = sd;
    }
    for (VertexId v : g.vertices()) {
        Graph rest = g;
        rest.remove_vertex(v);
        if (contractible_impl(rest, ctx)) return *k + 1;
    }
    return std::nullopt;
}

std::optional<int> sphere_dim_impl(const Graph& g, RecognitionContext& ctx) {
    if (g.vertex_count() == 0) return -1;
    return memoized(g, ctx, &CacheEntry::sphere_dim,
                    [&] { return sphere_dim_uncached(g, ctx); });
}

std::optional<int> ball_dim_impl(const Graph& g, RecognitionContext& ctx);

std::optional<int> ball_dim_uncached(const Graph& g, RecognitionContext& ctx) {
    if (g.vertex_count() == 0) return std::nullopt;
    if (g.vertex_count() == 1) return 0;
    if (is_complete(g)) return std::nullopt;  // K_{d+1} is a simplex, not a ball
    if (!is_connected(g)) return std::nullopt;
    if (!contractible_impl(g, ctx)) return std::nullopt;
    Complex c = whitney_complex(g);
    if (!c.pure()) return std::nullopt;
    const int d = c.dimension();
    bool has_boundary_vertex = false;
    for (VertexId v : g.vertices()) {
        Graph s = unit_sphere(g, v);
        auto sd = sphere_dim_impl(s, ctx);
        if (sd && *sd == d - 1) continue;  // interior vertex
        auto bd = ball_dim_impl(s, ctx);
        if (bd && *bd == d - 1) {
            has_boundary_vertex = true;
            continue;
        }
        return std::nullopt;
    }
    if (!has_boundary_vertex) return std::nullopt;
    auto bd = boundary_of(c);
    auto bsd = sphere_dim_impl(bd.graph, ctx);
    if (!bsd || *bsd != d - 1) return std::nullopt;
    return d;
}

std::optional<int> ball_dim_impl(const Graph& g, RecognitionContext& ctx) {
    if (g.vertex_count() <= 1) return g.vertex_count() == 1 ? std::optional(0) : std::nullopt;
    return memoized(g, ctx, &CacheEntry::ball_dim,
                    [&] { return ball_dim_uncached(g, ctx); });
}

// --- shellability --------------------------------------------------------------

Complex intersection_complex(const Simplex& f, const std::vector<Simplex>& prior) {
    // facets of f ∩ (union of prior): maximal nonempty intersections
    std::vector<Simplex> inters;
    for (const auto& p : prior) {
        Simplex s;
        std::set_intersection(f.begin(), f.end(), p.begin(), p.end(), std::back_inserter(s));
        if (!s.empty()) inters.push_back(std::move(s));
    }
    std::sort(inters.begin(), inters.end());
    inters.erase(std::unique(inters.begin(), inters.end()), inters.end());
    Complex out;
    for (std::size_t i = 0; i < inters.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < inters.size(); ++j) {
            if (i == j || inters[i].size() > inters[j].size()) continue;
            if (std::includes(inters[j].begin(), inters[j].end(), inters[i].begin(), inters[i].end()) &&
                inters[i] != inters[j]) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.facets.push_back(inters[i]);
    }
    std::sort(out.facets.begin(), out.facets.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool shellable_search_impl(const Complex& c, std::vector<Simplex>* order_out,
                           std::map<std::string, bool>* memo, long long* budget);

std::string complex_memo_key(const Complex& c) {
    // relabel vertices by first occurrence; serialize facets
    std::map<VertexId, int> relab;
    std::string key;
    for (const auto& f : c.facets) {
        for (VertexId v : f) relab.emplace(v, static_cast<int>(relab.size()));
    }
    for (const auto& f : c.facets) {
        std::vector<int> r;
        for (VertexId v : f) r.push_back(relab[v]);
        std::sort(r.begin(), r.end());
        for (int x : r) key += std::to_string(x) + ".";
        key += "/";
    }
    return key;
}

// Step condition: H_k pure of dimension exactly d-1 and recursively shellable.
bool valid_shelling_step(const Simplex& f, const std::vector<Simplex>& prior,
                         std::map<std::string, bool>* memo, long long* budget) {
    const int d = simplex_dim(f);
    Complex h = intersection_complex(f, prior);
    if (d == 0) return h.empty();  // (-1)-dimensional intersection
    if (h.empty() || !h.pure() || h.dimension() != d - 1) return false;
    return shellable_search_impl(h, nullptr, memo, budget);
}

bool shellable_search_impl(const Complex& c, std::vector<Simplex>* order_out,
                           std::map<std::string, bool>* memo, long long* budget) {
    if (c.facets.empty()) return false;
    if (c.facets.size() == 1) {
        if (order_out) *order_out = c.facets;
        return true;
    }
    std::string key = memo ? complex_memo_key(c) : std::string();
    if (memo && !order_out) {
        auto it = memo->find(key);
        if (it != memo->end()) return it->second;
    }
    const std::size_t n = c.facets.size();
    std::vector<Simplex> order;
    std::vector<bool> used(n, false);
    std::function<bool()> rec = [&]() -> bool {
        if (order.size() == n) return true;
        if (budget && --*budget < 0) return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            if (!order.empty() && !valid_shelling_step(c.facets[i], order, memo, budget)) continue;
            used[i] = true;
            order.push_back(c.facets[i]);
            if (rec()) return true;
            order.pop_back();
            used[i] = false;
        }
        return false;
    };
    bool ok = rec();
    if (ok && order_out) *order_out = order;
    if (memo) (*memo)[key] = ok;
    return ok;
}

thread_local std::map<std::string, bool> g_shell_memo;

}  // namespace

namespace detail {

std::optional<int> ball_dimension_allowing_point(const Graph& g, RecognitionContext* ctx) {
    return ball_dim_impl(g, ctx_or_default(ctx));
}

std::optional<std::vector<Simplex>> dual_path_order(const Complex& c) {
    if (c.facets.empty() || !c.pure()) return std::nullopt;
    if (c.facets.size() == 1) return c.facets;
    Graph dual = dual_graph_of(c);
    if (!is_connected(dual)) return std::nullopt;
    std::vector<VertexId> ends;
    for (VertexId v : dual.vertices()) {
        if (dual.degree(v) > 2) return std::nullopt;
        if (dual.degree(v) <= 1) ends.push_back(v);
    }
    if (ends.size() != 2) return std::nullopt;
    // walk from the end whose facet is lexicographically smaller
    VertexId start = ends[0];
    if (c.facets[ends[1]] < c.facets[ends[0]]) start = ends[1];
    std::vector<Simplex> order;
    VertexId prev = -1, cur = start;
    for (std::size_t i = 0; i < c.facets.size(); ++i) {
        order.push_back(c.facets[cur]);
        VertexId next = -1;
        for (VertexId u : dual.neighbors(cur))
            if (u != prev) next = u;
        prev = cur;
        cur = next;
        if (cur == -1) break;
    }
    if (order.size() != c.facets.size()) return std::nullopt;
    return order;
}

std::optional<int> linear_shellable_dimension(const Graph& g, RecognitionContext* ctx) {
    RecognitionContext& c = ctx_or_default(ctx);
    return memoized(g, c, &CacheEntry::linear_shellable, [&]() -> std::optional<int> {
        Complex w = whitney_complex(g);
        if (w.empty() || !w.pure()) return std::nullopt;
        auto order = dual_path_order(w);
        if (!order) return std::nullopt;
        if (!verify_shelling(w, ShellingOrder{*order})) return std::nullopt;
        return w.dimension();
    });
}

bool shellable_complex_search(const Complex& c, std::vector<Simplex>* order_out) {
    long long budget = 1000000;
    return shellable_search_impl(c, order_out, &g_shell_memo, &budget);
}

}  // namespace detail

// --- public operations -----------------------------------------------------------

std::optional<CollapseSequence> is_contractible(const Graph& g, RecognitionContext* ctx) {
    RecognitionContext& c = ctx_or_default(ctx);
    if (g.vertex_count() == 0) return std::nullopt;
    if (g.vertex_count() == 1) return CollapseSequence{};
    if (c.opts.exact_contractibility) {
        std::vector<VertexId> seq;
        if (!exact_collapsible(g, c, &seq)) return std::nullopt;
        return CollapseSequence{std::move(seq)};
    }
    if (!contractible_impl(g, c)) return std::nullopt;
    auto seq = greedy_collapse(g, c);
    if (!seq) return std::nullopt;  // cache said yes but greedy disagreed: impossible by construction
    return CollapseSequence{std::move(*seq)};
}

bool replay_collapse(const Graph& g, const CollapseSequence& seq, RecognitionContext* ctx) {
    RecognitionContext& c = ctx_or_default(ctx);
    Graph work = g;
    for (VertexId x : seq.removed) {
        if (!work.has_vertex(x)) return false;
        if (!contractible_impl(unit_sphere(work, x), c)) return false;
        work.remove_vertex(x);
    }
    return work.vertex_count() == 1;
}

std::optional<int> sphere_dimension(const Graph& g, RecognitionContext* ctx) {
    return sphere_dim_impl(g, ctx_or_default(ctx));
}

std::optional<int> is_ball(const Graph& g, RecognitionContext* ctx) {
    if (is_complete(g)) return std::nullopt;  // SimplexGraph, by design decision
    return ball_dim_impl(g, ctx_or_default(ctx));
}

namespace {

struct UnitSphereClass {
    std::optional<int> sphere;
    std::optional<int> ball;      // K_1 counts as 0-ball
    std::optional<int> linshell;  // includes simplices
    std::size_t size = 0;
};

UnitSphereClass classify_unit_sphere(const Graph& s, RecognitionContext& ctx) {
    UnitSphereClass u;
    u.size = s.vertex_count();
    u.sphere = sphere_dim_impl(s, ctx);
    u.ball = ball_dim_impl(s, ctx);
    u.linshell = detail::linear_shellable_dimension(s, &ctx);
    return u;
}

// Every interior vertex at distance 1 from the boundary must sit in a triangle
// whose opposite edge lies inside a boundary face.
bool accessibility_holds(const Graph& g, const std::vector<VertexId>& interior,
                         const BoundaryInfo& bd) {
    if (bd.vertices.empty()) return true;
    std::set<VertexId> bset(bd.vertices.begin(), bd.vertices.end());
    std::set<Edge> bedges;
    for (const auto& face : bd.faces)
        for (std::size_t i = 0; i < face.size(); ++i)
            for (std::size_t j = i + 1; j < face.size(); ++j)
                bedges.insert({face[i], face[j]});
    for (VertexId x : interior) {
        auto dist = graph_distance(g, bset, x);
        if (!dist || *dist != 1) continue;
        bool ok = false;
        const auto& nb = g.neighbors(x);
        for (std::size_t i = 0; i < nb.size() && !ok; ++i)
            for (std::size_t j = i + 1; j < nb.size() && !ok; ++j)
                if (g.has_edge(nb[i], nb[j]) && bedges.count(make_edge(nb[i], nb[j]))) ok = true;
        if (!ok) return false;
    }
    return true;
}

}  // namespace

Classification classify_dgraph(const Graph& g, RecognitionContext* ctx) {
    RecognitionContext& c = ctx_or_default(ctx);
    Classification out;

    if (g.vertex_count() == 0) {
        out.tag = Tag::MinusOneSphere;
        out.dimension = -1;
        out.all_tags = {{Tag::MinusOneSphere, -1}, {Tag::Sphere, -1}};
        return out;
    }

    bool contractible = contractible_impl(g, c);
    if (contractible) out.all_tags.push_back({Tag::Contractible, -2});

    if (is_complete(g)) {
        const int d = static_cast<int>(g.vertex_count()) - 1;
        out.tag = Tag::SimplexGraph;
        out.dimension = d;
        out.all_tags.push_back({Tag::SimplexGraph, d});
        if (d >= 1) out.all_tags.push_back({Tag::GeneralizedDGraph, d});
        return out;
    }

    Complex w = whitney_complex(g);
    std::string why;
    if (w.pure()) {
        const int d = w.dimension();
        bool all_spheres = true, sphere_or_ball = true, gen_slot = true;
        bool any_ball = false;
        std::vector<VertexId> interior;
        VertexId bad_vertex = -1;
        for (VertexId v : g.vertices()) {
            UnitSphereClass u = classify_unit_sphere(unit_sphere(g, v), c);
            const bool isph = u.sphere && *u.sphere == d - 1;
            const bool iball = u.ball && *u.ball == d - 1;
            const bool ilin = u.linshell && *u.linshell == d - 1;
            if (isph) interior.push_back(v);
            if (!isph) all_spheres = false;
            if (!isph && !iball) sphere_or_ball = false;
            else if (iball) any_ball = true;
            if (!isph && !iball && !ilin) {
                gen_slot = false;
                if (bad_vertex < 0) bad_vertex = v;
            }
        }
        BoundaryInfo bd = boundary_of(w);
        if (all_spheres) {
            out.all_tags.push_back({Tag::ClosedDGraph, d});
            out.all_tags.push_back({Tag::GeneralizedDGraph, d});
            auto sd = sphere_dim_impl(g, c);
            if (sd) out.all_tags.push_back({Tag::Sphere, *sd});
        } else if (sphere_or_ball && any_ball) {
            out.all_tags.push_back({Tag::DGraphWithBoundary, d});
            out.all_tags.push_back({Tag::GeneralizedDGraph, d});
            auto bdim = is_ball(g, &c);
            if (bdim) out.all_tags.push_back({Tag::Ball, *bdim});
        } else if (gen_slot) {
            if (accessibility_holds(g, interior, bd)) {
                out.all_tags.push_back({Tag::GeneralizedDGraph, d});
            } else {
                why = "interior vertex near the boundary has no triangle with a boundary edge";
            }
        } else {
            why = "unit sphere at vertex " + std::to_string(bad_vertex) +
                  " is not a " + std::to_string(d - 1) +
                  "-sphere, -ball, -simplex, or linear shellable complex";
        }
    } else {
        why = "Whitney complex is not pure";
    }

    static constexpr Tag precedence[] = {Tag::Sphere, Tag::Ball, Tag::ClosedDGraph,
                                         Tag::DGraphWithBoundary, Tag::GeneralizedDGraph};
    for (Tag t : precedence) {
        if (auto d = out.dim_of(t)) {
            out.tag = t;
            out.dimension = *d;
            return out;
        }
    }
    out.tag = Tag::Other;
    out.dimension = -2;
    if (why.empty()) why = "no manifold class applies";
    if (contractible) why += " (graph is contractible)";
    out.reason = why;
    return out;
}

// --- constructive shelling ---------------------------------------------------

namespace {

std::vector<Simplex> shell_pure_contractible(const Graph& g, RecognitionContext& ctx, int depth);

// Cone extensions of a shelling of S(x) with apex x.
std::vector<Simplex> cone_shelling(VertexId x, const std::vector<Simplex>& sphere_order) {
    std::vector<Simplex> out;
    out.reserve(sphere_order.size());
    for (const auto& y : sphere_order) {
        Simplex f = y;
        f.insert(std::lower_bound(f.begin(), f.end(), x), x);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Simplex> shell_sphere(const Graph& g, RecognitionContext& ctx, int depth);

// Shell a pure contractible graph by reversing a collapse: shell G-x, then
// append the cone facets over a shelling of S(x).
std::vector<Simplex> shell_pure_contractible(const Graph& g, RecognitionContext& ctx, int depth) {
    Complex w = whitney_complex(g);
    if (w.facets.size() == 1) return w.facets;
    if (depth > 64) throw std::runtime_error("shelling recursion too deep");
    const int d = w.dimension();
    std::vector<VertexId> vs = g.vertices();
    std::stable_sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) {
        return g.degree(a) < g.degree(b);
    });
    for (VertexId x : vs) {
        Graph s = unit_sphere(g, x);
        if (!contractible_impl(s, ctx)) continue;
        Graph rest = g;
        rest.remove_vertex(x);
        Complex wr = whitney_complex(rest);
        if (!wr.pure() || wr.dimension() != d) continue;
        if (!contractible_impl(rest, ctx)) continue;
        std::vector<Simplex> head, sph;
        try {
            head = shell_pure_contractible(rest, ctx, depth + 1);
            sph = shell_pure_contractible(s, ctx, depth + 1);
        } catch (const std::runtime_error&) {
            continue;
        }
        std::vector<Simplex> order = head;
        for (auto& f : cone_shelling(x, sph)) order.push_back(std::move(f));
        if (verify_shelling(w, ShellingOrder{order})) return order;
    }
    throw std::runtime_error("no shellable collapse order found");
}

std::vector<Simplex> shell_sphere(const Graph& g, RecognitionContext& ctx, int depth) {
    // 0-sphere base: two isolated vertices
    Complex w = whitney_complex(g);
    if (w.dimension() == 0) return w.facets;
    for (VertexId v : g.vertices()) {
        Graph rest = g;
        rest.remove_vertex(v);
        if (!contractible_impl(rest, ctx)) continue;
        std::vector<Simplex> head, sph;
        try {
            head = shell_pure_contractible(rest, ctx, depth + 1);
            Graph s = unit_sphere(g, v);
            auto sd = sphere_dim_impl(s, ctx);
            sph = sd && *sd >= 0 ? shell_sphere(s, ctx, depth + 1)
                                 : std::vector<Simplex>{};
            if (sph.empty() && s.vertex_count() > 0) continue;
        } catch (const std::runtime_error&) {
            continue;
        }
        std::vector<Simplex> order = head;
        for (auto& f : cone_shelling(v, sph)) order.push_back(std::move(f));
        if (verify_shelling(w, ShellingOrder{order})) return order;
    }
    throw std::runtime_error("no shellable puncture vertex found");
}

}  // namespace

ShellingOrder shelling_for_sphere_or_ball(const Graph& g, RecognitionContext* ctx) {
    RecognitionContext& c = ctx_or_default(ctx);
    auto sd = sphere_dim_impl(g, c);
    if (sd && *sd >= 0) return ShellingOrder{shell_sphere(g, c, 0)};
    auto bd = is_ball(g, &c);
    if (bd) return ShellingOrder{shell_pure_contractible(g, c, 0)};
    throw std::invalid_argument("shelling_for_sphere_or_ball: input is neither a d-sphere nor a d-ball");
}

bool verify_shelling(const Complex& c, const ShellingOrder& order) {
    std::vector<Simplex> a = c.facets, b = order.facets;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("verify_shelling: order is not a permutation of the facets");
    std::vector<Simplex> prior;
    long long budget = 1000000;
    for (const auto& f : order.facets) {
        if (!prior.empty() && !valid_shelling_step(f, prior, &g_shell_memo, &budget)) return false;
        prior.push_back(f);
    }
    return true;
}

}  // namespace dgraph
