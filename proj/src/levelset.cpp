#include "dgraph/levelset.hpp"

#include <random>

#include "dgraph/recognition.hpp"

namespace dgraph {

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

bool VertexFunction::locally_injective(const Graph& g) const {
    for (const auto& [u, v] : g.edges())
        if (at(u) == at(v)) return false;
    return true;
}

VertexFunction random_injective_function(const Graph& g, std::uint64_t seed) {
    std::vector<VertexId> vs = g.vertices();
    std::mt19937_64 rng(seed);
    std::vector<long long> vals(vs.size());
    std::iota(vals.begin(), vals.end(), 1);
    std::shuffle(vals.begin(), vals.end(), rng);
    VertexFunction f;
    for (std::size_t i = 0; i < vs.size(); ++i) f.values[vs[i]] = Rational(vals[i]);
    return f;
}

Rational cut_between(const VertexFunction& f, std::size_t gap_index) {
    std::vector<Rational> vals;
    for (const auto& [v, r] : f.values) vals.push_back(r);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (vals.size() < 2) throw std::invalid_argument("cut_between: fewer than two distinct values");
    gap_index %= vals.size() - 1;
    return Rational::midpoint(vals[gap_index], vals[gap_index + 1]);
}

namespace {

void check_cut(const Graph& g, const VertexFunction& f, const Rational& c) {
    for (VertexId v : g.vertices())
        if (f.at(v) == c)
            throw std::invalid_argument("cut level passes through vertex " + std::to_string(v));
}

}  // namespace

LevelSurface level_surface(const Graph& g, const VertexFunction& f, const Rational& c) {
    check_cut(g, f, c);
    std::vector<Simplex> crossing;
    for (const auto& s : all_cliques(g)) {
        bool below = false, above = false;
        for (VertexId v : s) {
            if (f.at(v) < c) below = true;
            else above = true;
        }
        if (below && above) crossing.push_back(s);
    }
    LevelSurface out;
    std::map<Simplex, VertexId> id;
    for (std::size_t i = 0; i < crossing.size(); ++i) {
        id[crossing[i]] = static_cast<VertexId>(i);
        out.carrier[static_cast<VertexId>(i)] = crossing[i];
        out.graph.add_vertex(static_cast<VertexId>(i));
    }
    for (const auto& a : crossing) {
        for (const auto& b : crossing) {
            if (a.size() >= b.size() || a == b) continue;
            if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
                out.graph.add_edge(id[a], id[b]);
        }
    }
    return out;
}

std::pair<Graph, Graph> split(const Graph& g, const VertexFunction& f, const Rational& c) {
    check_cut(g, f, c);
    std::vector<VertexId> below, above;
    for (VertexId v : g.vertices())
        (f.at(v) < c ? below : above).push_back(v);
    return {induced(g, below), induced(g, above)};
}

bool is_smooth(const Graph& g, const VertexFunction& f, const Rational& c) {
    check_cut(g, f, c);
    Complex w = whitney_complex(g);
    if (!w.pure()) throw std::invalid_argument("is_smooth: graph not pure");
    const int d = w.dimension();
    RecognitionContext& ctx = default_context();
    for (VertexId x : g.vertices()) {
        for (int side = 0; side < 2; ++side) {
            std::vector<VertexId> part;
            for (VertexId y : g.neighbors(x)) {
                bool lower = f.at(y) < c;
                if (lower == (side == 0)) part.push_back(y);
            }
            if (part.empty()) continue;
            Graph h = induced(g, part);
            if (is_complete(h)) continue;  // a k-simplex
            auto sd = sphere_dimension(h, &ctx);
            if (sd && *sd == d - 1) continue;
            auto bd = detail::ball_dimension_allowing_point(h, &ctx);
            if (bd && *bd == d - 1) continue;
            return false;
        }
    }
    return true;
}

std::vector<PrismBridge> enumerate_prism_bridges(const Graph& below, const Graph& above,
                                                 const Graph& ambient, const Simplex& face_a) {
    for (VertexId v : face_a)
        if (!below.has_vertex(v))
            throw std::invalid_argument("find_prism_bridge: face_a not in the below part");
    // cross edges out of face_a
    std::vector<Edge> cross;
    std::set<VertexId> targets;
    for (VertexId u : face_a)
        for (VertexId w : ambient.neighbors(u))
            if (above.has_vertex(w)) {
                cross.push_back({u, w});
                targets.insert(w);
            }
    if (cross.empty())
        throw std::invalid_argument("find_prism_bridge: face_a has no cross edges (not on the cut)");

    // candidate (d-1)-faces on the above side: cliques of size |face_a| among
    // the cross-edge targets
    std::vector<Simplex> candidates;
    std::vector<VertexId> tv(targets.begin(), targets.end());
    std::vector<VertexId> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (cur.size() == face_a.size()) {
            candidates.push_back(cur);
            return;
        }
        for (std::size_t j = i; j < tv.size(); ++j) {
            bool ok = true;
            for (VertexId x : cur)
                if (!ambient.has_edge(x, tv[j])) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(tv[j]);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);

    std::vector<PrismBridge> out;
    for (const auto& face_b : candidates) {
        for (std::size_t i = 0; i < face_a.size(); ++i)
            for (std::size_t j = i + 1; j < face_a.size(); ++j) {
                VertexId a = face_a[i], b = face_a[j];
                if (!ambient.has_edge(a, b)) continue;
                for (std::size_t k = 0; k < face_b.size(); ++k)
                    for (std::size_t l = 0; l < face_b.size(); ++l) {
                        if (k == l) continue;
                        VertexId c = face_b[k], d = face_b[l];
                        if (!ambient.has_edge(c, d)) continue;
                        // quadrilateral a-b-d-c-a
                        if (!ambient.has_edge(a, c) || !ambient.has_edge(b, d)) continue;
                        PrismBridge pb;
                        pb.face_a = face_a;
                        pb.face_b = face_b;
                        pb.remove_edges = {make_edge(a, b), make_edge(c, d)};
                        pb.insert_edges = {make_edge(a, c), make_edge(b, d)};
                        for (const auto& e : cross)
                            if (std::binary_search(face_b.begin(), face_b.end(), e.second))
                                pb.cross_edges.push_back(e);
                        out.push_back(std::move(pb));
                    }
            }
    }
    auto key = [](const PrismBridge& p) {
        return std::tuple(p.remove_edges[0], p.remove_edges[1], p.insert_edges[0],
                          p.insert_edges[1], p.face_b);
    };
    std::sort(out.begin(), out.end(),
              [&](const PrismBridge& x, const PrismBridge& y) { return key(x) < key(y); });
    out.erase(std::unique(out.begin(), out.end(),
                          [&](const PrismBridge& x, const PrismBridge& y) { return key(x) == key(y); }),
              out.end());
    return out;
}

PrismBridge find_prism_bridge(const Graph& below, const Graph& above,
                              const Graph& ambient, const Simplex& face_a) {
    auto all = enumerate_prism_bridges(below, above, ambient, face_a);
    if (all.empty())
        throw std::invalid_argument("find_prism_bridge: no quadrilateral completes across the cut");
    return all.front();
}

}  // namespace dgraph
