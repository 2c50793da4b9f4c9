#include "dgraph/canonical.hpp"

#include <unordered_map>

namespace dgraph {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h * kFnvPrime;
}

// Stable colors after refinement, keyed by vertex. Colors are renumbered
// 0..k-1 by first occurrence in sorted-vertex order each round, so equal
// partitions yield equal color values regardless of vertex labels.
std::unordered_map<VertexId, std::uint64_t> refine(const Graph& g) {
    std::vector<VertexId> vs = g.vertices();
    std::unordered_map<VertexId, std::uint64_t> color;
    for (VertexId v : vs) color[v] = g.degree(v);
    for (std::size_t round = 0; round < vs.size(); ++round) {
        std::unordered_map<VertexId, std::uint64_t> next;
        for (VertexId v : vs) {
            std::vector<std::uint64_t> nb;
            nb.reserve(g.degree(v));
            for (VertexId u : g.neighbors(v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = mix(kFnvOffset, color[v]);
            for (std::uint64_t c : nb) h = mix(h, c);
            next[v] = h;
        }
        // renumber canonically and detect a stable partition
        std::map<std::uint64_t, std::uint64_t> renum;
        for (VertexId v : vs) renum.emplace(next[v], renum.size());
        bool changed = false;
        for (VertexId v : vs) {
            std::uint64_t c = renum[next[v]];
            if (c != color[v]) changed = true;
            next[v] = c;
        }
        color.swap(next);
        if (!changed) break;
    }
    return color;
}

}  // namespace

std::string canonical_key(const Graph& g) {
    auto color = refine(g);
    // component profile: per component, size plus sorted color multiset
    std::vector<std::string> parts;
    for (const auto& comp : connected_components(g)) {
        std::vector<std::uint64_t> cs;
        for (VertexId v : comp) cs.push_back(color[v]);
        std::sort(cs.begin(), cs.end());
        std::string p = std::to_string(comp.size()) + ":";
        for (std::uint64_t c : cs) p += std::to_string(c) + ",";
        parts.push_back(std::move(p));
    }
    std::sort(parts.begin(), parts.end());
    std::string key = "n" + std::to_string(g.vertex_count()) + "m" + std::to_string(g.edge_count()) + "|";
    for (const auto& p : parts) key += p + ";";
    return key;
}

namespace {

bool extend_map(const Graph& a, const Graph& b,
                const std::vector<VertexId>& va,
                std::unordered_map<VertexId, VertexId>& fwd,
                std::unordered_map<VertexId, VertexId>& rev,
                const std::unordered_map<VertexId, std::uint64_t>& ca,
                const std::unordered_map<VertexId, std::uint64_t>& cb,
                std::size_t idx) {
    if (idx == va.size()) return true;
    VertexId x = va[idx];
    for (VertexId y : b.vertices()) {
        if (rev.count(y)) continue;
        if (cb.at(y) != ca.at(x)) continue;
        bool ok = true;
        for (const auto& [u, v] : fwd) {
            if (a.has_edge(x, u) != b.has_edge(y, v)) { ok = false; break; }
        }
        if (!ok) continue;
        fwd[x] = y;
        rev[y] = x;
        if (extend_map(a, b, va, fwd, rev, ca, cb, idx + 1)) return true;
        fwd.erase(x);
        rev.erase(y);
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.vertex_count() == 0) return true;
    auto ca = refine(a);
    auto cb = refine(b);
    // color histograms must agree
    std::map<std::uint64_t, int> ha, hb;
    for (const auto& [v, c] : ca) ++ha[c];
    for (const auto& [v, c] : cb) ++hb[c];
    if (ha != hb) return false;
    // order a's vertices rarest color first to prune early
    std::vector<VertexId> va = a.vertices();
    std::stable_sort(va.begin(), va.end(), [&](VertexId x, VertexId y) {
        if (ha[ca[x]] != ha[ca[y]]) return ha[ca[x]] < ha[ca[y]];
        return ca[x] < ca[y];
    });
    std::unordered_map<VertexId, VertexId> fwd, rev;
    return extend_map(a, b, va, fwd, rev, ca, cb, 0);
}

}  // namespace dgraph
