#include "dgraph/oracle.hpp"

#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace dgraph::oracle {

namespace {

struct Indexed {
    std::vector<VertexId> ids;                 // index -> id
    std::vector<std::vector<int>> adj;         // sorted indices
    int index_of(VertexId v) const {
        auto it = std::lower_bound(ids.begin(), ids.end(), v);
        return static_cast<int>(it - ids.begin());
    }
};

Indexed index_graph(const Graph& g) {
    Indexed ix;
    ix.ids = g.vertices();
    ix.adj.resize(ix.ids.size());
    for (std::size_t i = 0; i < ix.ids.size(); ++i)
        for (VertexId u : g.neighbors(ix.ids[i])) ix.adj[i].push_back(ix.index_of(u));
    return ix;
}

// Remaining graph (unvisited plus the path head) must stay connected and every
// unvisited vertex must keep >= 2 usable neighbors.
bool prune_ok(const Indexed& ix, const std::vector<char>& visited, int head, int start,
              int unvisited) {
    const int n = static_cast<int>(ix.ids.size());
    for (int v = 0; v < n; ++v) {
        if (visited[v]) continue;
        int free_deg = 0;
        for (int u : ix.adj[v])
            if (!visited[u] || u == head || u == start) ++free_deg;
        if (free_deg < 2) return false;
    }
    // BFS over unvisited from any head neighbor
    if (unvisited == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int u : ix.adj[head])
        if (!visited[u]) {
            stack.push_back(u);
            seen[u] = 1;
            break;
        }
    if (stack.empty()) return false;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int u : ix.adj[v])
            if (!visited[u] && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    return reached == unvisited;
}

}  // namespace

HamiltonianResult brute_hamiltonian(const Graph& g, std::uint64_t budget) {
    HamiltonianResult res{Verdict::Negative, std::nullopt, 0};
    const int n = static_cast<int>(g.vertex_count());
    if (n < 3) return res;
    if (!is_connected(g)) return res;
    Indexed ix = index_graph(g);
    std::vector<char> visited(n, 0);
    std::vector<int> path{0};
    visited[0] = 1;
    bool exhausted = true;

    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (res.expansions++ >= budget) {
            exhausted = false;
            return false;
        }
        int head = path.back();
        if (depth == n) {
            return std::binary_search(ix.adj[head].begin(), ix.adj[head].end(), 0);
        }
        if (!prune_ok(ix, visited, head, 0, n - depth)) return false;
        for (int u : ix.adj[head]) {
            if (visited[u]) continue;
            visited[u] = 1;
            path.push_back(u);
            if (rec(depth + 1)) return true;
            path.pop_back();
            visited[u] = 0;
            if (!exhausted) return false;
        }
        return false;
    };

    if (rec(1)) {
        RawCycle c;
        for (int i : path) c.vertices.push_back(ix.ids[i]);
        res.verdict = Verdict::Found;
        res.cycle = std::move(c);
        return res;
    }
    res.verdict = exhausted ? Verdict::Negative : Verdict::BudgetExceeded;
    return res;
}

std::optional<std::uint64_t> count_hamiltonian_cycles(const Graph& g, std::uint64_t budget) {
    const int n = static_cast<int>(g.vertex_count());
    if (n < 3) return 0;
    Indexed ix = index_graph(g);
    std::uint64_t count = 0, used = 0;
    std::vector<char> visited(n, 0);
    std::vector<int> path{0};
    visited[0] = 1;
    bool exhausted = true;
    std::function<void(int)> rec = [&](int depth) {
        if (!exhausted) return;
        if (used++ >= budget) {
            exhausted = false;
            return;
        }
        int head = path.back();
        if (depth == n) {
            // close the cycle; kill reflection by orienting second < last
            if (std::binary_search(ix.adj[head].begin(), ix.adj[head].end(), 0) &&
                path[1] < path.back())
                ++count;
            return;
        }
        for (int u : ix.adj[head]) {
            if (visited[u]) continue;
            visited[u] = 1;
            path.push_back(u);
            rec(depth + 1);
            path.pop_back();
            visited[u] = 0;
        }
    };
    rec(1);
    if (!exhausted) return std::nullopt;
    return count;
}

namespace {

// Shared step validity with recognition: H_k pure of dimension d-1, shellable.
bool step_ok(const Simplex& f, const std::vector<Simplex>& prior) {
    Complex h;
    {
        std::vector<Simplex> inters;
        for (const auto& p : prior) {
            Simplex s;
            std::set_intersection(f.begin(), f.end(), p.begin(), p.end(), std::back_inserter(s));
            if (!s.empty()) inters.push_back(std::move(s));
        }
        std::sort(inters.begin(), inters.end());
        inters.erase(std::unique(inters.begin(), inters.end()), inters.end());
        for (std::size_t i = 0; i < inters.size(); ++i) {
            bool maximal = true;
            for (std::size_t j = 0; j < inters.size() && maximal; ++j)
                if (i != j && inters[i].size() < inters[j].size() &&
                    std::includes(inters[j].begin(), inters[j].end(), inters[i].begin(),
                                  inters[i].end()))
                    maximal = false;
            if (maximal) h.facets.push_back(inters[i]);
        }
    }
    const int d = simplex_dim(f);
    if (d == 0) return h.empty();
    if (h.empty() || !h.pure() || h.dimension() != d - 1) return false;
    return dgraph::detail::shellable_complex_search(h, nullptr);
}

}  // namespace

ShellableResult brute_shellable(const Complex& c, std::uint64_t budget) {
    if (!c.pure()) throw std::invalid_argument("brute_shellable: complex not pure");
    ShellableResult res{Verdict::Negative, std::nullopt, 0};
    const std::size_t n = c.facets.size();
    if (n == 0) return res;
    if (n > 64) throw std::invalid_argument("brute_shellable: more than 64 facets");
    std::vector<Simplex> order;
    std::unordered_set<std::uint64_t> dead;
    bool exhausted = true;
    std::uint64_t mask = 0;

    std::function<bool()> rec = [&]() -> bool {
        if (order.size() == n) return true;
        if (res.expansions++ >= budget) {
            exhausted = false;
            return false;
        }
        if (dead.count(mask)) return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1ull << i)) continue;
            if (!order.empty() && !step_ok(c.facets[i], order)) continue;
            mask |= 1ull << i;
            order.push_back(c.facets[i]);
            if (rec()) return true;
            order.pop_back();
            mask &= ~(1ull << i);
            if (!exhausted) return false;
        }
        dead.insert(mask);
        return false;
    };

    if (rec()) {
        res.verdict = Verdict::Found;
        res.order = ShellingOrder{order};
        return res;
    }
    res.verdict = exhausted ? Verdict::Negative : Verdict::BudgetExceeded;
    return res;
}

}  // namespace dgraph::oracle
