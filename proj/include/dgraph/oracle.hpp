#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "dgraph/graph.hpp"
#include "dgraph/recognition.hpp"

namespace dgraph::oracle {

// Cyclic vertex sequence; shared with the hamiltonian module.
struct RawCycle {
    std::vector<VertexId> vertices;
};

enum class Verdict { Found, Negative, BudgetExceeded };

struct HamiltonianResult {
    Verdict verdict;
    std::optional<RawCycle> cycle;
    std::uint64_t expansions = 0;
};

// Exhaustive backtracking with degree/connectivity pruning. Negative means the
// whole search space was exhausted within budget.
HamiltonianResult brute_hamiltonian(const Graph& g, std::uint64_t budget = 100'000'000);

// Exact number of Hamiltonian cycles up to rotation and reflection; nullopt on
// budget exhaustion.
std::optional<std::uint64_t> count_hamiltonian_cycles(const Graph& g,
                                                      std::uint64_t budget = 100'000'000);

struct ShellableResult {
    Verdict verdict;
    std::optional<ShellingOrder> order;
    std::uint64_t expansions = 0;
};

// Exhaustive search over facet orderings with memoized dead states; requires a
// pure complex.
ShellableResult brute_shellable(const Complex& c, std::uint64_t budget = 100'000'000);

}  // namespace dgraph::oracle
