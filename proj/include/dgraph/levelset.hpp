#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "dgraph/graph.hpp"

namespace dgraph {

// Exact rational value for vertex functions and cut levels; avoids equality
// hazards when c must miss f(V).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
    static Rational parse(const std::string& s);
    static Rational midpoint(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, 2 * a.den * b.den);
    }
};

struct VertexFunction {
    std::map<VertexId, Rational> values;

    const Rational& at(VertexId v) const {
        auto it = values.find(v);
        if (it == values.end()) throw std::invalid_argument("function undefined at vertex " + std::to_string(v));
        return it->second;
    }
    bool locally_injective(const Graph& g) const;
};

// Random permutation of 1..|V| as values; always locally injective.
VertexFunction random_injective_function(const Graph& g, std::uint64_t seed);

// A cut level strictly between two adjacent sorted values of f (index k picks
// the gap); throws when the function has fewer than two distinct values.
Rational cut_between(const VertexFunction& f, std::size_t gap_index);

struct LevelSurface {
    Graph graph;                          // subgraph of the refinement on sign-changing simplices
    std::map<VertexId, Simplex> carrier;  // surface vertex -> originating simplex
};

// {f=c}: simplices on which f changes sign, edges by strict containment.
LevelSurface level_surface(const Graph& g, const VertexFunction& f, const Rational& c);

// Induced subgraphs on {f<c} and {f>c}.
std::pair<Graph, Graph> split(const Graph& g, const VertexFunction& f, const Rational& c);

// Every signed hemisphere S±(x) must be empty, a simplex, a (d-1)-ball or a
// (d-1)-sphere.
bool is_smooth(const Graph& g, const VertexFunction& f, const Rational& c);

struct PrismBridge {
    Simplex face_a;  // (d-1)-face on the below side
    Simplex face_b;  // matched (d-1)-face on the above side
    std::vector<Edge> cross_edges;
    std::array<Edge, 2> remove_edges;  // (a,b) in face_a's cycle, (c,d) in face_b's
    std::array<Edge, 2> insert_edges;  // (a,c), (b,d)
};

// All valid rewirings across the prism at face_a, sorted lexicographically.
std::vector<PrismBridge> enumerate_prism_bridges(const Graph& below, const Graph& above,
                                                 const Graph& ambient, const Simplex& face_a);

// Lexicographically smallest rewiring; throws when face_a has no cross edges
// or no quadrilateral completes.
PrismBridge find_prism_bridge(const Graph& below, const Graph& above,
                              const Graph& ambient, const Simplex& face_a);

}  // namespace dgraph
