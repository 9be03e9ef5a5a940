#ifndef AOP_TESTS_ORACLE_HPP
#define AOP_TESTS_ORACLE_HPP

// Deliberately naive reference: tries every direction vector, recounts
// in-degrees from scratch and looks for a cycle by depth-first search. It
// shares nothing with the library beyond the graph types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "aop/graph.hpp"

namespace oracle {

using aop::arc;
using aop::vertex_id;

inline bool has_cycle(std::size_t n, const std::vector<arc>& arcs) {
    std::vector<std::vector<vertex_id>> out(n);
    for (const auto& a : arcs) out[a.tail].push_back(a.head);
    std::vector<int> colour(n, 0);
    std::function<bool(vertex_id)> dfs = [&](vertex_id v) {
        colour[v] = 1;
        for (auto w : out[v]) {
            if (colour[w] == 1) return true;
            if (colour[w] == 0 && dfs(w)) return true;
        }
        colour[v] = 2;
        return false;
    };
    for (vertex_id v = 0; v < n; ++v)
        if (colour[v] == 0 && dfs(v)) return true;
    return false;
}

struct tally {
    std::uint64_t t_odd = 0;    // parity right on the scope
    std::uint64_t acyclic = 0;  // ... and no directed cycle
};

inline tally count(const aop::orientation_problem& p, const std::vector<vertex_id>& scope) {
    const auto& g = p.graph();
    const auto k = g.edge_count();
    tally t;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::vector<arc> arcs(g.arcs().begin(), g.arcs().end());
        for (std::size_t l = 0; l < k; ++l) {
            const auto& e = g.edges()[l];
            arcs.push_back((bits >> l) & 1 ? arc{e.first, e.second} : arc{e.second, e.first});
        }
        std::vector<int> in(g.vertex_count(), 0);
        for (const auto& a : arcs) ++in[a.head];
        bool ok = true;
        for (auto v : scope) ok = ok && ((in[v] % 2 == 1) == p.is_odd(v));
        if (!ok) continue;
        ++t.t_odd;
        if (!has_cycle(g.vertex_count(), arcs)) ++t.acyclic;
    }
    return t;
}

inline tally count(const aop::orientation_problem& p) {
    std::vector<vertex_id> all(p.graph().vertex_count());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<vertex_id>(v);
    return count(p, all);
}

// Random simple graph: each vertex pair becomes an edge with probability
// `density`, and an edge becomes a fixed arc with probability `arc_share`.
// At most `max_edges` undirected edges are kept; T is a uniform subset.
inline aop::orientation_problem random_problem(std::mt19937_64& rng, std::size_t n, double density, double arc_share,
                                               std::size_t max_edges) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<aop::edge> edges;
    std::vector<arc> arcs;
    for (vertex_id a = 0; a < n; ++a) {
        for (vertex_id b = a + 1; b < n; ++b) {
            if (u(rng) >= density) continue;
            if (u(rng) < arc_share)
                arcs.push_back(u(rng) < 0.5 ? arc{a, b} : arc{b, a});
            else if (edges.size() < max_edges)
                edges.push_back({a, b});
        }
    }
    std::vector<bool> odd(n);
    for (std::size_t v = 0; v < n; ++v) odd[v] = u(rng) < 0.5;
    return {aop::partially_directed_graph(n, std::move(edges), std::move(arcs)), std::move(odd)};
}

// Random forest on n vertices (Prüfer-free: attach each vertex to an
// earlier one or start a new tree), some links fixed.
inline aop::orientation_problem random_forest(std::mt19937_64& rng, std::size_t n, double arc_share) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<aop::edge> edges;
    std::vector<arc> arcs;
    for (vertex_id v = 1; v < n; ++v) {
        if (u(rng) < 0.2) continue;
        vertex_id parent = static_cast<vertex_id>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
        if (u(rng) < arc_share)
            arcs.push_back(u(rng) < 0.5 ? arc{parent, v} : arc{v, parent});
        else
            edges.push_back({parent, v});
    }
    std::vector<bool> odd(n);
    for (std::size_t i = 0; i < n; ++i) odd[i] = u(rng) < 0.5;
    return {aop::partially_directed_graph(n, std::move(edges), std::move(arcs)), std::move(odd)};
}

// Disjoint paths and cycles (maximum degree 2).
inline aop::orientation_problem random_degree_two(std::mt19937_64& rng, std::size_t n, double arc_share,
                                                  bool arcs_allowed = true) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<vertex_id> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<vertex_id>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<aop::edge> edges;
    std::vector<arc> arcs;
    auto link = [&](vertex_id a, vertex_id b) {
        if (arcs_allowed && u(rng) < arc_share)
            arcs.push_back(u(rng) < 0.5 ? arc{a, b} : arc{b, a});
        else
            edges.push_back({a, b});
    };
    std::size_t i = 0;
    while (i < n) {
        std::size_t len = std::uniform_int_distribution<std::size_t>(1, n - i)(rng);
        for (std::size_t j = i + 1; j < i + len; ++j) link(perm[j - 1], perm[j]);
        if (len >= 3 && u(rng) < 0.6) link(perm[i + len - 1], perm[i]);
        i += len;
    }
    std::vector<bool> odd(n);
    for (std::size_t v = 0; v < n; ++v) odd[v] = u(rng) < 0.5;
    return {aop::partially_directed_graph(n, std::move(edges), std::move(arcs)), std::move(odd)};
}

}  // namespace oracle

#endif  // AOP_TESTS_ORACLE_HPP
