#ifndef AOP_ENUMERATE_HPP
#define AOP_ENUMERATE_HPP

// Exhaustive oracle: walks all 2^k orientations of the k undirected edges
// in Gray-code order, keeping in-degree parities incrementally and running
// the acyclicity test only on parity-valid candidates.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "aop/acyclicity.hpp"
#include "aop/graph.hpp"

namespace aop {

struct enumeration_options {
    unsigned max_edges = 26;
    std::size_t witness_cap = 16;
    bool require_acyclic = true;
};

struct enumeration_report {
    bool complete = false;  // false: the edge count exceeded max_edges, nothing was counted
    std::uint64_t total_valid = 0;
    std::uint64_t explored = 0;
    std::vector<orientation> witnesses;
};

inline enumeration_report enumerate(const orientation_problem& p, std::span<const vertex_id> scope,
                                    const enumeration_options& options = {}) {
    const auto& g = p.graph();
    const std::size_t k = g.edge_count();
    enumeration_report report;
    if (k > options.max_edges || k >= 64) return report;

    auto in_scope = vertex_mask(g.vertex_count(), scope);
    // parity[v] = current in-degree parity; start with every edge backward.
    orientation o{std::vector<bool>(k, false)};
    std::vector<std::uint8_t> parity(g.vertex_count(), 0);
    for (link_id l = 0; l < g.link_count(); ++l) parity[directed(g, o, l).head] ^= 1;
    std::size_t mismatched = 0;
    auto bad = [&](vertex_id v) { return in_scope[v] && (parity[v] == 1) != p.is_odd(v); };
    for (vertex_id v = 0; v < g.vertex_count(); ++v) mismatched += bad(v);

    std::vector<arc> arcs(g.link_count());
    auto visit = [&] {
        if (mismatched != 0) return;
        if (options.require_acyclic) {
            for (link_id l = 0; l < g.link_count(); ++l) arcs[l] = directed(g, o, l);
            if (!is_acyclic(g.vertex_count(), arcs)) return;
        }
        ++report.total_valid;
        if (report.witnesses.size() < options.witness_cap) report.witnesses.push_back(o);
    };

    const std::uint64_t total = std::uint64_t{1} << k;
    visit();
    for (std::uint64_t step = 1; step < total; ++step) {
        auto l = static_cast<link_id>(std::countr_zero(step));
        const auto& e = g.edges()[l];
        mismatched -= bad(e.first) + bad(e.second);
        parity[e.first] ^= 1;
        parity[e.second] ^= 1;
        mismatched += bad(e.first) + bad(e.second);
        o.forward[l] = !o.forward[l];
        visit();
    }
    report.complete = true;
    report.explored = total;
    return report;
}

inline enumeration_report enumerate(const orientation_problem& p, const enumeration_options& options = {}) {
    return enumerate(p, all_vertices(p.graph().vertex_count()), options);
}

}  // namespace aop

#endif  // AOP_ENUMERATE_HPP
