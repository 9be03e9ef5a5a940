#ifndef AOP_ACYCLICITY_HPP
#define AOP_ACYCLICITY_HPP

#include <algorithm>
#include <functional>
#include <queue>
#include <span>
#include <vector>

#include "aop/graph.hpp"

namespace aop {

// Either a topological order (acyclic) or one directed cycle v0 -> v1 -> ...
// -> v0, rotated so that its smallest vertex comes first.
struct acyclicity {
    bool acyclic = true;
    std::vector<vertex_id> order;
    std::vector<vertex_id> cycle;

    explicit operator bool() const { return acyclic; }
};

// Kahn's algorithm; ties among sources are broken by ascending vertex id.
inline acyclicity is_acyclic(std::size_t vertex_count, std::span<const arc> arcs) {
    std::vector<std::vector<vertex_id>> next(vertex_count);
    std::vector<std::size_t> in(vertex_count, 0);
    for (const auto& a : arcs) {
        next[a.tail].push_back(a.head);
        ++in[a.head];
    }
    std::priority_queue<vertex_id, std::vector<vertex_id>, std::greater<>> sources;
    for (vertex_id v = 0; v < vertex_count; ++v)
        if (in[v] == 0) sources.push(v);

    acyclicity result;
    while (!sources.empty()) {
        vertex_id v = sources.top();
        sources.pop();
        result.order.push_back(v);
        for (vertex_id w : next[v])
            if (--in[w] == 0) sources.push(w);
    }
    if (result.order.size() == vertex_count) return result;

    // Every vertex left over has an in-arc from another leftover vertex, so
    // walking predecessors must revisit a vertex.
    result.acyclic = false;
    result.order.clear();
    std::vector<vertex_id> pred(vertex_count, 0);
    for (const auto& a : arcs)
        if (in[a.tail] > 0 && in[a.head] > 0) pred[a.head] = a.tail;
    vertex_id start = 0;
    while (in[start] == 0) ++start;
    std::vector<int> seen_at(vertex_count, -1);
    std::vector<vertex_id> walk;
    vertex_id v = start;
    while (seen_at[v] < 0) {
        seen_at[v] = static_cast<int>(walk.size());
        walk.push_back(v);
        v = pred[v];
    }
    result.cycle.assign(walk.begin() + seen_at[v], walk.end());
    std::reverse(result.cycle.begin(), result.cycle.end());
    std::rotate(result.cycle.begin(), std::min_element(result.cycle.begin(), result.cycle.end()),
                result.cycle.end());
    return result;
}

inline acyclicity is_acyclic(const partially_directed_graph& g, const orientation& o) {
    auto arcs = arc_set(g, o);
    return is_acyclic(g.vertex_count(), arcs);
}

// Re-checks a witness produced by is_acyclic against the arc set.
inline bool witness_holds(std::size_t vertex_count, std::span<const arc> arcs, const acyclicity& w) {
    if (w.acyclic) {
        if (w.order.size() != vertex_count) return false;
        std::vector<std::size_t> position(vertex_count, vertex_count);
        for (std::size_t i = 0; i < w.order.size(); ++i) {
            if (w.order[i] >= vertex_count || position[w.order[i]] != vertex_count) return false;
            position[w.order[i]] = i;
        }
        return std::all_of(arcs.begin(), arcs.end(),
                           [&](const arc& a) { return position[a.tail] < position[a.head]; });
    }
    if (w.cycle.empty()) return false;
    std::vector<arc> sorted(arcs.begin(), arcs.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < w.cycle.size(); ++i) {
        arc step{w.cycle[i], w.cycle[(i + 1) % w.cycle.size()]};
        if (!std::binary_search(sorted.begin(), sorted.end(), step)) return false;
    }
    return true;
}

}  // namespace aop

#endif  // AOP_ACYCLICITY_HPP
