#ifndef AOP_SPECIAL_HPP
#define AOP_SPECIAL_HPP

// Polynomial procedures for forests and for graphs of maximum degree 2.
// Fixed arcs count as ordinary links for the structural preconditions and
// are compared against the forced orientation afterwards.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aop/graph.hpp"
#include "aop/solve_result.hpp"

namespace aop {

inline bool is_forest(const partially_directed_graph& g) {
    std::vector<vertex_id> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), vertex_id{0});
    auto find = [&](vertex_id v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (link_id l = 0; l < g.link_count(); ++l) {
        auto [a, b] = g.endpoints(l);
        auto ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

namespace detail {

// Direction of every link as "tail" endpoint, filled by peeling.
struct forced_links {
    std::vector<std::optional<vertex_id>> tail;
    std::vector<bool> demand;  // residual odd-in-degree requirement
    std::vector<std::size_t> remaining;
};

// Repeatedly fixes the only link of a degree-one vertex by that vertex's
// parity demand. Cycles of a degree-2 graph are left untouched.
inline forced_links peel_leaves(const orientation_problem& p) {
    const auto& g = p.graph();
    forced_links f;
    f.tail.assign(g.link_count(), std::nullopt);
    f.demand = p.odd_mask();
    f.remaining.resize(g.vertex_count());
    std::vector<vertex_id> leaves;
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        f.remaining[v] = g.degree(v);
        if (f.remaining[v] == 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
        vertex_id v = leaves.back();
        leaves.pop_back();
        if (f.remaining[v] != 1) continue;
        for (link_id l : g.incident(v)) {
            if (f.tail[l]) continue;
            vertex_id w = g.other(l, v);
            if (f.demand[v]) {
                f.tail[l] = w;
                f.demand[v] = false;
            } else {
                f.tail[l] = v;
                f.demand[w] = !f.demand[w];
            }
            --f.remaining[v];
            if (--f.remaining[w] == 1) leaves.push_back(w);
            break;
        }
    }
    return f;
}

inline std::optional<std::string> fixed_arc_conflict(const partially_directed_graph& g,
                                                     const std::vector<std::optional<vertex_id>>& tail) {
    for (std::size_t i = 0; i < g.arc_count(); ++i) {
        link_id l = g.arc_link(i);
        if (tail[l] && *tail[l] != g.arcs()[i].tail) {
            return "fixed arc " + std::to_string(g.arcs()[i].tail) + "->" + std::to_string(g.arcs()[i].head) +
                   " contradicts the forced orientation";
        }
    }
    return std::nullopt;
}

inline orientation to_orientation(const partially_directed_graph& g,
                                  const std::vector<std::optional<vertex_id>>& tail) {
    orientation o{std::vector<bool>(g.edge_count())};
    for (link_id l = 0; l < g.edge_count(); ++l) o.forward[l] = *tail[l] == g.edges()[l].first;
    return o;
}

}  // namespace detail

// On a forest the T-odd orientation, when it exists, is unique: leaf
// peeling determines every link.
inline solve_result solve_tree(const orientation_problem& p) {
    const auto& g = p.graph();
    if (!is_forest(g)) throw std::invalid_argument("solve_tree: underlying graph is not a forest");
    auto f = detail::peel_leaves(p);
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        if (f.demand[v]) return infeasible("tree", "parity: component of vertex " + std::to_string(v));
    }
    if (auto conflict = detail::fixed_arc_conflict(g, f.tail)) return infeasible("tree", *conflict);
    solve_result r;
    r.status = solve_status::feasible;
    r.method = "tree";
    r.witness = detail::to_orientation(g, f.tail);
    return r;
}

// Paths are peeled as in solve_tree. A cycle with satisfiable parity has
// exactly two T-odd orientations, one the reverse of the other; we keep the
// first that respects the fixed arcs and is not a directed cycle.
inline solve_result solve_degree_two(const orientation_problem& p) {
    const auto& g = p.graph();
    if (g.max_degree() > 2) throw std::invalid_argument("solve_degree_two: a vertex has degree above 2");
    auto f = detail::peel_leaves(p);

    std::vector<bool> visited(g.vertex_count(), false);
    for (vertex_id start = 0; start < g.vertex_count(); ++start) {
        if (visited[start] || f.remaining[start] != 2) {
            if (f.remaining[start] == 0 && f.demand[start])
                return infeasible("degree-two", "parity: component of vertex " + std::to_string(start));
            continue;
        }
        // c[0] = start, links[i] joins c[i] and c[i+1 mod L]
        std::vector<vertex_id> c{start};
        std::vector<link_id> links;
        auto prev_link = static_cast<link_id>(g.link_count());
        vertex_id v = start;
        visited[start] = true;
        while (true) {
            link_id next = 0;
            for (link_id l : g.incident(v))
                if (l != prev_link) next = l;
            links.push_back(next);
            prev_link = next;
            v = g.other(next, v);
            if (v == start) break;
            visited[v] = true;
            c.push_back(v);
        }
        const std::size_t len = c.size();

        bool parity_ok = false;
        std::optional<std::string> why;
        for (bool seed_out : {true, false}) {
            // seed_out: links[0] is directed c[0] -> c[1]
            std::vector<vertex_id> tails(len);
            tails[0] = seed_out ? c[0] : c[1];
            for (std::size_t i = 1; i < len; ++i) {
                bool in_from_prev = tails[i - 1] != c[i];
                bool next_in = f.demand[c[i]] != in_from_prev;
                tails[i] = next_in ? c[(i + 1) % len] : c[i];
            }
            bool in_closing = tails[len - 1] != c[0];
            bool in_seed = !seed_out;
            if ((in_closing != in_seed) != f.demand[c[0]]) break;  // both candidates share the parity sum
            parity_ok = true;
            bool clash = false;
            for (std::size_t i = 0; i < len; ++i)
                clash = clash || (!g.is_edge(links[i]) && g.fixed_arc(links[i]).tail != tails[i]);
            if (clash) {
                why = "fixed arcs on the cycle through vertex " + std::to_string(start) +
                      " contradict both T-odd orientations";
                continue;
            }
            bool circular = true;
            for (std::size_t i = 0; i < len; ++i) circular = circular && tails[i] == c[i];
            bool circular_back = true;
            for (std::size_t i = 0; i < len; ++i) circular_back = circular_back && tails[i] == c[(i + 1) % len];
            if (circular || circular_back) {
                why = "cycle through vertex " + std::to_string(start) + " would be directed";
                continue;
            }
            for (std::size_t i = 0; i < len; ++i) f.tail[links[i]] = tails[i];
            why.reset();
            break;
        }
        if (!parity_ok) return infeasible("degree-two", "parity: component of vertex " + std::to_string(start));
        if (why) return infeasible("degree-two", *why);
    }
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        if (f.remaining[v] == 0 && f.demand[v])
            return infeasible("degree-two", "parity: component of vertex " + std::to_string(v));
    }
    if (auto conflict = detail::fixed_arc_conflict(g, f.tail)) return infeasible("degree-two", *conflict);
    solve_result r;
    r.status = solve_status::feasible;
    r.method = "degree-two";
    r.witness = detail::to_orientation(g, f.tail);
    return r;
}

}  // namespace aop

#endif  // AOP_SPECIAL_HPP
