#ifndef AOP_TRANSFORMS_HPP
#define AOP_TRANSFORMS_HPP

// Instance transforms: the apex construction for undirected instances and
// the degree-2 contraction plus global flip that produces an equivalent
// instance with an empty odd set.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aop/graph.hpp"

namespace aop {

// G' = G plus a new vertex joined to every vertex outside T. In the
// returned instance every original vertex is odd and the apex (id n) is not.
inline orientation_problem apex_transform(const orientation_problem& p) {
    const auto& g = p.graph();
    if (g.arc_count() != 0) throw std::invalid_argument("apex_transform: instance has fixed arcs");
    const auto apex = static_cast<vertex_id>(g.vertex_count());
    std::vector<edge> edges = g.edges();
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (!p.is_odd(v)) edges.push_back({v, apex});
    std::vector<bool> odd(g.vertex_count() + 1, true);
    odd[apex] = false;
    return orientation_problem(partially_directed_graph(g.vertex_count() + 1, std::move(edges), {}),
                               std::move(odd));
}

// Same graph G', but the vertex exempt from the odd requirement is `exempt`
// (any vertex of G', the apex being id n). Used by the any-vertex reading.
inline orientation_problem apex_transform_exempting(const orientation_problem& p, vertex_id exempt) {
    auto base = apex_transform(p);
    if (exempt >= base.graph().vertex_count()) throw std::out_of_range("unknown vertex " + std::to_string(exempt));
    std::vector<bool> odd(base.graph().vertex_count(), true);
    odd[exempt] = false;
    return orientation_problem(base.graph(), std::move(odd));
}

class normalization_error : public std::invalid_argument {
public:
    normalization_error(vertex_id v, const std::string& what)
        : std::invalid_argument("vertex " + std::to_string(v) + ": " + what), vertex_(v) {}

    vertex_id vertex() const { return vertex_; }

private:
    vertex_id vertex_;
};

// Normalized instance: the contracted graph with every arc reversed and an
// empty odd set, plus what is needed to lift its witnesses back.
struct normalized_instance {
    orientation_problem problem;
    std::vector<vertex_id> original_vertex;  // normalized id -> original id

    // Per normalized edge (link order), the original path it replaced:
    // path vertices p0..pk and the original links joining consecutive ones.
    struct chain {
        std::vector<vertex_id> path;
        std::vector<link_id> links;
    };
    std::vector<chain> edge_chains;
    std::vector<chain> arc_chains;
    std::size_t original_edge_count = 0;

    // Flip back to the contracted instance, then expand every contracted
    // link along its path.
    orientation lift(const orientation& normalized) const {
        const auto& g = problem.graph();
        check_orientation(g, normalized);
        orientation out{std::vector<bool>(original_edge_count, false)};
        auto apply = [&](const chain& c, vertex_id tail) {
            bool along = tail == c.path.front();
            for (std::size_t i = 0; i < c.links.size(); ++i) {
                vertex_id from = along ? c.path[i] : c.path[i + 1];
                link_id l = c.links[i];
                if (l < original_edge_count) out.forward[l] = from == original_first[l];
            }
        };
        for (link_id l = 0; l < g.edge_count(); ++l) {
            // flipped back: the normalized arc a->b means b->a in the contracted graph
            arc x = directed(g, normalized, l);
            apply(edge_chains[l], original_vertex[x.head]);
        }
        for (std::size_t i = 0; i < g.arc_count(); ++i) apply(arc_chains[i], original_vertex[g.arcs()[i].head]);
        return out;
    }

    std::vector<vertex_id> original_first;  // first endpoint of each original edge
};

inline normalized_instance normalize_empty_T(const orientation_problem& p) {
    const auto& g = p.graph();
    struct work_link {
        vertex_id a, b;
        bool fixed;  // fixed: directed a -> b
        bool alive = true;
        normalized_instance::chain chain;  // path from a to b
    };
    std::vector<work_link> links;
    std::vector<std::vector<std::size_t>> incident(g.vertex_count());
    for (link_id l = 0; l < g.link_count(); ++l) {
        auto [a, b] = g.endpoints(l);
        links.push_back({a, b, !g.is_edge(l), true, {{a, b}, {l}}});
        incident[a].push_back(l);
        incident[b].push_back(l);
    }
    auto alive_at = [&](vertex_id v) {
        std::vector<std::size_t> out;
        for (auto l : incident[v])
            if (links[l].alive) out.push_back(l);
        return out;
    };
    auto linked = [&](vertex_id x, vertex_id y) {
        for (auto l : incident[x])
            if (links[l].alive && (links[l].a == y || links[l].b == y)) return true;
        return false;
    };
    // Chain re-rooted so that it starts at `from`.
    auto from_end = [&](const work_link& w, vertex_id from) {
        auto c = w.chain;
        if (w.a != from) {
            std::reverse(c.path.begin(), c.path.end());
            std::reverse(c.links.begin(), c.links.end());
        }
        return c;
    };

    std::vector<bool> removed(g.vertex_count(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (vertex_id v = 0; v < g.vertex_count(); ++v) {
            if (removed[v] || !p.is_odd(v)) continue;
            auto at = alive_at(v);
            if (at.size() != 2) continue;
            auto& l1 = links[at[0]];
            auto& l2 = links[at[1]];
            vertex_id x = l1.a == v ? l1.b : l1.a;
            vertex_id y = l2.a == v ? l2.b : l2.a;
            if (x == y || linked(x, y)) continue;  // would create a parallel link
            // into v: +1, out of v: -1, free: 0
            auto sense = [&](const work_link& w) { return !w.fixed ? 0 : (w.b == v ? 1 : -1); };
            int s1 = sense(l1), s2 = sense(l2);
            if (s1 != 0 && s1 == s2) {
                throw normalization_error(v, s1 > 0 ? "both fixed arcs enter the vertex" : "both fixed arcs leave the vertex");
            }
            work_link merged;
            auto c1 = from_end(l1, x);
            auto c2 = from_end(l2, v);
            merged.chain.path = c1.path;
            merged.chain.path.insert(merged.chain.path.end(), c2.path.begin() + 1, c2.path.end());
            merged.chain.links = c1.links;
            merged.chain.links.insert(merged.chain.links.end(), c2.links.begin(), c2.links.end());
            merged.fixed = s1 != 0 || s2 != 0;
            bool x_to_y = s1 > 0 || s2 < 0 || !merged.fixed;
            merged.a = x_to_y ? x : y;
            merged.b = x_to_y ? y : x;
            if (!x_to_y) {
                std::reverse(merged.chain.path.begin(), merged.chain.path.end());
                std::reverse(merged.chain.links.begin(), merged.chain.links.end());
            }
            l1.alive = l2.alive = false;
            removed[v] = true;
            std::size_t id = links.size();
            links.push_back(std::move(merged));
            incident[x].push_back(id);
            incident[y].push_back(id);
            changed = true;
        }
    }

    // The flip turns the odd set into T xor {odd-degree vertices}; it is
    // empty exactly when T coincides with the odd-degree vertices.
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        if (removed[v]) continue;
        std::size_t d = alive_at(v).size();
        if (p.is_odd(v) && d == 2) throw normalization_error(v, "contraction blocked by an existing link");
        if ((d % 2 == 1) != p.is_odd(v)) {
            throw normalization_error(v, "degree parity does not match T membership after contraction");
        }
    }

    normalized_instance out;
    out.original_edge_count = g.edge_count();
    for (const auto& e : g.edges()) out.original_first.push_back(e.first);
    std::vector<vertex_id> local(g.vertex_count(), 0);
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        if (removed[v]) continue;
        local[v] = static_cast<vertex_id>(out.original_vertex.size());
        out.original_vertex.push_back(v);
    }
    std::vector<edge> edges;
    std::vector<arc> arcs;
    for (const auto& w : links) {
        if (!w.alive) continue;
        if (w.fixed) {
            arcs.push_back({local[w.b], local[w.a]});  // reversed by the flip
            out.arc_chains.push_back(w.chain);
        } else {
            edges.push_back({local[w.a], local[w.b]});
            auto c = w.chain;
            if (local[w.a] > local[w.b]) {
                std::reverse(c.path.begin(), c.path.end());
                std::reverse(c.links.begin(), c.links.end());
            }
            out.edge_chains.push_back(std::move(c));
        }
    }
    std::size_t n = out.original_vertex.size();
    out.problem = orientation_problem(partially_directed_graph(n, std::move(edges), std::move(arcs)),
                                      std::vector<bool>(n, false));
    return out;
}

}  // namespace aop

#endif  // AOP_TRANSFORMS_HPP
