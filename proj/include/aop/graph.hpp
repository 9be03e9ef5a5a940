#ifndef AOP_GRAPH_HPP
#define AOP_GRAPH_HPP

// Partially directed graphs: a vertex range [0, n), a set of undirected
// edges and a set of fixed arcs. Edges and arcs are addressed by a common
// link id: edges occupy [0, E) and arcs [E, E + A).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aop {

using vertex_id = std::uint32_t;
using link_id = std::uint32_t;

struct edge {
    vertex_id first = 0;
    vertex_id second = 0;

    friend auto operator<=>(const edge&, const edge&) = default;
};

struct arc {
    vertex_id tail = 0;
    vertex_id head = 0;

    friend auto operator<=>(const arc&, const arc&) = default;
};

inline edge make_edge(vertex_id a, vertex_id b) { return a < b ? edge{a, b} : edge{b, a}; }

inline arc reversed(arc a) { return {a.head, a.tail}; }

struct validation_report {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

class graph_error : public std::invalid_argument {
public:
    graph_error(const std::string& what, validation_report report)
        : std::invalid_argument(what), report_(std::move(report)) {}

    const validation_report& report() const { return report_; }

private:
    validation_report report_;
};

// Reports loops, parallel links (edge/edge, edge/arc, arc/arc in either
// direction) and endpoints outside [0, vertex_count).
inline validation_report validate(std::size_t vertex_count, std::span<const edge> edges,
                                  std::span<const arc> arcs) {
    validation_report report;
    auto name = [](vertex_id v) { return std::to_string(v); };
    std::vector<std::pair<edge, bool>> pairs;
    pairs.reserve(edges.size() + arcs.size());

    auto check = [&](vertex_id a, vertex_id b, bool is_arc) {
        bool dangling = false;
        for (vertex_id v : {a, b}) {
            if (v >= vertex_count) {
                report.violations.push_back("dangling endpoint " + name(v));
                dangling = true;
            }
        }
        if (a == b) {
            report.violations.push_back("loop at " + name(a));
            return;
        }
        if (!dangling) pairs.emplace_back(make_edge(a, b), is_arc);
    };
    for (const auto& e : edges) check(e.first, e.second, false);
    for (const auto& a : arcs) check(a.tail, a.head, true);

    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i].first == pairs[i - 1].first &&
            (i < 2 || !(pairs[i - 2].first == pairs[i].first))) {
            report.violations.push_back("parallel link " + name(pairs[i].first.first) + "–" +
                                        name(pairs[i].first.second));
        }
    }
    return report;
}

class partially_directed_graph {
public:
    partially_directed_graph() = default;

    // Throws graph_error listing every violation. Edge endpoints are stored
    // with first < second; link order follows the input order.
    partially_directed_graph(std::size_t vertex_count, std::vector<edge> edges, std::vector<arc> arcs)
        : vertex_count_(vertex_count), edges_(std::move(edges)), arcs_(std::move(arcs)) {
        auto report = validate(vertex_count_, edges_, arcs_);
        if (!report.ok()) {
            auto what = "invalid graph: " + report.violations.front();
            throw graph_error(what, std::move(report));
        }
        for (auto& e : edges_) e = make_edge(e.first, e.second);
        incident_.assign(vertex_count_, {});
        for (link_id l = 0; l < link_count(); ++l) {
            auto [a, b] = endpoints(l);
            incident_[a].push_back(l);
            incident_[b].push_back(l);
        }
    }

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }
    std::size_t link_count() const { return edges_.size() + arcs_.size(); }

    const std::vector<edge>& edges() const { return edges_; }
    const std::vector<arc>& arcs() const { return arcs_; }

    bool is_edge(link_id l) const { return l < edges_.size(); }
    const arc& fixed_arc(link_id l) const { return arcs_[l - edges_.size()]; }
    link_id arc_link(std::size_t arc_index) const { return static_cast<link_id>(edges_.size() + arc_index); }

    std::pair<vertex_id, vertex_id> endpoints(link_id l) const {
        if (is_edge(l)) return {edges_[l].first, edges_[l].second};
        const auto& a = fixed_arc(l);
        return {a.tail, a.head};
    }

    vertex_id other(link_id l, vertex_id v) const {
        auto [a, b] = endpoints(l);
        return a == v ? b : a;
    }

    std::span<const link_id> incident(vertex_id v) const { return incident_[v]; }
    std::size_t degree(vertex_id v) const { return incident_[v].size(); }

    std::size_t max_degree() const {
        std::size_t best = 0;
        for (const auto& inc : incident_) best = std::max(best, inc.size());
        return best;
    }

    std::optional<link_id> find_link(vertex_id u, vertex_id v) const {
        if (u >= vertex_count_ || v >= vertex_count_) return std::nullopt;
        const auto& smaller = degree(u) <= degree(v) ? incident_[u] : incident_[v];
        for (link_id l : smaller) {
            auto [a, b] = endpoints(l);
            if ((a == u && b == v) || (a == v && b == u)) return l;
        }
        return std::nullopt;
    }

    // Set equality of vertex count, edges and arcs; link order is ignored.
    friend bool operator==(const partially_directed_graph& x, const partially_directed_graph& y) {
        if (x.vertex_count_ != y.vertex_count_) return false;
        auto xe = x.edges_, ye = y.edges_;
        auto xa = x.arcs_, ya = y.arcs_;
        std::sort(xe.begin(), xe.end());
        std::sort(ye.begin(), ye.end());
        std::sort(xa.begin(), xa.end());
        std::sort(ya.begin(), ya.end());
        return xe == ye && xa == ya;
    }

private:
    std::size_t vertex_count_ = 0;
    std::vector<edge> edges_;
    std::vector<arc> arcs_;
    std::vector<std::vector<link_id>> incident_;
};

inline validation_report validate(const partially_directed_graph& g) {
    return validate(g.vertex_count(), g.edges(), g.arcs());
}

// Membership mask for a vertex subset; throws std::out_of_range on unknown ids.
inline std::vector<bool> vertex_mask(std::size_t vertex_count, std::span<const vertex_id> subset) {
    std::vector<bool> mask(vertex_count, false);
    for (vertex_id v : subset) {
        if (v >= vertex_count) throw std::out_of_range("unknown vertex " + std::to_string(v));
        mask[v] = true;
    }
    return mask;
}

inline std::vector<vertex_id> all_vertices(std::size_t vertex_count) {
    std::vector<vertex_id> out(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) out[v] = static_cast<vertex_id>(v);
    return out;
}

// An instance (G, T): odd in-degree is required exactly on the odd set.
class orientation_problem {
public:
    orientation_problem() = default;

    orientation_problem(partially_directed_graph graph, std::span<const vertex_id> odd_set)
        : graph_(std::move(graph)), odd_(vertex_mask(graph_.vertex_count(), odd_set)) {}

    orientation_problem(partially_directed_graph graph, std::vector<bool> odd_mask)
        : graph_(std::move(graph)), odd_(std::move(odd_mask)) {
        if (odd_.size() != graph_.vertex_count()) throw std::invalid_argument("odd mask size mismatch");
    }

    const partially_directed_graph& graph() const { return graph_; }
    bool is_odd(vertex_id v) const { return odd_[v]; }
    const std::vector<bool>& odd_mask() const { return odd_; }

    std::vector<vertex_id> odd_set() const {
        std::vector<vertex_id> out;
        for (std::size_t v = 0; v < odd_.size(); ++v)
            if (odd_[v]) out.push_back(static_cast<vertex_id>(v));
        return out;
    }

    std::size_t odd_count() const { return static_cast<std::size_t>(std::count(odd_.begin(), odd_.end(), true)); }

    friend bool operator==(const orientation_problem& x, const orientation_problem& y) {
        return x.odd_ == y.odd_ && x.graph_ == y.graph_;
    }

private:
    partially_directed_graph graph_;
    std::vector<bool> odd_;
};

// A total direction for every edge of one graph: forward[e] directs
// edges()[e] from first to second. Fixed arcs are implied.
struct orientation {
    std::vector<bool> forward;

    friend bool operator==(const orientation&, const orientation&) = default;
};

inline arc directed(const partially_directed_graph& g, const orientation& o, link_id l) {
    if (!g.is_edge(l)) return g.fixed_arc(l);
    const auto& e = g.edges()[l];
    return o.forward[l] ? arc{e.first, e.second} : arc{e.second, e.first};
}

inline void check_orientation(const partially_directed_graph& g, const orientation& o) {
    if (o.forward.size() != g.edge_count()) throw std::invalid_argument("orientation does not cover every edge");
}

// The full arc set O(G), fixed arcs included, in link order.
inline std::vector<arc> arc_set(const partially_directed_graph& g, const orientation& o) {
    check_orientation(g, o);
    std::vector<arc> out;
    out.reserve(g.link_count());
    for (link_id l = 0; l < g.link_count(); ++l) out.push_back(directed(g, o, l));
    return out;
}

// Inverse of arc_set: every edge must appear exactly once in some direction
// and every fixed arc must be present as given.
inline orientation orientation_from_arcs(const partially_directed_graph& g, std::span<const arc> arcs) {
    orientation o{std::vector<bool>(g.edge_count(), false)};
    std::vector<bool> seen(g.link_count(), false);
    for (const auto& a : arcs) {
        auto l = g.find_link(a.tail, a.head);
        if (!l) {
            throw std::invalid_argument("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                                        " is not a link of the graph");
        }
        if (seen[*l]) throw std::invalid_argument("link given twice: " + std::to_string(*l));
        seen[*l] = true;
        if (g.is_edge(*l)) {
            o.forward[*l] = g.edges()[*l].first == a.tail;
        } else if (!(g.fixed_arc(*l) == a)) {
            throw std::invalid_argument("fixed arc reversed: " + std::to_string(a.head) + "->" +
                                        std::to_string(a.tail));
        }
    }
    for (link_id l = 0; l < g.edge_count(); ++l)
        if (!seen[l]) throw std::invalid_argument("edge left undirected: " + std::to_string(l));
    return o;
}

inline std::vector<std::size_t> in_degrees(const partially_directed_graph& g, const orientation& o) {
    check_orientation(g, o);
    std::vector<std::size_t> in(g.vertex_count(), 0);
    for (link_id l = 0; l < g.link_count(); ++l) ++in[directed(g, o, l).head];
    return in;
}

// delta-circ, delta-plus and delta-minus of a vertex subset.
struct boundary_view {
    std::vector<edge> undirected;
    std::vector<arc> outward;
    std::vector<arc> inward;

    std::size_t size() const { return undirected.size() + outward.size() + inward.size(); }
};

inline std::vector<link_id> boundary_links(const partially_directed_graph& g, std::span<const vertex_id> subset) {
    auto inside = vertex_mask(g.vertex_count(), subset);
    std::vector<link_id> out;
    for (link_id l = 0; l < g.link_count(); ++l) {
        auto [a, b] = g.endpoints(l);
        if (inside[a] != inside[b]) out.push_back(l);
    }
    return out;
}

// With an orientation every crossing edge is classified as an arc, so the
// undirected part is empty.
inline boundary_view boundary(const partially_directed_graph& g, std::span<const vertex_id> subset,
                              const orientation* o = nullptr) {
    auto inside = vertex_mask(g.vertex_count(), subset);
    if (o) check_orientation(g, *o);
    boundary_view view;
    for (link_id l = 0; l < g.link_count(); ++l) {
        auto [a, b] = g.endpoints(l);
        if (inside[a] == inside[b]) continue;
        if (g.is_edge(l) && !o) {
            view.undirected.push_back(g.edges()[l]);
            continue;
        }
        arc x = o ? directed(g, *o, l) : g.fixed_arc(l);
        (inside[x.tail] ? view.outward : view.inward).push_back(x);
    }
    return view;
}

inline bool is_uniform(const boundary_view& view) {
    return view.undirected.empty() && (view.outward.empty() || view.inward.empty());
}

// The subgraph Gamma_H spanned by E(H), A(H) and delta(H). Local vertex ids
// list H first (ascending) and then the outside endpoints (ascending).
struct subgraph {
    partially_directed_graph graph;
    std::vector<vertex_id> parent_vertex;
    std::vector<link_id> parent_link;

    std::optional<vertex_id> local(vertex_id parent) const {
        auto it = std::find(parent_vertex.begin(), parent_vertex.end(), parent);
        if (it == parent_vertex.end()) return std::nullopt;
        return static_cast<vertex_id>(it - parent_vertex.begin());
    }
};

inline subgraph gamma_subgraph(const partially_directed_graph& g, std::span<const vertex_id> subset) {
    auto inside = vertex_mask(g.vertex_count(), subset);
    std::vector<bool> touched = inside;
    std::vector<link_id> links;
    for (link_id l = 0; l < g.link_count(); ++l) {
        auto [a, b] = g.endpoints(l);
        if (inside[a] || inside[b]) {
            links.push_back(l);
            touched[a] = touched[b] = true;
        }
    }
    subgraph out;
    std::vector<vertex_id> local(g.vertex_count(), 0);
    for (int pass = 0; pass < 2; ++pass) {
        for (vertex_id v = 0; v < g.vertex_count(); ++v) {
            bool take = pass == 0 ? inside[v] : (touched[v] && !inside[v]);
            if (!take) continue;
            local[v] = static_cast<vertex_id>(out.parent_vertex.size());
            out.parent_vertex.push_back(v);
        }
    }
    std::vector<edge> edges;
    std::vector<arc> arcs;
    std::vector<link_id> edge_links, arc_links;
    for (link_id l : links) {
        auto [a, b] = g.endpoints(l);
        if (g.is_edge(l)) {
            edges.push_back({local[a], local[b]});
            edge_links.push_back(l);
        } else {
            arcs.push_back({local[a], local[b]});
            arc_links.push_back(l);
        }
    }
    out.parent_link = edge_links;
    out.parent_link.insert(out.parent_link.end(), arc_links.begin(), arc_links.end());
    out.graph = partially_directed_graph(out.parent_vertex.size(), std::move(edges), std::move(arcs));
    return out;
}

// Gamma_H as an instance of its own: T restricted to the subgraph, plus the
// local ids of H to use as the parity scope.
struct scoped_problem {
    orientation_problem problem;
    std::vector<vertex_id> scope;
    subgraph mapping;
};

inline scoped_problem gamma_problem(const orientation_problem& p, std::span<const vertex_id> subset) {
    scoped_problem out;
    out.mapping = gamma_subgraph(p.graph(), subset);
    std::vector<bool> odd(out.mapping.parent_vertex.size());
    for (std::size_t v = 0; v < odd.size(); ++v) odd[v] = p.is_odd(out.mapping.parent_vertex[v]);
    out.problem = orientation_problem(out.mapping.graph, std::move(odd));
    for (std::size_t v = 0; v < subset.size(); ++v) out.scope.push_back(static_cast<vertex_id>(v));
    return out;
}

// Restriction of a parent orientation to a subgraph's links.
inline orientation restrict_to(const subgraph& sub, const partially_directed_graph& parent, const orientation& o) {
    check_orientation(parent, o);
    orientation local{std::vector<bool>(sub.graph.edge_count())};
    for (link_id l = 0; l < sub.graph.edge_count(); ++l) {
        arc x = directed(parent, o, sub.parent_link[l]);
        local.forward[l] = sub.parent_vertex[sub.graph.edges()[l].first] == x.tail;
    }
    return local;
}

// O(S'): the arcs of o covering the requested links.
inline std::vector<arc> restrict(const partially_directed_graph& g, const orientation& o,
                                 std::span<const link_id> links) {
    check_orientation(g, o);
    std::vector<arc> out;
    out.reserve(links.size());
    for (link_id l : links) {
        if (l >= g.link_count()) throw std::out_of_range("unknown link " + std::to_string(l));
        out.push_back(directed(g, o, l));
    }
    return out;
}

// Vertices of the scope have odd in-degree exactly when they are in T.
inline bool is_T_odd_on(const orientation_problem& p, const orientation& o, std::span<const vertex_id> scope) {
    auto in = in_degrees(p.graph(), o);
    for (vertex_id v : scope) {
        if (v >= in.size()) throw std::out_of_range("unknown vertex " + std::to_string(v));
        if ((in[v] % 2 == 1) != p.is_odd(v)) return false;
    }
    return true;
}

inline bool is_T_odd(const orientation_problem& p, const orientation& o) {
    return is_T_odd_on(p, o, all_vertices(p.graph().vertex_count()));
}

// Handshake condition |E| + |A| + |T| even. The in-degrees of any
// orientation sum to |E| + |A|, so this is necessary for a T-odd orientation;
// for undirected graphs it is the classical existence criterion.
inline bool parity_feasible(const orientation_problem& p) {
    return (p.graph().edge_count() + p.graph().arc_count() + p.odd_count()) % 2 == 0;
}

// Reversing every arc. The result orients the reversed graph (see
// reversed_graph), with in-degree d(v) - previous in-degree.
inline orientation flip_all(const orientation& o) {
    orientation out = o;
    out.forward.flip();
    return out;
}

inline std::vector<arc> flip_all(std::span<const arc> arcs) {
    std::vector<arc> out;
    out.reserve(arcs.size());
    for (const auto& a : arcs) out.push_back(reversed(a));
    return out;
}

inline partially_directed_graph reversed_graph(const partially_directed_graph& g) {
    auto arcs = flip_all(g.arcs());
    return partially_directed_graph(g.vertex_count(), g.edges(), std::move(arcs));
}

}  // namespace aop

#endif  // AOP_GRAPH_HPP
