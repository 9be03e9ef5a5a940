#ifndef AOP_GADGETS_HPP
#define AOP_GADGETS_HPP

// Building blocks of the reduction from planar 3-SAT.
//
// Base gadget M: path u-a-b-c-d-û, path s-e-f-t, fixed arcs a->s, e->b,
// f->c, d->t, odd set V(M) minus û. Variable gadget: d copies of M with
// edges t^k - s^(k+1) around a ring. Clause gadget: the 6-cycle w1 ŵ1 w2 ŵ2
// w3 ŵ3 with pendant ports v_k - w_k and v̂_k - ŵ_k; W is odd, and a port
// pair is odd iff its literal is positive.
//
// Cyclic neighbour orders are clockwise in a drawing where each copy of M
// has its u..û path on the outside of the variable ring, and the clause
// hexagon lists w1, ŵ1, w2, ŵ2, w3, ŵ3 clockwise with ports outside.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aop/enumerate.hpp"
#include "aop/graph.hpp"
#include "aop/rotation.hpp"

namespace aop {

enum class base_role : std::uint8_t { u, a, b, c, d, u_hat, s, e, f, t };
inline constexpr std::array<std::string_view, 10> base_role_names{"u", "a", "b", "c", "d", "û", "s", "e", "f", "t"};

// Clause vertices: w_p at 2p, ŵ_p at 2p + 1, v_p at 6 + 2p, v̂_p at 7 + 2p
// (p = 0, 1, 2 is the 0-based port).
inline constexpr std::array<std::string_view, 12> clause_role_names{"w_1", "ŵ_1", "w_2", "ŵ_2", "w_3", "ŵ_3",
                                                                   "v_1", "v̂_1", "v_2", "v̂_2", "v_3", "v̂_3"};
constexpr std::size_t w_slot(std::size_t port) { return 2 * port; }
constexpr std::size_t w_hat_slot(std::size_t port) { return 2 * port + 1; }
constexpr std::size_t v_slot(std::size_t port) { return 6 + 2 * port; }
constexpr std::size_t v_hat_slot(std::size_t port) { return 7 + 2 * port; }

using base_copy = std::array<vertex_id, 10>;
using clause_block = std::array<vertex_id, 12>;

constexpr vertex_id at(const base_copy& m, base_role r) { return m[static_cast<std::size_t>(r)]; }

// Accumulates vertices, links and the odd set of a graph under construction.
struct gadget_builder {
    std::vector<edge> edges;
    std::vector<arc> arcs;
    std::vector<bool> odd;
    std::vector<std::string> labels;

    vertex_id add_vertex(std::string label, bool in_odd_set) {
        labels.push_back(std::move(label));
        odd.push_back(in_odd_set);
        return static_cast<vertex_id>(odd.size() - 1);
    }

    std::size_t vertex_count() const { return odd.size(); }

    orientation_problem problem() const {
        return orientation_problem(partially_directed_graph(vertex_count(), edges, arcs), odd);
    }
};

// `suffix` is appended to every label, e.g. "_2^3".
inline base_copy build_base_gadget(gadget_builder& builder, const std::string& suffix) {
    base_copy m{};
    for (std::size_t r = 0; r < 10; ++r) {
        m[r] = builder.add_vertex(std::string(base_role_names[r]) + suffix, r != static_cast<std::size_t>(base_role::u_hat));
    }
    using enum base_role;
    for (auto [x, y] : {std::pair{u, a}, {a, b}, {b, c}, {c, d}, {d, u_hat}, {s, e}, {e, f}, {f, t}})
        builder.edges.push_back({at(m, x), at(m, y)});
    for (auto [x, y] : {std::pair{a, s}, {e, b}, {f, c}, {d, t}}) builder.arcs.push_back({at(m, x), at(m, y)});
    return m;
}

inline std::string copy_suffix(std::size_t variable, std::size_t copy) {
    return "_" + std::to_string(variable + 1) + "^" + std::to_string(copy + 1);
}

// Copies k = 0..d-1 joined by t^k - s^(k+1 mod d).
inline std::vector<base_copy> build_variable_gadget(gadget_builder& b, std::size_t variable, std::size_t degree) {
    if (degree == 0) throw std::invalid_argument("variable gadget needs degree >= 1");
    std::vector<base_copy> copies;
    for (std::size_t k = 0; k < degree; ++k) copies.push_back(build_base_gadget(b, copy_suffix(variable, k)));
    for (std::size_t k = 0; k < degree; ++k) {
        b.edges.push_back({at(copies[k], base_role::t), at(copies[(k + 1) % degree], base_role::s)});
    }
    return copies;
}

// positive[p]: the literal at port p is positive.
inline clause_block build_clause_gadget(gadget_builder& b, std::size_t clause, const std::array<bool, 3>& positive) {
    clause_block c{};
    const std::string sup = "^" + std::to_string(clause + 1);
    for (std::size_t r = 0; r < 12; ++r) {
        bool odd = r < 6 || positive[(r - 6) / 2];
        c[r] = b.add_vertex(std::string(clause_role_names[r]) + sup, odd);
    }
    for (std::size_t r = 0; r < 6; ++r) b.edges.push_back({c[r], c[(r + 1) % 6]});
    for (std::size_t p = 0; p < 3; ++p) {
        b.edges.push_back({c[v_slot(p)], c[w_slot(p)]});
        b.edges.push_back({c[v_hat_slot(p)], c[w_hat_slot(p)]});
    }
    return c;
}

// Outside neighbours of one copy of M; absent ones are skipped.
struct base_neighbors {
    std::optional<vertex_id> u, u_hat, s, t;
};

inline void rotate_base(rotation_system& r, const base_copy& m, const base_neighbors& ext) {
    using enum base_role;
    auto put = [&](base_role v, std::initializer_list<std::optional<vertex_id>> around) {
        auto& o = r.order[at(m, v)];
        o.clear();
        for (auto w : around)
            if (w) o.push_back(*w);
    };
    put(u, {at(m, a), ext.u});
    put(a, {at(m, u), at(m, b), at(m, s)});
    put(b, {at(m, a), at(m, c), at(m, e)});
    put(c, {at(m, b), at(m, d), at(m, f)});
    put(d, {at(m, c), at(m, u_hat), at(m, t)});
    put(u_hat, {at(m, d), ext.u_hat});
    put(s, {ext.s, at(m, a), at(m, e)});
    put(e, {at(m, s), at(m, b), at(m, f)});
    put(f, {at(m, e), at(m, c), at(m, t)});
    put(t, {at(m, f), at(m, d), ext.t});
}

// port_partner[p] = {neighbour of v_p, neighbour of v̂_p} outside the gadget.
inline void rotate_clause(rotation_system& r, const clause_block& c,
                          const std::array<std::optional<std::pair<vertex_id, vertex_id>>, 3>& port_partner) {
    for (std::size_t q = 0; q < 6; ++q) {
        std::size_t port = q / 2;
        vertex_id pendant = c[q % 2 == 0 ? v_slot(port) : v_hat_slot(port)];
        r.order[c[q]] = {pendant, c[(q + 1) % 6], c[(q + 5) % 6]};
    }
    for (std::size_t p = 0; p < 3; ++p) {
        r.order[c[v_slot(p)]] = {c[w_slot(p)]};
        r.order[c[v_hat_slot(p)]] = {c[w_hat_slot(p)]};
        if (port_partner[p]) {
            r.order[c[v_slot(p)]].push_back(port_partner[p]->first);
            r.order[c[v_hat_slot(p)]].push_back(port_partner[p]->second);
        }
    }
}

// A gadget on its own, with one stub vertex per outside link so that it
// spans Gamma of the gadget. The stubs are not in the parity scope.
struct gadget_instance {
    orientation_problem problem;
    std::vector<vertex_id> scope;
    std::vector<std::string> labels;
    rotation_system rotation;
};

inline std::vector<edge> link_edges(const partially_directed_graph& g) {
    std::vector<edge> out;
    for (link_id l = 0; l < g.link_count(); ++l) {
        auto [a, b] = g.endpoints(l);
        out.push_back({a, b});
    }
    return out;
}

inline gadget_instance base_gadget_instance() {
    gadget_builder b;
    auto m = build_base_gadget(b, "");
    base_neighbors ext;
    ext.u = b.add_vertex("γ_u", false);
    ext.u_hat = b.add_vertex("γ_û", false);
    ext.s = b.add_vertex("γ_s", false);
    ext.t = b.add_vertex("γ_t", false);
    b.edges.push_back({at(m, base_role::u), *ext.u});
    b.edges.push_back({at(m, base_role::u_hat), *ext.u_hat});
    b.edges.push_back({at(m, base_role::s), *ext.s});
    b.edges.push_back({at(m, base_role::t), *ext.t});
    gadget_instance out{b.problem(), {m.begin(), m.end()}, b.labels, {}};
    out.rotation.order.assign(b.vertex_count(), {});
    rotate_base(out.rotation, m, ext);
    out.rotation.order[*ext.u] = {at(m, base_role::u)};
    out.rotation.order[*ext.u_hat] = {at(m, base_role::u_hat)};
    out.rotation.order[*ext.s] = {at(m, base_role::s)};
    out.rotation.order[*ext.t] = {at(m, base_role::t)};
    return out;
}

inline gadget_instance variable_gadget_instance(std::size_t degree) {
    gadget_builder b;
    auto copies = build_variable_gadget(b, 0, degree);
    std::vector<vertex_id> scope(b.vertex_count());
    for (std::size_t v = 0; v < scope.size(); ++v) scope[v] = static_cast<vertex_id>(v);
    std::vector<std::pair<vertex_id, vertex_id>> stubs;
    for (std::size_t k = 0; k < degree; ++k) {
        auto su = b.add_vertex("γ_u" + copy_suffix(0, k), false);
        auto sh = b.add_vertex("γ_û" + copy_suffix(0, k), false);
        b.edges.push_back({at(copies[k], base_role::u), su});
        b.edges.push_back({at(copies[k], base_role::u_hat), sh});
        stubs.push_back({su, sh});
    }
    gadget_instance out{b.problem(), std::move(scope), b.labels, {}};
    out.rotation.order.assign(b.vertex_count(), {});
    for (std::size_t k = 0; k < degree; ++k) {
        base_neighbors ext{stubs[k].first, stubs[k].second, at(copies[(k + degree - 1) % degree], base_role::t),
                           at(copies[(k + 1) % degree], base_role::s)};
        rotate_base(out.rotation, copies[k], ext);
        out.rotation.order[stubs[k].first] = {at(copies[k], base_role::u)};
        out.rotation.order[stubs[k].second] = {at(copies[k], base_role::u_hat)};
    }
    return out;
}

// With `port_true` the stub links become fixed arcs, directed as an
// adjacent variable gadget would direct them: true (all-out mode) points
// both connectors into the clause.
inline gadget_instance clause_gadget_instance(const std::array<bool, 3>& positive,
                                              std::optional<std::array<bool, 3>> port_true = std::nullopt) {
    gadget_builder b;
    auto c = build_clause_gadget(b, 0, positive);
    std::vector<vertex_id> scope(c.begin(), c.end());
    std::array<std::optional<std::pair<vertex_id, vertex_id>>, 3> partners;
    for (std::size_t p = 0; p < 3; ++p) {
        auto for_v = b.add_vertex("γ_" + std::string(clause_role_names[v_slot(p)]), false);
        auto for_v_hat = b.add_vertex("γ_" + std::string(clause_role_names[v_hat_slot(p)]), false);
        partners[p] = {for_v, for_v_hat};
        for (auto [stub, port] : {std::pair{for_v, c[v_slot(p)]}, {for_v_hat, c[v_hat_slot(p)]}}) {
            if (!port_true)
                b.edges.push_back({stub, port});
            else if ((*port_true)[p])
                b.arcs.push_back({stub, port});
            else
                b.arcs.push_back({port, stub});
        }
    }
    gadget_instance out{b.problem(), std::move(scope), b.labels, {}};
    out.rotation.order.assign(b.vertex_count(), {});
    rotate_clause(out.rotation, c, partners);
    for (std::size_t p = 0; p < 3; ++p) {
        out.rotation.order[partners[p]->first] = {c[v_slot(p)]};
        out.rotation.order[partners[p]->second] = {c[v_hat_slot(p)]};
    }
    return out;
}

// The arc placement of M is only correct if its Gamma has exactly two
// acyclic orientations that are T-odd on M; checked once per process.
inline void require_base_gadget_count() {
    static const std::uint64_t count = [] {
        auto g = base_gadget_instance();
        return enumerate(g.problem, g.scope, {.witness_cap = 0}).total_valid;
    }();
    if (count != 2) {
        throw std::logic_error("base gadget self-check failed: " + std::to_string(count) +
                               " acyclic T-odd orientations instead of 2");
    }
}

}  // namespace aop

#endif  // AOP_GADGETS_HPP
