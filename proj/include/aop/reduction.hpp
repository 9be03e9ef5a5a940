#ifndef AOP_REDUCTION_HPP
#define AOP_REDUCTION_HPP

// Planar 3-SAT to acyclic T-odd orientation. One variable gadget per
// variable with one copy of M per occurrence, one clause gadget per clause,
// and for the occurrence of x in c (copy k = position of c around x, port
// p = position of x around c) the connectors u_x^k - v̂_p^c and û_x^k - v_p^c.
//
// A variable gadget is either all-in or all-out on its boundary; all-out
// reads as true. A clause gadget has an acyclic T-odd completion iff at
// least one of its ports is driven by a true literal.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "aop/acyclicity.hpp"
#include "aop/decide.hpp"
#include "aop/gadgets.hpp"
#include "aop/graph.hpp"
#include "aop/planar.hpp"

namespace aop {

struct gadget_owner {
    enum class kind : std::uint8_t { variable, clause };
    kind type = kind::variable;
    std::uint32_t index = 0;  // variable or clause, 0-based
    std::uint32_t copy = 0;   // copy of M (variables only)
    std::uint8_t role = 0;    // base_role or clause slot

    friend bool operator==(const gadget_owner&, const gadget_owner&) = default;
};

struct gadget_registry {
    std::vector<std::vector<base_copy>> variables;  // [variable][copy]
    std::vector<clause_block> clauses;
    std::vector<std::string> labels;  // per vertex
    std::vector<gadget_owner> owners;  // per vertex

    std::vector<vertex_id> variable_vertices(std::size_t i) const {
        std::vector<vertex_id> out;
        for (const auto& m : variables[i]) out.insert(out.end(), m.begin(), m.end());
        return out;
    }

    std::vector<vertex_id> clause_vertices(std::size_t j) const { return {clauses[j].begin(), clauses[j].end()}; }

    friend bool operator==(const gadget_registry&, const gadget_registry&) = default;
};

struct reduction_artifact {
    orientation_problem problem;
    gadget_registry registry;
    rotation_system rotation;  // over all links, arcs included
    planar_formula source;
};

inline gadget_registry make_registry(std::vector<std::string> labels, std::vector<std::vector<base_copy>> variables,
                                     std::vector<clause_block> clauses) {
    const auto count = labels.size();
    gadget_registry r{std::move(variables), std::move(clauses), std::move(labels), {}};
    r.owners.assign(count, {});
    for (std::uint32_t i = 0; i < r.variables.size(); ++i)
        for (std::uint32_t k = 0; k < r.variables[i].size(); ++k)
            for (std::uint8_t role = 0; role < 10; ++role)
                r.owners.at(r.variables[i][k][role]) = {gadget_owner::kind::variable, i, k, role};
    for (std::uint32_t j = 0; j < r.clauses.size(); ++j)
        for (std::uint8_t slot = 0; slot < 12; ++slot)
            r.owners.at(r.clauses[j][slot]) = {gadget_owner::kind::clause, j, 0, slot};
    return r;
}

inline reduction_artifact assemble(const planar_formula& pf) {
    require_base_gadget_count();
    const auto& f = pf.formula;
    const auto n = f.variable_count();
    const auto m = f.clause_count();

    gadget_builder b;
    std::vector<std::vector<base_copy>> variables(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = pf.rotation.order[i].size();
        if (d > 0) variables[i] = build_variable_gadget(b, i, d);
    }
    std::vector<clause_block> clauses;
    for (std::size_t j = 0; j < m; ++j) {
        std::array<bool, 3> positive{};
        for (std::size_t p = 0; p < 3; ++p) {
            auto x = pf.rotation.order[n + j][p];
            positive[p] = f.clauses()[j][*f.position(j, x)].positive;
        }
        clauses.push_back(build_clause_gadget(b, j, positive));
    }

    // connector partners, filled while wiring
    std::vector<std::vector<std::pair<vertex_id, vertex_id>>> copy_partner(n);  // {of u, of û}
    for (std::size_t i = 0; i < n; ++i) copy_partner[i].resize(variables[i].size());
    std::vector<std::array<std::optional<std::pair<vertex_id, vertex_id>>, 3>> port_partner(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t p = 0; p < 3; ++p) {
            auto x = pf.rotation.order[n + j][p];
            auto k = pf.variable_port(x, j);
            const auto& copy = variables[x][k];
            vertex_id u = at(copy, base_role::u), uh = at(copy, base_role::u_hat);
            vertex_id v = clauses[j][v_slot(p)], vh = clauses[j][v_hat_slot(p)];
            b.edges.push_back({u, vh});
            b.edges.push_back({uh, v});
            copy_partner[x][k] = {vh, v};
            port_partner[j][p] = std::pair{uh, u};
        }
    }

    reduction_artifact out{b.problem(), make_registry(b.labels, variables, clauses), {}, pf};
    out.rotation.order.assign(b.vertex_count(), {});
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = variables[i].size();
        for (std::size_t k = 0; k < d; ++k) {
            base_neighbors ext{copy_partner[i][k].first, copy_partner[i][k].second,
                               at(variables[i][(k + d - 1) % d], base_role::t),
                               at(variables[i][(k + 1) % d], base_role::s)};
            rotate_base(out.rotation, variables[i][k], ext);
        }
    }
    for (std::size_t j = 0; j < m; ++j) rotate_clause(out.rotation, clauses[j], port_partner[j]);
    return out;
}

struct structural_report {
    embedding_report embedding;
    std::size_t max_degree = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Planarity of the stored rotation, degree bounds, the parity condition,
// registry consistency, and the absence of links between clause gadgets.
inline structural_report structural_check(const reduction_artifact& r) {
    structural_report out;
    const auto& p = r.problem;
    const auto& g = p.graph();
    auto links = link_edges(g);
    try {
        out.embedding = validate_embedding(g.vertex_count(), links, r.rotation);
        if (!out.embedding.valid) out.failures.push_back("embedding: " + out.embedding.problems.front());
    } catch (const embedding_error& e) {
        out.failures.push_back(std::string("embedding: ") + e.what());
    }
    out.max_degree = g.max_degree();
    if (out.max_degree > 3) out.failures.push_back("maximum degree " + std::to_string(out.max_degree) + " > 3");
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        if (!p.is_odd(v) && g.degree(v) != 2) {
            out.failures.push_back("vertex " + r.registry.labels[v] + " outside T has degree " +
                                   std::to_string(g.degree(v)));
            break;
        }
    }
    if (!parity_feasible(p)) out.failures.push_back("|E| + |A| + |T| is odd");

    std::vector<int> seen(g.vertex_count(), 0);
    for (const auto& copies : r.registry.variables)
        for (const auto& c : copies)
            for (auto v : c) ++seen[v];
    for (const auto& c : r.registry.clauses)
        for (auto v : c) ++seen[v];
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        if (seen[v] != 1) {
            out.failures.push_back("registry covers vertex " + std::to_string(v) + " " + std::to_string(seen[v]) +
                                   " times");
            break;
        }
    }
    if (r.registry.labels.size() != g.vertex_count() || r.registry.owners.size() != g.vertex_count())
        out.failures.push_back("registry size mismatch");
    else {
        for (link_id l = 0; l < g.link_count(); ++l) {
            auto [a, b] = g.endpoints(l);
            const auto& oa = r.registry.owners[a];
            const auto& ob = r.registry.owners[b];
            if (oa.type == gadget_owner::kind::clause && ob.type == gadget_owner::kind::clause &&
                oa.index != ob.index) {
                out.failures.push_back("link between clause gadgets " + std::to_string(oa.index + 1) + " and " +
                                       std::to_string(ob.index + 1));
                break;
            }
        }
    }
    return out;
}

class malformed_witness : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Repeatedly directs the last open edge at a vertex so that its in-degree
// parity is right. dir: -1 open, 1 forward, 0 backward (per edge).
inline bool settle_parity(const orientation_problem& p, std::vector<std::int8_t>& dir) {
    const auto& g = p.graph();
    std::vector<vertex_id> queue(g.vertex_count());
    for (vertex_id v = 0; v < g.vertex_count(); ++v) queue[v] = v;
    while (!queue.empty()) {
        vertex_id v = queue.back();
        queue.pop_back();
        std::optional<link_id> open;
        std::size_t open_count = 0, in = 0;
        for (link_id l : g.incident(v)) {
            if (g.is_edge(l) && dir[l] < 0) {
                ++open_count;
                open = l;
                continue;
            }
            auto [tail, head] = g.is_edge(l) ? (dir[l] ? std::pair{g.edges()[l].first, g.edges()[l].second}
                                                      : std::pair{g.edges()[l].second, g.edges()[l].first})
                                            : std::pair{g.fixed_arc(l).tail, g.fixed_arc(l).head};
            (void)tail;
            if (head == v) ++in;
        }
        if (open_count == 0) {
            if ((in % 2 == 1) != p.is_odd(v)) return false;
            continue;
        }
        if (open_count > 1) continue;
        bool want_in = (in % 2 == 1) != p.is_odd(v);
        const auto& e = g.edges()[*open];
        dir[*open] = static_cast<std::int8_t>(want_in == (e.second == v));
        queue.push_back(g.other(*open, v));
    }
    return true;
}

inline void seed(const partially_directed_graph& g, std::vector<std::int8_t>& dir, vertex_id tail, vertex_id head) {
    auto l = g.find_link(tail, head);
    if (!l || !g.is_edge(*l)) throw std::logic_error("seed: no edge between the given vertices");
    dir[*l] = static_cast<std::int8_t>(g.edges()[*l].first == tail);
}

}  // namespace detail

// Directs every copy by its variable's mode (true: all boundary links
// out), lets parity fix the rest of each variable gadget and the
// connectors, then completes each clause. A clause completion is started
// at ŵ_1 -> w_2; if that closes the hexagon into a directed cycle the other
// completion is used.
inline orientation orientation_from_assignment(const reduction_artifact& r, const assignment& values) {
    const auto& p = r.problem;
    const auto& g = p.graph();
    const auto& f = r.source.formula;
    if (values.size() != f.variable_count()) throw std::invalid_argument("assignment is not total");
    std::vector<std::int8_t> dir(g.edge_count(), -1);
    for (std::size_t i = 0; i < r.registry.variables.size(); ++i) {
        for (const auto& m : r.registry.variables[i]) {
            using enum base_role;
            if (values[i]) {
                detail::seed(g, dir, at(m, a), at(m, u));
                detail::seed(g, dir, at(m, e), at(m, s));
            } else {
                detail::seed(g, dir, at(m, u), at(m, a));
                detail::seed(g, dir, at(m, s), at(m, e));
            }
        }
    }
    if (!detail::settle_parity(p, dir)) throw std::logic_error("variable gadget completion failed parity");
    for (const auto& c : r.registry.clauses) {
        std::optional<std::vector<std::int8_t>> first_valid, acyclic;
        for (bool flip : {false, true}) {
            auto trial = dir;
            if (!flip)
                detail::seed(g, trial, c[w_hat_slot(0)], c[w_slot(1)]);
            else
                detail::seed(g, trial, c[w_slot(1)], c[w_hat_slot(0)]);
            if (!detail::settle_parity(p, trial)) continue;
            std::set<vertex_id> tails;
            bool complete = true;
            for (std::size_t q = 0; q < 6; ++q) {
                auto l = *g.find_link(c[q], c[(q + 1) % 6]);
                if (trial[l] < 0)
                    complete = false;
                else
                    tails.insert(trial[l] ? g.edges()[l].first : g.edges()[l].second);
            }
            if (!complete) continue;
            if (!first_valid) first_valid = trial;
            if (tails.size() < 6) {  // six distinct tails: directed hexagon
                acyclic = std::move(trial);
                break;
            }
        }
        if (!first_valid) throw std::logic_error("clause completion failed parity");
        dir = acyclic ? std::move(*acyclic) : std::move(*first_valid);
    }
    orientation o{std::vector<bool>(g.edge_count())};
    for (link_id l = 0; l < g.edge_count(); ++l) {
        if (dir[l] < 0) throw std::logic_error("edge left undirected");
        o.forward[l] = dir[l] == 1;
    }
    return o;
}

// Reads each variable gadget's mode off its boundary: all-out is true,
// all-in is false. Variables without occurrences are set to false.
inline assignment assignment_from_orientation(const reduction_artifact& r, const orientation& o) {
    const auto& g = r.problem.graph();
    check_orientation(g, o);
    assignment a(r.source.formula.variable_count(), false);
    for (std::size_t i = 0; i < r.registry.variables.size(); ++i) {
        if (r.registry.variables[i].empty()) continue;
        auto vs = r.registry.variable_vertices(i);
        auto view = boundary(g, vs, &o);
        if (!view.undirected.empty()) throw malformed_witness("variable boundary holds undirected links");
        if (view.inward.empty())
            a[i] = true;
        else if (view.outward.empty())
            a[i] = false;
        else
            throw malformed_witness("variable " + std::to_string(i + 1) + " has a mixed boundary");
    }
    return a;
}

// |δ⁻(W)| of clause j counted by port: the number of ports (0..3) whose
// two matching edges point into the hexagon. Throws malformed_witness
// when the two edges of a port disagree.
inline unsigned clause_boundary_class(const reduction_artifact& r, std::size_t j, const orientation& o) {
    const auto& g = r.problem.graph();
    const auto& c = r.registry.clauses[j];
    unsigned inward = 0;
    for (std::size_t p = 0; p < 3; ++p) {
        int in_pair = 0;
        for (auto [rim, port] : {std::pair{w_slot(p), v_slot(p)}, {w_hat_slot(p), v_hat_slot(p)}}) {
            auto l = g.find_link(c[rim], c[port]);
            if (!l) throw malformed_witness("clause gadget is missing a matching edge");
            if (directed(g, o, *l).head == c[rim]) ++in_pair;
        }
        if (in_pair == 1) throw malformed_witness("clause " + std::to_string(j + 1) + " port pair is split");
        if (in_pair == 2) ++inward;
    }
    return inward;
}

struct equivalence_report {
    bool satisfiable = false;
    solve_status orientation_status = solve_status::aborted;
    bool agree = false;
    bool constructive_ok = true;  // witness built from the assignment is valid
    bool extracted_ok = true;     // assignment read off the solver witness satisfies
    std::string detail;

    bool ok() const { return agree && constructive_ok && extracted_ok; }
};

inline bool valid_witness(const orientation_problem& p, const orientation& o) {
    return o.forward.size() == p.graph().edge_count() && is_T_odd(p, o) && is_acyclic(p.graph(), o).acyclic;
}

inline equivalence_report verify_equivalence(const reduction_artifact& r, search_limits limits = {},
                                             unsigned sat_budget = 24) {
    equivalence_report out;
    auto sat = sat_oracle(r.source.formula, sat_budget);
    out.satisfiable = sat.has_value();
    auto res = decide(r.problem, limits);
    out.orientation_status = res.status;
    out.agree = res.status != solve_status::aborted && out.satisfiable == res.feasible();
    if (!out.agree) {
        out.detail = std::string("formula is ") + (out.satisfiable ? "satisfiable" : "unsatisfiable") +
                     ", orientation search: " + std::string(to_string(res.status));
    }
    if (sat) {
        try {
            out.constructive_ok = valid_witness(r.problem, orientation_from_assignment(r, *sat));
        } catch (const std::logic_error& e) {
            out.constructive_ok = false;
            out.detail = e.what();
        }
        if (!out.constructive_ok && out.detail.empty()) out.detail = "constructed orientation is invalid";
    }
    if (res.feasible() && res.witness) {
        try {
            out.extracted_ok = eval(r.source.formula, assignment_from_orientation(r, *res.witness));
        } catch (const malformed_witness& e) {
            out.extracted_ok = false;
            out.detail = e.what();
        }
        if (!out.extracted_ok && out.detail.empty()) out.detail = "extracted assignment does not satisfy";
    }
    return out;
}

inline equivalence_report verify_equivalence(const planar_formula& pf, search_limits limits = {},
                                             unsigned sat_budget = 24) {
    return verify_equivalence(assemble(pf), limits, sat_budget);
}

}  // namespace aop

#endif  // AOP_REDUCTION_HPP
