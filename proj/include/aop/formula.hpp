#ifndef AOP_FORMULA_HPP
#define AOP_FORMULA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aop/graph.hpp"

namespace aop {

struct literal {
    std::uint32_t variable = 0;  // 0-based
    bool positive = true;

    friend bool operator==(const literal&, const literal&) = default;
};

using clause = std::array<literal, 3>;
using assignment = std::vector<bool>;

class formula_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A 3-CNF formula: three distinct variables per clause, so no clause holds
// a variable together with its negation.
class formula {
public:
    formula() = default;

    formula(std::size_t variable_count, std::vector<clause> clauses)
        : variable_count_(variable_count), clauses_(std::move(clauses)) {
        for (std::size_t j = 0; j < clauses_.size(); ++j) {
            const auto& c = clauses_[j];
            for (std::size_t a = 0; a < 3; ++a) {
                if (c[a].variable >= variable_count_)
                    throw formula_error("clause " + std::to_string(j + 1) + ": variable out of range");
                for (std::size_t b = a + 1; b < 3; ++b) {
                    if (c[a].variable != c[b].variable) continue;
                    throw formula_error("clause " + std::to_string(j + 1) +
                                        (c[a].positive == c[b].positive ? ": repeated variable"
                                                                        : ": variable and its negation"));
                }
            }
        }
    }

    std::size_t variable_count() const { return variable_count_; }
    std::size_t clause_count() const { return clauses_.size(); }
    const std::vector<clause>& clauses() const { return clauses_; }

    // Index of `variable` inside clause j, if it occurs there.
    std::optional<std::size_t> position(std::size_t j, std::uint32_t variable) const {
        for (std::size_t a = 0; a < 3; ++a)
            if (clauses_[j][a].variable == variable) return a;
        return std::nullopt;
    }

    friend bool operator==(const formula&, const formula&) = default;

private:
    std::size_t variable_count_ = 0;
    std::vector<clause> clauses_;
};

inline bool satisfies(const clause& c, const assignment& a) {
    for (const auto& l : c)
        if (a[l.variable] == l.positive) return true;
    return false;
}

inline bool eval(const formula& f, const assignment& a) {
    if (a.size() != f.variable_count()) throw std::invalid_argument("assignment is not total");
    for (const auto& c : f.clauses())
        if (!satisfies(c, a)) return false;
    return true;
}

class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exhaustive search over all 2^n assignments, in increasing binary order
// with variable 0 as the lowest bit.
inline std::optional<assignment> sat_oracle(const formula& f, unsigned max_variables = 24) {
    const auto n = f.variable_count();
    if (n > max_variables) {
        throw budget_exceeded("sat_oracle: " + std::to_string(n) + " variables exceed the budget of " +
                              std::to_string(max_variables));
    }
    std::vector<std::array<std::uint64_t, 2>> masks;  // {variables in clause, polarity bits}
    for (const auto& c : f.clauses()) {
        std::uint64_t vars = 0, pos = 0;
        for (const auto& l : c) {
            vars |= std::uint64_t{1} << l.variable;
            if (l.positive) pos |= std::uint64_t{1} << l.variable;
        }
        masks.push_back({vars, pos});
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        bool ok = true;
        for (const auto& [vars, pos] : masks) {
            // falsified iff every literal is false: bits agree with ~pos on vars
            if (((bits ^ pos) & vars) == vars) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        assignment a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = (bits >> i) & 1U;
        return a;
    }
    return std::nullopt;
}

// Bipartite incidence graph: variable i is vertex i, clause j is vertex
// n + j. Clause neighbours follow literal order, variable neighbours follow
// clause order.
struct incidence_graph {
    std::size_t variable_count = 0;
    std::size_t clause_count = 0;
    std::vector<std::vector<vertex_id>> neighbors;

    std::size_t vertex_count() const { return variable_count + clause_count; }
    vertex_id clause_vertex(std::size_t j) const { return static_cast<vertex_id>(variable_count + j); }
    bool is_clause(vertex_id v) const { return v >= variable_count; }

    std::vector<edge> edges() const {
        std::vector<edge> out;
        for (std::size_t j = 0; j < clause_count; ++j)
            for (vertex_id x : neighbors[clause_vertex(j)]) out.push_back({x, clause_vertex(j)});
        return out;
    }
};

inline incidence_graph make_incidence_graph(const formula& f) {
    incidence_graph b;
    b.variable_count = f.variable_count();
    b.clause_count = f.clause_count();
    b.neighbors.assign(b.vertex_count(), {});
    for (std::size_t j = 0; j < f.clause_count(); ++j) {
        for (const auto& l : f.clauses()[j]) {
            b.neighbors[b.clause_vertex(j)].push_back(l.variable);
            b.neighbors[l.variable].push_back(b.clause_vertex(j));
        }
    }
    return b;
}

}  // namespace aop

#endif  // AOP_FORMULA_HPP
