#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "aop/reduction.hpp"
#include "aop/search.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace aop;

namespace {

bool boundary_uniform(const reduction_artifact& r, const std::vector<vertex_id>& vs, const orientation& o) {
    return is_uniform(boundary(r.problem.graph(), vs, &o));
}

unsigned true_literals(const formula& f, std::size_t j, const assignment& a) {
    unsigned n = 0;
    for (const auto& l : f.clauses()[j]) n += a[l.variable] == l.positive;
    return n;
}

assignment from_bits(std::size_t n, std::uint64_t bits) {
    assignment a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (bits >> i) & 1U;
    return a;
}

}  // namespace

TEST(Gadgets, BaseGadgetShape) {
    auto g = base_gadget_instance();
    const auto& pg = g.problem.graph();
    EXPECT_EQ(g.scope.size(), 10u);
    EXPECT_EQ(pg.vertex_count(), 14u);
    EXPECT_EQ(pg.edge_count(), 12u);
    EXPECT_EQ(pg.arc_count(), 4u);
    EXPECT_EQ(g.problem.odd_count(), 9u);
    EXPECT_FALSE(g.problem.is_odd(at(base_copy{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, base_role::u_hat)));
    EXPECT_TRUE(validate_embedding(pg.vertex_count(), link_edges(pg), g.rotation).valid);
}

TEST(Gadgets, BaseGadgetHasTwoUniformOrientations) {
    auto g = base_gadget_instance();
    auto r = enumerate(g.problem, g.scope);
    ASSERT_TRUE(r.complete);
    EXPECT_EQ(r.total_valid, 2u);
    EXPECT_EQ(r.total_valid, oracle::count(g.problem, g.scope).acyclic);
    ASSERT_EQ(r.witnesses.size(), 2u);
    // Stubs are vertices 10..13 (for u, û, s, t). u, û and t share one
    // direction and s takes the other; the two orientations mirror.
    const auto& pg = g.problem.graph();
    std::vector<std::array<bool, 4>> into_m;
    for (const auto& w : r.witnesses) {
        std::array<bool, 4> in{};
        for (vertex_id k = 0; k < 4; ++k) {
            auto l = pg.incident(10 + k)[0];
            in[k] = directed(pg, w, l).tail == 10 + k;
        }
        EXPECT_EQ(in[0], in[1]);
        EXPECT_EQ(in[0], in[3]);
        EXPECT_NE(in[0], in[2]);
        into_m.push_back(in);
    }
    EXPECT_NE(into_m[0][0], into_m[1][0]);
    EXPECT_NO_THROW(require_base_gadget_count());
}

TEST(Gadgets, VariableGadgetShape) {
    auto g = variable_gadget_instance(3);
    const auto& pg = g.problem.graph();
    EXPECT_EQ(g.scope.size(), 30u);
    EXPECT_EQ(pg.edge_count() - 6, 27u);  // without the six stub links
    EXPECT_EQ(pg.arc_count(), 12u);
    EXPECT_TRUE(validate_embedding(pg.vertex_count(), link_edges(pg), g.rotation).valid);
}

TEST(Gadgets, VariableGadgetIsAllInOrAllOut) {
    for (std::size_t d = 1; d <= 4; ++d) {
        auto g = variable_gadget_instance(d);
        auto c = count_exact(g.problem, g.scope);
        ASSERT_TRUE(c.complete);
        EXPECT_EQ(c.count, 2u) << "degree " << d;
        if (g.problem.graph().edge_count() <= 22) {
            auto r = enumerate(g.problem, g.scope);
            EXPECT_EQ(r.total_valid, 2u);
            for (const auto& w : r.witnesses) EXPECT_TRUE(is_uniform(boundary(g.problem.graph(), g.scope, &w)));
        }
    }
    EXPECT_THROW(variable_gadget_instance(0), std::invalid_argument);
}

TEST(Gadgets, ClauseGadgetOddSet) {
    auto g = clause_gadget_instance({true, false, true});
    for (std::size_t q = 0; q < 6; ++q) EXPECT_TRUE(g.problem.is_odd(g.scope[q]));
    EXPECT_TRUE(g.problem.is_odd(g.scope[v_slot(0)]));
    EXPECT_TRUE(g.problem.is_odd(g.scope[v_hat_slot(0)]));
    EXPECT_FALSE(g.problem.is_odd(g.scope[v_slot(1)]));
    EXPECT_FALSE(g.problem.is_odd(g.scope[v_hat_slot(1)]));
    EXPECT_TRUE(g.problem.is_odd(g.scope[v_slot(2)]));
    EXPECT_TRUE(validate_embedding(g.problem.graph().vertex_count(), link_edges(g.problem.graph()), g.rotation).valid);
}

TEST(Gadgets, ClauseCompletionsPerDrive) {
    for (unsigned signs = 0; signs < 8; ++signs) {
        std::array<bool, 3> positive{bool(signs & 1), bool(signs & 2), bool(signs & 4)};
        for (unsigned drive = 0; drive < 8; ++drive) {
            std::array<bool, 3> port{bool(drive & 1), bool(drive & 2), bool(drive & 4)};
            auto g = clause_gadget_instance(positive, port);
            unsigned satisfied = 0;
            for (std::size_t p = 0; p < 3; ++p) satisfied += port[p] == positive[p];
            auto t = oracle::count(g.problem, g.scope);
            EXPECT_EQ(t.t_odd, 2u);
            EXPECT_EQ(t.acyclic, satisfied == 0 ? 0u : 2u) << signs << "/" << drive;
            auto r = enumerate(g.problem, g.scope, {.require_acyclic = false});
            for (const auto& w : r.witnesses) {
                unsigned in_pairs = 0;
                for (std::size_t p = 0; p < 3; ++p) {
                    auto l = *g.problem.graph().find_link(g.scope[w_slot(p)], g.scope[v_slot(p)]);
                    in_pairs += directed(g.problem.graph(), w, l).head == g.scope[w_slot(p)];
                }
                EXPECT_EQ(in_pairs, satisfied);
            }
        }
    }
}

TEST(Reduction, SampleFormulaSizes) {
    auto r = assemble(fixtures::sample5());
    const auto& g = r.problem.graph();
    EXPECT_EQ(g.vertex_count(), 210u);
    EXPECT_EQ(g.edge_count(), 225u);
    EXPECT_EQ(g.arc_count(), 60u);
    EXPECT_EQ(r.problem.odd_count(), 185u);
    EXPECT_EQ(r.registry.variables[1].size(), 5u);
    EXPECT_EQ(r.registry.clauses.size(), 5u);
    EXPECT_EQ(r.registry.labels[at(r.registry.variables[1][2], base_role::u_hat)], "û_2^3");
}

TEST(Reduction, StructuralCheck) {
    auto r = assemble(fixtures::sample5());
    auto s = structural_check(r);
    EXPECT_TRUE(s.ok()) << (s.failures.empty() ? "" : s.failures.front());
    EXPECT_EQ(s.max_degree, 3u);
    EXPECT_TRUE(s.embedding.valid);
}

TEST(Reduction, StructuralCheckCatchesMissingConnector) {
    auto r = assemble(fixtures::sample5());
    const auto& g = r.problem.graph();
    auto edges = g.edges();
    auto it = std::find_if(edges.begin(), edges.end(), [&](const edge& e) {
        const auto& a = r.registry.owners[e.first];
        const auto& b = r.registry.owners[e.second];
        return a.type != b.type;
    });
    ASSERT_NE(it, edges.end());
    edges.erase(it);
    auto broken = r;
    broken.problem = orientation_problem(partially_directed_graph(g.vertex_count(), edges, g.arcs()), r.problem.odd_mask());
    auto s = structural_check(broken);
    EXPECT_FALSE(s.ok());
}

TEST(Reduction, AssignmentRoundTrip) {
    auto pf = fixtures::sample5();
    auto r = assemble(pf);
    const auto n = pf.formula.variable_count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        auto a = from_bits(n, bits);
        auto o = orientation_from_assignment(r, a);
        EXPECT_TRUE(is_T_odd(r.problem, o));
        EXPECT_EQ(assignment_from_orientation(r, o), a);
        for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(boundary_uniform(r, r.registry.variable_vertices(i), o));
        for (std::size_t j = 0; j < pf.formula.clause_count(); ++j)
            EXPECT_EQ(clause_boundary_class(r, j, o), true_literals(pf.formula, j, a));
        auto acyc = is_acyclic(r.problem.graph(), o);
        EXPECT_EQ(acyc.acyclic, eval(pf.formula, a));
        if (!acyc.acyclic) {
            // the cycle is a falsified clause's hexagon
            auto owner = r.registry.owners[acyc.cycle.front()];
            ASSERT_EQ(owner.type, gadget_owner::kind::clause);
            EXPECT_EQ(true_literals(pf.formula, owner.index, a), 0u);
            for (auto v : acyc.cycle) {
                EXPECT_EQ(r.registry.owners[v].index, owner.index);
                EXPECT_LT(r.registry.owners[v].role, 6);
            }
        }
    }
}

TEST(Reduction, SolverWitnessYieldsSatisfyingAssignment) {
    auto pf = fixtures::sample5();
    auto r = assemble(pf);
    auto res = decide(r.problem);
    ASSERT_TRUE(res.feasible());
    EXPECT_TRUE(valid_witness(r.problem, *res.witness));
    EXPECT_TRUE(eval(pf.formula, assignment_from_orientation(r, *res.witness)));
}

TEST(Reduction, EquivalenceOnSampleFormula) {
    auto e = verify_equivalence(fixtures::sample5());
    EXPECT_TRUE(e.satisfiable);
    EXPECT_EQ(e.orientation_status, solve_status::feasible);
    EXPECT_TRUE(e.ok()) << e.detail;
}

TEST(Reduction, EquivalenceOnUnsatisfiableFormula) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto pf = generate(seed, 6, 8, polarity_mode::adversarial);
        if (sat_oracle(pf.formula)) continue;
        auto e = verify_equivalence(pf);
        EXPECT_FALSE(e.satisfiable);
        EXPECT_EQ(e.orientation_status, solve_status::infeasible);
        EXPECT_TRUE(e.ok()) << e.detail;
        return;
    }
    FAIL() << "no unsatisfiable formula among the seeds";
}

TEST(Reduction, MixedBoundaryIsMalformed) {
    auto pf = fixtures::sample5();
    auto r = assemble(pf);
    auto o = orientation_from_assignment(r, assignment(5, true));
    // reverse one connector at variable 1
    auto u = at(r.registry.variables[0][0], base_role::u);
    for (auto l : r.problem.graph().incident(u)) {
        if (r.registry.owners[r.problem.graph().other(l, u)].type == gadget_owner::kind::clause)
            o.forward[l] = !o.forward[l];
    }
    EXPECT_THROW(assignment_from_orientation(r, o), malformed_witness);
}
