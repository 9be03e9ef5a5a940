#include <gtest/gtest.h>

#include <random>

#include "aop/acyclicity.hpp"
#include "aop/graph.hpp"
#include "oracle.hpp"

using namespace aop;

TEST(Validate, EmptyGraphIsValid) {
    partially_directed_graph g(0, {}, {});
    EXPECT_EQ(g.vertex_count(), 0u);
    EXPECT_TRUE(validate(g).ok());
}

TEST(Validate, RejectsLoopParallelAndDangling) {
    EXPECT_THROW(partially_directed_graph(2, {{0, 0}}, {}), graph_error);
    try {
        partially_directed_graph(3, {{0, 1}}, {{1, 0}});
        FAIL();
    } catch (const graph_error& e) {
        ASSERT_EQ(e.report().violations.size(), 1u);
        EXPECT_EQ(e.report().violations[0], "parallel link 0–1");
    }
    auto r = validate(2, std::vector<edge>{{0, 5}}, std::vector<arc>{});
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations[0], "dangling endpoint 5");
}

TEST(Validate, ReportsEveryViolation) {
    auto r = validate(3, std::vector<edge>{{0, 0}, {1, 2}, {2, 1}}, std::vector<arc>{{0, 7}});
    EXPECT_EQ(r.violations.size(), 3u);
}

TEST(Graph, LinkIdsAndIncidence) {
    partially_directed_graph g(4, {{2, 1}, {0, 3}}, {{3, 1}});
    EXPECT_EQ(g.edges()[0], (edge{1, 2}));
    EXPECT_TRUE(g.is_edge(1));
    EXPECT_FALSE(g.is_edge(2));
    EXPECT_EQ(g.fixed_arc(2), (arc{3, 1}));
    EXPECT_EQ(g.degree(1), 2u);
    EXPECT_EQ(g.degree(3), 2u);
    EXPECT_EQ(g.max_degree(), 2u);
    EXPECT_EQ(g.find_link(1, 3), std::optional<link_id>{2});
    EXPECT_EQ(g.find_link(0, 1), std::nullopt);
    EXPECT_EQ(g.other(0, 1), 2u);
}

TEST(Graph, EqualityIgnoresOrder) {
    partially_directed_graph a(3, {{0, 1}, {1, 2}}, {{2, 0}});
    partially_directed_graph b(3, {{2, 1}, {1, 0}}, {{2, 0}});
    partially_directed_graph c(3, {{2, 1}, {1, 0}}, {{0, 2}});
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a == c);
}

TEST(Orientation, ArcSetRoundTrip) {
    partially_directed_graph g(3, {{0, 1}, {1, 2}}, {{2, 0}});
    orientation o{{true, false}};
    auto arcs = arc_set(g, o);
    ASSERT_EQ(arcs.size(), 3u);
    EXPECT_EQ(arcs[0], (arc{0, 1}));
    EXPECT_EQ(arcs[1], (arc{2, 1}));
    EXPECT_EQ(orientation_from_arcs(g, arcs), o);
    std::vector<arc> bad{{0, 1}, {2, 1}, {0, 2}};
    EXPECT_THROW(orientation_from_arcs(g, bad), std::invalid_argument);
    std::vector<arc> missing{{0, 1}, {2, 0}};
    EXPECT_THROW(orientation_from_arcs(g, missing), std::invalid_argument);
}

TEST(Parity, HandshakeCondition) {
    partially_directed_graph tri(3, {{0, 1}, {1, 2}, {0, 2}}, {});
    EXPECT_TRUE(parity_feasible({tri, std::vector<vertex_id>{0}}));
    EXPECT_FALSE(parity_feasible({tri, std::vector<vertex_id>{0, 1}}));
}

TEST(Parity, TOddOnScope) {
    partially_directed_graph path(3, {{0, 1}, {1, 2}}, {});
    orientation_problem p(path, std::vector<vertex_id>{1});
    orientation o{{true, false}};  // 0->1, 2->1: in-degree 2 at 1
    EXPECT_FALSE(is_T_odd(p, o));
    std::vector<vertex_id> outside{0, 2};
    EXPECT_TRUE(is_T_odd_on(p, o, outside));
}

TEST(Boundary, ClassifiesCrossingLinks) {
    partially_directed_graph g(4, {{0, 1}, {1, 2}}, {{2, 3}, {3, 0}});
    std::vector<vertex_id> x{0, 1};
    auto v = boundary(g, x);
    EXPECT_EQ(v.undirected.size(), 1u);
    EXPECT_EQ(v.inward.size(), 1u);
    EXPECT_EQ(v.outward.size(), 0u);
    EXPECT_FALSE(is_uniform(v));
    orientation o{{true, false}};
    auto w = boundary(g, x, &o);
    EXPECT_TRUE(w.undirected.empty());
    EXPECT_EQ(w.inward.size(), 2u);
    EXPECT_TRUE(is_uniform(w));
}

TEST(Gamma, SubgraphIncludesBoundaryEndpoints) {
    partially_directed_graph g(5, {{0, 1}, {1, 2}, {3, 4}}, {{2, 3}});
    std::vector<vertex_id> h{1, 2};
    auto s = gamma_subgraph(g, h);
    EXPECT_EQ(s.parent_vertex, (std::vector<vertex_id>{1, 2, 0, 3}));
    EXPECT_EQ(s.graph.edge_count(), 2u);
    EXPECT_EQ(s.graph.arc_count(), 1u);
    EXPECT_EQ(s.local(4), std::nullopt);
    orientation o{{true, true, false}};
    auto local = restrict_to(s, g, o);
    for (link_id l = 0; l < s.graph.edge_count(); ++l) {
        arc child = directed(s.graph, local, l);
        arc parent = directed(g, o, s.parent_link[l]);
        EXPECT_EQ(s.parent_vertex[child.tail], parent.tail);
        EXPECT_EQ(s.parent_vertex[child.head], parent.head);
    }
}

TEST(Flip, ComplementsInDegrees) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto p = oracle::random_problem(rng, 6, 0.5, 0.3, 10);
        const auto& g = p.graph();
        orientation o{std::vector<bool>(g.edge_count())};
        for (std::size_t l = 0; l < o.forward.size(); ++l) o.forward[l] = rng() & 1;
        auto flipped_graph = reversed_graph(g);
        auto before = in_degrees(g, o);
        auto after = in_degrees(flipped_graph, flip_all(o));
        for (vertex_id v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(before[v] + after[v], g.degree(v));
    }
}

TEST(Acyclicity, TopologicalOrderOrCycle) {
    std::vector<arc> dag{{0, 1}, {1, 2}, {0, 2}};
    auto a = is_acyclic(3, dag);
    EXPECT_TRUE(a.acyclic);
    EXPECT_EQ(a.order, (std::vector<vertex_id>{0, 1, 2}));
    EXPECT_TRUE(witness_holds(3, dag, a));

    std::vector<arc> cyc{{3, 1}, {1, 2}, {2, 3}, {0, 1}};
    auto c = is_acyclic(4, cyc);
    EXPECT_FALSE(c.acyclic);
    EXPECT_EQ(c.cycle, (std::vector<vertex_id>{1, 2, 3}));
    EXPECT_TRUE(witness_holds(4, cyc, c));
}

TEST(Acyclicity, AgreesWithDepthFirstSearch) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        std::size_t n = 1 + rng() % 8;
        std::vector<arc> arcs;
        for (vertex_id a = 0; a < n; ++a)
            for (vertex_id b = 0; b < n; ++b)
                if (a != b && rng() % 5 == 0) arcs.push_back({a, b});
        auto r = is_acyclic(n, arcs);
        EXPECT_EQ(r.acyclic, !oracle::has_cycle(n, arcs));
        EXPECT_TRUE(witness_holds(n, arcs, r));
    }
}
