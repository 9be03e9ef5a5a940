#include <gtest/gtest.h>

#include <random>

#include "aop/planar.hpp"
#include "fixtures.hpp"

using namespace aop;
using fixtures::cl;

namespace {

bool naive_sat(const formula& f) {
    const auto n = f.variable_count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        assignment a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = (bits >> i) & 1U;
        bool all = true;
        for (const auto& c : f.clauses()) {
            bool any = false;
            for (const auto& l : c) any = any || a[l.variable] == l.positive;
            all = all && any;
        }
        if (all) return true;
    }
    return false;
}

formula random_formula(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::vector<clause> cs;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::uint32_t> vars(n);
        for (std::uint32_t i = 0; i < n; ++i) vars[i] = i;
        std::shuffle(vars.begin(), vars.end(), rng);
        clause c;
        for (std::size_t a = 0; a < 3; ++a) c[a] = {vars[a], static_cast<bool>(rng() & 1)};
        cs.push_back(c);
    }
    return formula(n, cs);
}

}  // namespace

TEST(Formula, RejectsBadClauses) {
    EXPECT_THROW(formula(3, {cl(1, -1, 2)}), formula_error);
    EXPECT_THROW(formula(3, {cl(1, 1, 2)}), formula_error);
    EXPECT_THROW(formula(2, {cl(1, 2, 3)}), formula_error);
    try {
        formula(3, {cl(1, 2, 3), cl(2, 3, -2)});
        FAIL();
    } catch (const formula_error& e) {
        EXPECT_STREQ(e.what(), "clause 2: variable and its negation");
    }
}

TEST(Formula, Evaluation) {
    formula f(3, {cl(1, -2, 3)});
    EXPECT_TRUE(eval(f, {false, false, false}));
    EXPECT_FALSE(eval(f, {false, true, false}));
    EXPECT_THROW(eval(f, {true}), std::invalid_argument);
}

TEST(Formula, OracleAgreesWithNaiveCheck) {
    std::mt19937_64 rng(21);
    int unsat = 0;
    for (int t = 0; t < 300; ++t) {
        std::size_t n = 3 + rng() % 4;
        auto f = random_formula(rng, n, 1 + rng() % 14);
        auto a = sat_oracle(f);
        EXPECT_EQ(a.has_value(), naive_sat(f));
        if (a) {
            EXPECT_TRUE(eval(f, *a));
        }
        unsat += !a;
    }
    EXPECT_GT(unsat, 0);
}

TEST(Formula, OracleBudget) {
    formula f(30, {cl(1, 2, 3)});
    EXPECT_THROW(sat_oracle(f), budget_exceeded);
    EXPECT_TRUE(sat_oracle(f, 30));
}

TEST(Formula, IncidenceGraph) {
    formula f(4, {cl(1, -2, 3), cl(4, 2, -1)});
    auto b = make_incidence_graph(f);
    EXPECT_EQ(b.vertex_count(), 6u);
    EXPECT_EQ(b.neighbors[b.clause_vertex(1)], (std::vector<vertex_id>{3, 1, 0}));
    EXPECT_EQ(b.neighbors[1], (std::vector<vertex_id>{4, 5}));
    EXPECT_EQ(b.edges().size(), 6u);
}

TEST(Rotation, FaceTracingOnCycle) {
    std::vector<edge> square{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    rotation_system r{{{1, 3}, {2, 0}, {3, 1}, {0, 2}}};
    auto faces = trace_faces(4, square, r);
    ASSERT_EQ(faces.size(), 2u);
    EXPECT_EQ(faces[0].size(), 4u);
    auto report = validate_embedding(4, square, r);
    EXPECT_TRUE(report.valid);
    EXPECT_EQ(report.darts_visited, 8u);
}

TEST(Rotation, DetectsNonPlanarRotation) {
    // K4 with a rotation of genus 1.
    std::vector<edge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    rotation_system planar{{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};
    rotation_system twisted{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
    auto good = validate_embedding(4, k4, planar);
    auto bad = validate_embedding(4, k4, twisted);
    EXPECT_EQ(good.valid, good.face_count == 4);
    EXPECT_TRUE(good.valid);
    EXPECT_FALSE(bad.valid);
    ASSERT_FALSE(bad.problems.empty());
}

TEST(Rotation, RejectsWrongNeighbourSet) {
    std::vector<edge> path{{0, 1}, {1, 2}};
    rotation_system r{{{1}, {0, 2}, {0}}};
    EXPECT_THROW(trace_faces(3, path, r), embedding_error);
}

TEST(Planar, SampleFormulaEmbedding) {
    auto pf = fixtures::sample5();
    auto report = validate_embedding(pf.formula, pf.rotation);
    EXPECT_TRUE(report.valid);
    EXPECT_EQ(report.face_count, 7u);  // 10 - 15 + F = 2
    EXPECT_EQ(pf.variable_port(1, 3), 2u);
    EXPECT_EQ(pf.clause_port(1, 4), 1u);
}

TEST(Planar, RejectsInvalidEmbedding) {
    auto pf = fixtures::sample5();
    auto r = pf.rotation;
    std::swap(r.order[1][0], r.order[1][1]);
    EXPECT_THROW(make_planar_formula(pf.formula, r), embedding_error);
}

TEST(Generator, DeterministicAndPlanar) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        std::size_t n = 3 + seed % 8;
        std::size_t m = 1 + seed % (2 * n - 4);
        auto a = generate(seed, n, m);
        auto b = generate(seed, n, m);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a.formula.variable_count(), n);
        EXPECT_EQ(a.formula.clause_count(), m);
        auto report = validate_embedding(a.formula, a.rotation);
        EXPECT_TRUE(report.valid) << "seed " << seed;
        for (const auto& c : report.components) EXPECT_EQ(c.euler(), 2);
    }
    EXPECT_FALSE(generate(1, 6, 8) == generate(2, 6, 8));
}

TEST(Generator, LayoutBound) {
    EXPECT_NO_THROW(generate(5, 5, 6));
    try {
        generate(5, 5, 7);
        FAIL();
    } catch (const layout_error& e) {
        EXPECT_STREQ(e.what(), "generate: 7 clauses do not fit a planar layout on 5 variables (at most 6)");
    }
    EXPECT_THROW(generate(5, 2, 1), layout_error);
}

TEST(Generator, AdversarialProducesUnsatisfiable) {
    int unsat = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto pf = generate(seed, 8, 12, polarity_mode::adversarial);
        EXPECT_TRUE(validate_embedding(pf.formula, pf.rotation).valid);
        unsat += !sat_oracle(pf.formula);
    }
    EXPECT_GT(unsat, 0);
}
