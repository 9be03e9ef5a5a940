#ifndef AOP_PLANAR_HPP
#define AOP_PLANAR_HPP

// Planar 3-SAT instances and a seeded generator that is planar by
// construction.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "aop/formula.hpp"
#include "aop/rotation.hpp"

namespace aop {

// A formula together with a genus-0 rotation system of its incidence graph
// (vertex ids as in make_incidence_graph).
struct planar_formula {
    aop::formula formula;
    rotation_system rotation;

    // 0-based position of clause j around variable i (sigma_x^-1(c)).
    std::size_t variable_port(std::size_t i, std::size_t j) const {
        return index_of(rotation.order[i], static_cast<vertex_id>(formula.variable_count() + j));
    }

    // 0-based position of variable i around clause j (sigma_c^-1(x)).
    std::size_t clause_port(std::size_t j, std::size_t i) const {
        return index_of(rotation.order[formula.variable_count() + j], static_cast<vertex_id>(i));
    }

    friend bool operator==(const planar_formula&, const planar_formula&) = default;

private:
    static std::size_t index_of(const std::vector<vertex_id>& order, vertex_id v) {
        auto it = std::find(order.begin(), order.end(), v);
        if (it == order.end()) throw embedding_error("vertex is not a neighbour in the rotation");
        return static_cast<std::size_t>(it - order.begin());
    }
};

inline embedding_report validate_embedding(const formula& f, const rotation_system& r) {
    auto b = make_incidence_graph(f);
    auto edges = b.edges();
    return validate_embedding(b.vertex_count(), edges, r);
}

// Throws embedding_error unless the rotation is a genus-0 rotation system of
// the incidence graph.
inline planar_formula make_planar_formula(formula f, rotation_system r) {
    auto report = validate_embedding(f, r);
    if (!report.valid) throw embedding_error("embedding is not planar: " + report.problems.front());
    return {std::move(f), std::move(r)};
}

enum class polarity_mode {
    random,
    // each clause takes the sign pattern falsified by the most assignments
    // that still satisfy the earlier clauses (ties broken by the seed)
    adversarial,
};

class layout_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

// Uniform draw in [0, n) from the standard-specified mt19937_64 stream.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % n;
}

}  // namespace detail

// Variables sit on a line (the spine); each clause is drawn on one side of
// it, attached to three variables. On each side the clauses form nested
// regions: a clause on variables i < j < k splits its region into the part
// between i and j, the part between j and k, and the rest. Picking the
// three variables inside a single region keeps the drawing crossing-free,
// and each side holds at most n - 2 clauses.
inline planar_formula generate(std::uint64_t seed, std::size_t n, std::size_t m,
                               polarity_mode mode = polarity_mode::random) {
    if (n < 3) throw layout_error("generate: need at least 3 variables");
    if (m < 1) throw layout_error("generate: need at least 1 clause");
    if (m > 2 * n - 4) {
        throw layout_error("generate: " + std::to_string(m) + " clauses do not fit a planar layout on " +
                           std::to_string(n) + " variables (at most " + std::to_string(2 * n - 4) + ")");
    }
    if (mode == polarity_mode::adversarial && n > 20) throw layout_error("generate: adversarial mode needs n <= 20");

    std::mt19937_64 rng(seed);
    struct region {
        bool above;
        std::vector<std::uint32_t> points;
    };
    std::vector<region> regions;
    std::vector<std::uint32_t> spine(n);
    for (std::uint32_t i = 0; i < n; ++i) spine[i] = i;
    regions.push_back({true, spine});
    regions.push_back({false, spine});

    struct placed {
        std::array<std::uint32_t, 3> vars;  // i < j < k
        bool above;
    };
    std::vector<placed> layout;
    std::vector<clause> clauses;
    std::vector<bool> alive;
    if (mode == polarity_mode::adversarial) alive.assign(std::size_t{1} << n, true);

    for (std::size_t c = 0; c < m; ++c) {
        std::uint64_t capacity = 0;
        for (const auto& r : regions) capacity += r.points.size() - 2;
        std::uint64_t pick = detail::draw(rng, capacity);
        std::size_t ri = 0;
        while (pick >= regions[ri].points.size() - 2) pick -= regions[ri++].points.size() - 2;

        auto pts = regions[ri].points;
        for (std::size_t s = 0; s < 3; ++s) std::swap(pts[s], pts[s + detail::draw(rng, pts.size() - s)]);
        std::array<std::uint32_t, 3> v{pts[0], pts[1], pts[2]};
        std::sort(v.begin(), v.end());

        region r = std::move(regions[ri]);
        region gap1{r.above, {}}, gap2{r.above, {}}, outer{r.above, {}};
        for (auto p : r.points) {
            if (p >= v[0] && p <= v[1]) gap1.points.push_back(p);
            if (p >= v[1] && p <= v[2]) gap2.points.push_back(p);
            if (p <= v[0] || p >= v[2]) outer.points.push_back(p);
        }
        regions[ri] = std::move(outer);
        regions.push_back(std::move(gap1));
        regions.push_back(std::move(gap2));
        layout.push_back({v, r.above});

        unsigned pattern = 0;  // bit q set: literal q positive
        if (mode == polarity_mode::random) {
            pattern = static_cast<unsigned>(detail::draw(rng, 8));
        } else {
            std::array<std::uint64_t, 8> hist{};
            auto local = [&](std::uint64_t a) {
                return static_cast<unsigned>(((a >> v[0]) & 1U) | (((a >> v[1]) & 1U) << 1) |
                                             (((a >> v[2]) & 1U) << 2));
            };
            for (std::uint64_t a = 0; a < alive.size(); ++a)
                if (alive[a]) ++hist[local(a)];
            // pattern p is falsified exactly by the local value ~p
            std::uint64_t best = *std::max_element(hist.begin(), hist.end());
            std::vector<unsigned> ties;
            for (unsigned p = 0; p < 8; ++p)
                if (hist[~p & 7U] == best) ties.push_back(p);
            pattern = ties[detail::draw(rng, ties.size())];
            for (std::uint64_t a = 0; a < alive.size(); ++a)
                if (alive[a] && local(a) == (~pattern & 7U)) alive[a] = false;
        }
        clauses.push_back({literal{v[0], (pattern & 1U) != 0}, literal{v[1], (pattern & 2U) != 0},
                           literal{v[2], (pattern & 4U) != 0}});
    }

    formula f(n, std::move(clauses));
    rotation_system rot;
    rot.order.assign(n + m, {});
    for (std::size_t c = 0; c < m; ++c) {
        const auto& [v, above] = layout[c];
        if (above)
            rot.order[n + c] = {v[2], v[1], v[0]};
        else
            rot.order[n + c] = {v[0], v[1], v[2]};
    }
    // Counter-clockwise around a variable, starting from the spine direction
    // to its right: clauses above leaving rightward (inner first), the clause
    // it is the middle of, clauses above leaving leftward (outer first), then
    // the same below in mirrored order. Stored reversed (clockwise).
    for (std::uint32_t x = 0; x < n; ++x) {
        struct slot {
            int band;
            std::uint32_t key;
            vertex_id clause_vertex;
        };
        std::vector<slot> slots;
        for (std::size_t c = 0; c < m; ++c) {
            const auto& [v, above] = layout[c];
            auto cv = static_cast<vertex_id>(n + c);
            if (v[0] == x) slots.push_back(above ? slot{0, v[2], cv} : slot{5, static_cast<std::uint32_t>(n - v[2]), cv});
            if (v[1] == x) slots.push_back({above ? 1 : 4, 0, cv});
            if (v[2] == x) slots.push_back(above ? slot{2, v[0], cv} : slot{3, static_cast<std::uint32_t>(n - v[0]), cv});
        }
        std::sort(slots.begin(), slots.end(),
                  [](const slot& a, const slot& b) { return a.band != b.band ? a.band < b.band : a.key < b.key; });
        for (auto it = slots.rbegin(); it != slots.rend(); ++it) rot.order[x].push_back(it->clause_vertex);
    }
    return make_planar_formula(std::move(f), std::move(rot));
}

}  // namespace aop

#endif  // AOP_PLANAR_HPP
