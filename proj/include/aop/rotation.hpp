#ifndef AOP_ROTATION_HPP
#define AOP_ROTATION_HPP

// Rotation systems (combinatorial maps) and face tracing.
//
// Faces are traced with a fixed successor rule: from the dart u->v the walk
// continues with v->w, where w follows u in the cyclic order at v. A rotation
// system describes a planar embedding iff every connected component
// satisfies V - E + F = 2.

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aop/graph.hpp"

namespace aop {

struct rotation_system {
    std::vector<std::vector<vertex_id>> order;  // cyclic neighbour order per vertex

    friend bool operator==(const rotation_system&, const rotation_system&) = default;
};

class embedding_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct component_faces {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;

    long euler() const {
        return static_cast<long>(vertices) - static_cast<long>(edges) + static_cast<long>(faces);
    }
};

struct embedding_report {
    bool valid = false;
    std::size_t face_count = 0;
    std::size_t darts_visited = 0;
    std::vector<component_faces> components;
    std::vector<std::string> problems;
};

namespace detail {

inline std::vector<std::vector<vertex_id>> neighbor_lists(std::size_t vertex_count, std::span<const edge> edges) {
    std::vector<std::vector<vertex_id>> out(vertex_count);
    for (const auto& e : edges) {
        if (e.first >= vertex_count || e.second >= vertex_count) throw embedding_error("edge endpoint out of range");
        out[e.first].push_back(e.second);
        out[e.second].push_back(e.first);
    }
    return out;
}

}  // namespace detail

// Throws embedding_error when some cyclic order is not a permutation of the
// vertex's neighbours.
inline void check_rotation(std::size_t vertex_count, std::span<const edge> edges, const rotation_system& r) {
    if (r.order.size() != vertex_count) throw embedding_error("rotation does not cover every vertex");
    auto nbrs = detail::neighbor_lists(vertex_count, edges);
    for (vertex_id v = 0; v < vertex_count; ++v) {
        auto expected = nbrs[v];
        auto given = r.order[v];
        std::sort(expected.begin(), expected.end());
        std::sort(given.begin(), given.end());
        if (expected != given) {
            throw embedding_error("rotation at vertex " + std::to_string(v) +
                                  " is not a permutation of its neighbours");
        }
    }
}

// Faces as dart sequences (tail, head).
inline std::vector<std::vector<arc>> trace_faces(std::size_t vertex_count, std::span<const edge> edges,
                                                 const rotation_system& r) {
    check_rotation(vertex_count, edges, r);
    // dart index: (v, position of w in order[v])
    std::vector<std::size_t> offset(vertex_count + 1, 0);
    for (vertex_id v = 0; v < vertex_count; ++v) offset[v + 1] = offset[v] + r.order[v].size();
    auto position = [&](vertex_id v, vertex_id w) {
        const auto& o = r.order[v];
        return static_cast<std::size_t>(std::find(o.begin(), o.end(), w) - o.begin());
    };
    std::vector<bool> used(offset[vertex_count], false);
    std::vector<std::vector<arc>> faces;
    for (vertex_id u = 0; u < vertex_count; ++u) {
        for (std::size_t i = 0; i < r.order[u].size(); ++i) {
            if (used[offset[u] + i]) continue;
            std::vector<arc> face;
            vertex_id a = u, b = r.order[u][i];
            while (!used[offset[a] + position(a, b)]) {
                used[offset[a] + position(a, b)] = true;
                face.push_back({a, b});
                const auto& ob = r.order[b];
                vertex_id c = ob[(position(b, a) + 1) % ob.size()];
                a = b;
                b = c;
            }
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

// Euler check per connected component; an isolated vertex is one component
// with a single face.
inline embedding_report validate_embedding(std::size_t vertex_count, std::span<const edge> edges,
                                           const rotation_system& r) {
    embedding_report report;
    auto faces = trace_faces(vertex_count, edges, r);

    std::vector<vertex_id> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), vertex_id{0});
    auto find = [&](vertex_id v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : edges) parent[find(e.first)] = find(e.second);
    std::vector<std::size_t> index(vertex_count, vertex_count);
    for (vertex_id v = 0; v < vertex_count; ++v) {
        auto root = find(v);
        if (index[root] == vertex_count) {
            index[root] = report.components.size();
            report.components.push_back({});
        }
        ++report.components[index[root]].vertices;
    }
    for (const auto& e : edges) ++report.components[index[find(e.first)]].edges;
    for (const auto& f : faces) {
        ++report.components[index[find(f.front().tail)]].faces;
        report.darts_visited += f.size();
    }
    for (auto& c : report.components)
        if (c.edges == 0) c.faces = 1;

    for (const auto& c : report.components) report.face_count += c.faces;
    for (std::size_t i = 0; i < report.components.size(); ++i) {
        const auto& c = report.components[i];
        if (c.euler() != 2) {
            report.problems.push_back("component " + std::to_string(i) + ": V - E + F = " +
                                      std::to_string(c.euler()) + " (V=" + std::to_string(c.vertices) +
                                      ", E=" + std::to_string(c.edges) + ", F=" + std::to_string(c.faces) + ")");
        }
    }
    report.valid = report.problems.empty();
    return report;
}

}  // namespace aop

#endif  // AOP_ROTATION_HPP
