#ifndef AOP_IO_HPP
#define AOP_IO_HPP

// File formats: JSON instance documents, DIMACS formula files with "r"
// rotation lines, JSON witnesses and Graphviz DOT.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aop/graph.hpp"
#include "aop/planar.hpp"
#include "aop/reduction.hpp"

namespace aop {

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view instance_format = "aop-instance";
inline constexpr std::string_view witness_format = "aop-witness";
inline constexpr int io_version = 1;

struct instance_document {
    orientation_problem problem;
    std::vector<std::string> labels;  // empty string: unlabelled
    std::optional<rotation_system> rotation;
    std::optional<gadget_registry> registry;
    std::optional<planar_formula> source;
    std::vector<std::int64_t> ids;  // file id of each dense vertex id
};

struct read_options {
    // an odd number of parallel undirected edges becomes one edge, an even
    // number disappears
    bool normalize_multi = false;
};

namespace detail {

using nlohmann::json;

inline std::string position(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

inline json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw io_error("parse error at " + position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
    }
}

inline void expect_format(const json& j, std::string_view format) {
    if (!j.is_object()) throw io_error("document is not a JSON object");
    if (j.value("format", std::string{}) != format) throw io_error("unrecognized format, expected " + std::string(format));
    if (j.value("version", -1) != io_version) throw io_error("unsupported version");
}

inline json formula_json(const planar_formula& pf) {
    json clauses = json::array();
    for (const auto& c : pf.formula.clauses()) {
        json lits = json::array();
        for (const auto& l : c) lits.push_back((l.positive ? 1 : -1) * static_cast<std::int64_t>(l.variable + 1));
        clauses.push_back(std::move(lits));
    }
    return {{"variables", pf.formula.variable_count()}, {"clauses", clauses}, {"rotation", pf.rotation.order}};
}

inline planar_formula formula_from_json(const json& j) {
    std::vector<clause> clauses;
    for (const auto& c : j.at("clauses")) {
        if (c.size() != 3) throw io_error("source clause does not have 3 literals");
        clause cl;
        for (std::size_t a = 0; a < 3; ++a) {
            auto x = c[a].get<std::int64_t>();
            if (x == 0) throw io_error("source literal 0");
            cl[a] = {static_cast<std::uint32_t>((x < 0 ? -x : x) - 1), x > 0};
        }
        clauses.push_back(cl);
    }
    formula f(j.at("variables").get<std::size_t>(), std::move(clauses));
    return make_planar_formula(std::move(f), {j.at("rotation").get<std::vector<std::vector<vertex_id>>>()});
}

}  // namespace detail

// Canonical bytes: vertices by id, edges and arcs sorted, object keys
// sorted. Equal problems give identical output.
inline std::string write_instance(const orientation_problem& p, const std::vector<std::string>& labels = {},
                                  const std::optional<rotation_system>& rotation = std::nullopt,
                                  const gadget_registry* registry = nullptr, const planar_formula* source = nullptr) {
    using detail::json;
    const auto& g = p.graph();
    json doc;
    doc["format"] = instance_format;
    doc["version"] = io_version;
    json vertices = json::array();
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        json rec{{"id", v}, {"in_T", p.is_odd(v)}};
        if (v < labels.size() && !labels[v].empty()) rec["label"] = labels[v];
        vertices.push_back(std::move(rec));
    }
    doc["vertices"] = std::move(vertices);
    auto edges = g.edges();
    auto arcs = g.arcs();
    std::sort(edges.begin(), edges.end());
    std::sort(arcs.begin(), arcs.end());
    doc["edges"] = json::array();
    for (const auto& e : edges) doc["edges"].push_back({e.first, e.second});
    doc["arcs"] = json::array();
    for (const auto& a : arcs) doc["arcs"].push_back({a.tail, a.head});
    if (rotation) doc["rotation"] = rotation->order;
    if (registry) doc["registry"] = {{"variables", registry->variables}, {"clauses", registry->clauses}};
    if (source) doc["source"] = detail::formula_json(*source);
    return doc.dump(1) + "\n";
}

inline std::string write_artifact(const reduction_artifact& r) {
    return write_instance(r.problem, r.registry.labels, r.rotation, &r.registry, &r.source);
}

inline instance_document read_instance(std::string_view text, const read_options& opts = {}) {
    using detail::json;
    auto doc = detail::parse_json(text);
    detail::expect_format(doc, instance_format);
    instance_document out;
    try {
        std::map<std::int64_t, vertex_id> dense;
        std::vector<bool> odd;
        std::vector<std::pair<std::int64_t, const json*>> records;
        for (const auto& v : doc.at("vertices")) records.push_back({v.at("id").get<std::int64_t>(), &v});
        std::sort(records.begin(), records.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [id, rec] : records) {
            if (dense.contains(id)) throw io_error("duplicate vertex id " + std::to_string(id));
            dense[id] = static_cast<vertex_id>(out.ids.size());
            out.ids.push_back(id);
            odd.push_back(rec->value("in_T", false));
            out.labels.push_back(rec->value("label", std::string{}));
        }
        auto lookup = [&](const json& x) {
            auto id = x.get<std::int64_t>();
            auto it = dense.find(id);
            if (it == dense.end()) throw io_error("link references unknown vertex " + std::to_string(id));
            return it->second;
        };
        auto pair_of = [&](const json& x) {
            if (!x.is_array() || x.size() != 2) throw io_error("link is not a pair of vertex ids");
            return std::pair{lookup(x[0]), lookup(x[1])};
        };
        std::vector<edge> edges;
        std::vector<arc> arcs;
        for (const auto& e : doc.value("edges", json::array())) {
            auto [a, b] = pair_of(e);
            edges.push_back({a, b});
        }
        for (const auto& a : doc.value("arcs", json::array())) {
            auto [t, h] = pair_of(a);
            arcs.push_back({t, h});
        }
        if (opts.normalize_multi) {
            std::map<edge, std::size_t> multiplicity;
            std::vector<edge> order;
            for (const auto& e : edges) {
                auto key = e.first == e.second ? e : make_edge(e.first, e.second);
                if (multiplicity[key]++ == 0) order.push_back(key);
            }
            edges.clear();
            for (const auto& e : order)
                if (multiplicity[e] % 2 == 1) edges.push_back(e);
        }
        partially_directed_graph g(odd.size(), std::move(edges), std::move(arcs));
        out.problem = orientation_problem(std::move(g), std::move(odd));
        const auto n = out.problem.graph().vertex_count();
        auto remap = [&](vertex_id file_id) { return lookup(json(static_cast<std::int64_t>(file_id))); };
        if (doc.contains("rotation")) {
            auto order = doc["rotation"].get<std::vector<std::vector<vertex_id>>>();
            if (order.size() != n) throw io_error("rotation does not cover every vertex");
            rotation_system r;
            r.order.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                for (auto w : order[i]) r.order[i].push_back(remap(w));
            out.rotation = std::move(r);
        }
        if (doc.contains("registry")) {
            const auto& reg = doc["registry"];
            auto variables = reg.at("variables").get<std::vector<std::vector<base_copy>>>();
            auto clauses = reg.at("clauses").get<std::vector<clause_block>>();
            for (auto& copies : variables)
                for (auto& m : copies)
                    for (auto& v : m) v = remap(v);
            for (auto& c : clauses)
                for (auto& v : c) v = remap(v);
            out.registry = make_registry(out.labels, std::move(variables), std::move(clauses));
        }
        if (doc.contains("source")) out.source = detail::formula_from_json(doc["source"]);
    } catch (const json::exception& e) {
        throw io_error(std::string("malformed instance: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw io_error(std::string("malformed instance: ") + e.what());
    }
    return out;
}

// Requires rotation, registry and source sections.
inline reduction_artifact read_artifact(std::string_view text) {
    auto doc = read_instance(text);
    if (!doc.rotation || !doc.registry || !doc.source) {
        throw io_error("artifact document needs rotation, registry and source sections");
    }
    return {std::move(doc.problem), std::move(*doc.registry), std::move(*doc.rotation), std::move(*doc.source)};
}

// Witness: the directed edges as (tail, head), sorted.
inline std::string write_witness(const partially_directed_graph& g, const orientation& o) {
    using detail::json;
    std::vector<arc> arcs;
    for (link_id l = 0; l < g.edge_count(); ++l) arcs.push_back(directed(g, o, l));
    std::sort(arcs.begin(), arcs.end());
    json doc{{"format", witness_format}, {"version", io_version}, {"arcs", json::array()}};
    for (const auto& a : arcs) doc["arcs"].push_back({a.tail, a.head});
    return doc.dump(1) + "\n";
}

inline orientation read_witness(std::string_view text, const partially_directed_graph& g) {
    using detail::json;
    auto doc = detail::parse_json(text);
    detail::expect_format(doc, witness_format);
    std::vector<arc> arcs;
    try {
        for (const auto& a : doc.at("arcs")) arcs.push_back({a.at(0).get<vertex_id>(), a.at(1).get<vertex_id>()});
    } catch (const json::exception& e) {
        throw io_error(std::string("malformed witness: ") + e.what());
    }
    try {
        return orientation_from_arcs(g, arcs);
    } catch (const std::invalid_argument& e) {
        throw io_error(std::string("witness does not match the instance: ") + e.what());
    }
}

// DIMACS body plus optional "r x<i> c<j> ..." / "r c<j> x<i> ..." lines.
struct formula_document {
    aop::formula formula;
    std::optional<rotation_system> rotation;

    // Throws io_error "embedding required" without rotation lines.
    planar_formula planar() const {
        if (!rotation) throw io_error("embedding required: the formula file has no rotation lines");
        return make_planar_formula(formula, *rotation);
    }
};

inline formula_document read_formula(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::pair<std::size_t, std::size_t>> header;
    std::vector<clause> clauses;
    std::vector<literal> pending;
    std::map<vertex_id, std::vector<vertex_id>> rotation_lines;
    auto fail = [&](const std::string& what) -> io_error {
        return io_error("line " + std::to_string(line_no) + ": " + what);
    };
    auto vertex_name = [&](const std::string& token) -> vertex_id {
        if (!header) throw fail("rotation line before the header");
        if (token.size() < 2 || (token[0] != 'x' && token[0] != 'c')) throw fail("bad vertex name '" + token + "'");
        std::size_t pos = 0;
        long long k = 0;
        try {
            k = std::stoll(token.substr(1), &pos);
        } catch (const std::exception&) {
            throw fail("bad vertex name '" + token + "'");
        }
        if (pos + 1 != token.size()) throw fail("bad vertex name '" + token + "'");
        auto limit = token[0] == 'x' ? header->first : header->second;
        if (k < 1 || static_cast<std::size_t>(k) > limit) throw fail("vertex '" + token + "' out of range");
        return static_cast<vertex_id>(token[0] == 'x' ? k - 1 : header->first + k - 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c" || first[0] == '%') continue;
        if (first == "p") {
            std::string cnf;
            long long n = -1, m = -1;
            if (header || !(ls >> cnf >> n >> m) || cnf != "cnf" || n < 0 || m < 0) throw fail("bad header");
            header = {static_cast<std::size_t>(n), static_cast<std::size_t>(m)};
            continue;
        }
        if (first == "r") {
            std::string name;
            if (!(ls >> name)) throw fail("rotation line without a vertex");
            auto v = vertex_name(name);
            if (rotation_lines.contains(v)) throw fail("repeated rotation line");
            auto& order = rotation_lines[v];
            std::string t;
            while (ls >> t) order.push_back(vertex_name(t));
            continue;
        }
        if (!header) throw fail("clause before the header");
        std::istringstream body(line);
        std::string token;
        while (body >> token) {
            long long x = 0;
            std::size_t pos = 0;
            try {
                x = std::stoll(token, &pos);
            } catch (const std::exception&) {
                throw fail("malformed literal '" + token + "'");
            }
            if (pos != token.size()) throw fail("malformed literal '" + token + "'");
            if (x == 0) {
                if (pending.size() != 3) throw fail("clause has " + std::to_string(pending.size()) + " literals, expected 3");
                clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                continue;
            }
            auto var = static_cast<std::size_t>(x < 0 ? -x : x);
            if (var > header->first) throw fail("literal '" + token + "' exceeds the declared variable count");
            pending.push_back({static_cast<std::uint32_t>(var - 1), x > 0});
        }
    }
    if (!header) throw io_error("missing 'p cnf' header");
    if (!pending.empty()) throw io_error("last clause is not terminated by 0");
    if (clauses.size() != header->second) {
        throw io_error("header declares " + std::to_string(header->second) + " clauses, found " +
                       std::to_string(clauses.size()));
    }
    formula_document out;
    try {
        out.formula = formula(header->first, std::move(clauses));
    } catch (const formula_error& e) {
        throw io_error(e.what());
    }
    if (!rotation_lines.empty()) {
        const auto total = header->first + header->second;
        rotation_system r;
        r.order.resize(total);
        for (auto& [v, order] : rotation_lines) r.order[v] = std::move(order);
        for (vertex_id v = 0; v < total; ++v) {
            // variables without occurrences may omit their line
            bool has_line = rotation_lines.contains(v);
            if (!has_line && (v >= header->first || !make_incidence_graph(out.formula).neighbors[v].empty())) {
                throw io_error("rotation lines do not cover every incidence vertex");
            }
        }
        out.rotation = std::move(r);
    }
    return out;
}

inline std::string incidence_name(const formula& f, vertex_id v) {
    return v < f.variable_count() ? "x" + std::to_string(v + 1) : "c" + std::to_string(v - f.variable_count() + 1);
}

inline std::string write_formula(const formula& f, const rotation_system* rotation = nullptr) {
    std::string out = "p cnf " + std::to_string(f.variable_count()) + " " + std::to_string(f.clause_count()) + "\n";
    for (const auto& c : f.clauses()) {
        for (const auto& l : c) out += (l.positive ? "" : "-") + std::to_string(l.variable + 1) + " ";
        out += "0\n";
    }
    if (rotation) {
        for (vertex_id v = 0; v < rotation->order.size(); ++v) {
            out += "r " + incidence_name(f, v);
            for (auto w : rotation->order[v]) out += " " + incidence_name(f, w);
            out += "\n";
        }
    }
    return out;
}

inline std::string write_formula(const planar_formula& pf) { return write_formula(pf.formula, &pf.rotation); }

namespace detail {

inline std::string dot_escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace detail

// T vertices are filled black, the rest white. Fixed arcs are bold; with
// an orientation every edge is drawn as an arrow, otherwise without heads.
inline std::string export_dot(const orientation_problem& p, const orientation* o = nullptr,
                              const std::vector<std::string>& labels = {}, const gadget_registry* registry = nullptr) {
    const auto& g = p.graph();
    if (o) check_orientation(g, *o);
    std::ostringstream out;
    out << "digraph G {\n";
    out << "  node [shape=circle, style=filled, fixedsize=true, width=0.35, fontsize=8];\n";
    auto node = [&](vertex_id v, const std::string& indent) {
        std::string label = v < labels.size() && !labels[v].empty() ? labels[v] : std::to_string(v);
        out << indent << v << " [label=\"" << detail::dot_escape(label) << "\", "
            << (p.is_odd(v) ? "fillcolor=black, fontcolor=white" : "fillcolor=white, fontcolor=black") << "];\n";
    };
    std::vector<bool> placed(g.vertex_count(), false);
    if (registry) {
        auto cluster = [&](const std::string& name, const std::string& title, std::span<const vertex_id> vs) {
            out << "  subgraph cluster_" << name << " {\n    label=\"" << detail::dot_escape(title) << "\";\n";
            auto sorted = std::vector<vertex_id>(vs.begin(), vs.end());
            std::sort(sorted.begin(), sorted.end());
            for (auto v : sorted) {
                node(v, "    ");
                placed[v] = true;
            }
            out << "  }\n";
        };
        for (std::size_t i = 0; i < registry->variables.size(); ++i) {
            for (std::size_t k = 0; k < registry->variables[i].size(); ++k) {
                const auto& m = registry->variables[i][k];
                cluster("x" + std::to_string(i + 1) + "_" + std::to_string(k + 1), "M" + copy_suffix(i, k), m);
            }
        }
        for (std::size_t j = 0; j < registry->clauses.size(); ++j) {
            const auto& c = registry->clauses[j];
            cluster("c" + std::to_string(j + 1), "C^" + std::to_string(j + 1), c);
        }
    }
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (!placed[v]) node(v, "  ");

    std::vector<std::pair<arc, bool>> lines;  // (drawn tail->head, fixed)
    for (link_id l = 0; l < g.link_count(); ++l) {
        if (!g.is_edge(l))
            lines.push_back({g.fixed_arc(l), true});
        else if (o)
            lines.push_back({directed(g, *o, l), false});
        else
            lines.push_back({{g.edges()[l].first, g.edges()[l].second}, false});
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, fixed] : lines) {
        out << "  " << a.tail << " -> " << a.head;
        if (fixed)
            out << " [penwidth=2]";
        else if (!o)
            out << " [dir=none]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace aop

#endif  // AOP_IO_HPP
