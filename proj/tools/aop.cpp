// aop: command-line front end for acyclic T-odd orientations and the
// planar 3-SAT reduction.
//
// Exit codes: 0 success / feasible / agree, 1 infeasible / check failed,
// 2 aborted or error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aop/aop.hpp"

namespace {

using nlohmann::json;

struct cli_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cli_failure("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& bytes) {
    if (path.empty() || path == "-") {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cli_failure("cannot write " + path);
    out << bytes;
}

bool valid(const aop::orientation_problem& p, const aop::orientation& o, std::string& why) {
    if (!aop::is_T_odd(p, o)) {
        why = "not T-odd";
        return false;
    }
    auto a = aop::is_acyclic(p.graph(), o);
    if (!a) {
        why = "directed cycle through " + std::to_string(a.cycle.size()) + " vertices";
        return false;
    }
    return true;
}

struct solve_opts {
    std::string input, witness, check, instance_out;
    bool json = false, normalize_multi = false;
    std::uint64_t nodes = aop::search_limits{}.node_budget;
};

int cmd_solve(const solve_opts& o) {
    auto doc = aop::read_instance(slurp(o.input), {.normalize_multi = o.normalize_multi});
    const auto& p = doc.problem;
    if (!o.check.empty()) {
        auto w = aop::read_witness(slurp(o.check), p.graph());
        std::string why;
        bool ok = valid(p, w, why);
        if (o.json)
            std::cout << json{{"witness_valid", ok}, {"reason", why}}.dump() << "\n";
        else
            std::cout << (ok ? "witness valid" : "witness invalid: " + why) << "\n";
        return ok ? 0 : 1;
    }
    auto r = aop::decide(p, {o.nodes});
    std::string headline = std::string(aop::to_string(r.status));
    if (r.status == aop::solve_status::infeasible)
        headline += r.reason.rfind("parity", 0) == 0 ? " (parity)" : " (" + r.method + ")";
    if (r.witness && !o.witness.empty()) emit(o.witness, aop::write_witness(p.graph(), *r.witness));
    if (o.json) {
        json j{{"status", aop::to_string(r.status)},
               {"method", r.method},
               {"reason", r.reason},
               {"stats", {{"decisions", r.stats.decisions},
                          {"propagations", r.stats.propagations},
                          {"conflicts", r.stats.conflicts}}}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << headline << "\n";
        std::cout << "method: " << r.method << "\n";
        if (!r.reason.empty()) std::cout << "reason: " << r.reason << "\n";
        std::cout << "decisions: " << r.stats.decisions << ", propagations: " << r.stats.propagations
                  << ", conflicts: " << r.stats.conflicts << "\n";
        if (r.witness && !o.witness.empty()) std::cout << "witness written to " << o.witness << "\n";
    }
    switch (r.status) {
        case aop::solve_status::feasible: return 0;
        case aop::solve_status::infeasible: return 1;
        default: return 2;
    }
}

int cmd_reduce(const std::string& input, const std::string& output, bool as_json) {
    auto pf = aop::read_formula(slurp(input)).planar();
    auto art = aop::assemble(pf);
    auto check = aop::structural_check(art);
    emit(output, aop::write_artifact(art));
    const auto& g = art.problem.graph();
    if (as_json) {
        std::cerr << json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"arcs", g.arc_count()},
                          {"odd", art.problem.odd_count()}, {"structural_ok", check.ok()},
                          {"failures", check.failures}}
                         .dump()
                  << "\n";
    } else {
        std::cerr << "artifact: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
                  << g.arc_count() << " arcs, |T| = " << art.problem.odd_count() << "\n";
        std::cerr << "structural check: " << (check.ok() ? "pass" : "FAIL") << "\n";
        for (const auto& f : check.failures) std::cerr << "  " << f << "\n";
    }
    return check.ok() ? 0 : 1;
}

struct verify_opts {
    std::vector<std::string> inputs;
    std::size_t batch = 0, n = 4, m = 4;
    std::uint64_t seed = 0, nodes = aop::search_limits{}.node_budget;
    bool adversarial = false, json = false;
};

int cmd_verify(const verify_opts& o) {
    std::vector<std::pair<std::string, aop::planar_formula>> work;
    for (const auto& path : o.inputs) work.emplace_back(path, aop::read_formula(slurp(path)).planar());
    for (std::size_t i = 0; i < o.batch; ++i) {
        auto mode = o.adversarial ? aop::polarity_mode::adversarial : aop::polarity_mode::random;
        work.emplace_back("seed " + std::to_string(o.seed + i), aop::generate(o.seed + i, o.n, o.m, mode));
    }
    std::size_t agree = 0, aborted = 0, unsat = 0;
    json rows = json::array();
    for (const auto& [name, pf] : work) {
        auto r = aop::verify_equivalence(aop::assemble(pf), {o.nodes});
        agree += r.ok();
        aborted += r.orientation_status == aop::solve_status::aborted;
        unsat += !r.satisfiable;
        rows.push_back({{"input", name}, {"sat", r.satisfiable}, {"orientation", aop::to_string(r.orientation_status)},
                        {"agree", r.ok()}, {"detail", r.detail}});
        if (!o.json && work.size() == 1) {
            std::cout << (r.ok() ? "agree" : "DISAGREE") << ": formula " << (r.satisfiable ? "satisfiable" : "unsatisfiable")
                      << ", orientation " << aop::to_string(r.orientation_status) << "\n";
            if (!r.detail.empty()) std::cout << r.detail << "\n";
        }
    }
    if (o.json)
        std::cout << json{{"agree", agree}, {"total", work.size()}, {"unsatisfiable", unsat}, {"rows", rows}}.dump() << "\n";
    else if (work.size() != 1)
        std::cout << agree << "/" << work.size() << " agree (" << unsat << " unsatisfiable)\n";
    if (aborted) return 2;
    return agree == work.size() ? 0 : 1;
}

struct gadget_opts {
    std::string kind, output, polarities = "+++", ports;
    std::size_t degree = 2;
};

int cmd_gadget(const gadget_opts& o) {
    aop::gadget_instance g;
    if (o.kind == "base") {
        g = aop::base_gadget_instance();
    } else if (o.kind == "variable") {
        if (o.degree < 1) throw cli_failure("--degree must be at least 1");
        g = aop::variable_gadget_instance(o.degree);
    } else {
        auto parse = [](const std::string& s, char yes, char no) {
            if (s.size() != 3) throw cli_failure("expected three characters, got '" + s + "'");
            std::array<bool, 3> out{};
            for (std::size_t i = 0; i < 3; ++i) {
                if (s[i] != yes && s[i] != no) throw cli_failure("unexpected character in '" + s + "'");
                out[i] = s[i] == yes;
            }
            return out;
        };
        std::optional<std::array<bool, 3>> ports;
        if (!o.ports.empty()) ports = parse(o.ports, 'T', 'F');
        g = aop::clause_gadget_instance(parse(o.polarities, '+', '-'), ports);
    }
    if (!o.output.empty()) emit(o.output, aop::write_instance(g.problem, g.labels, g.rotation));

    const auto& graph = g.problem.graph();
    auto acyclic = aop::enumerate(g.problem, g.scope, {.witness_cap = 64});
    if (!acyclic.complete) {
        std::cerr << "enumeration budget exceeded (" << graph.edge_count() << " edges)\n";
        return 2;
    }
    if (o.kind == "clause") {
        auto all = aop::enumerate(g.problem, g.scope, {.witness_cap = 0, .require_acyclic = false});
        auto cyclic = all.total_valid - acyclic.total_valid;
        std::cout << all.total_valid << " completions, ";
        if (cyclic == all.total_valid)
            std::cout << (all.total_valid == 2 ? "both" : "all") << " cyclic\n";
        else if (cyclic == 0)
            std::cout << (all.total_valid == 2 ? "both" : "all") << " acyclic\n";
        else
            std::cout << cyclic << " cyclic\n";
        return 0;
    }
    std::cout << acyclic.total_valid << " acyclic T-odd-on-" << (o.kind == "base" ? "M" : "X") << " orientations";
    if (o.kind == "variable") {
        bool uniform = true;
        for (const auto& w : acyclic.witnesses) uniform = uniform && aop::is_uniform(aop::boundary(graph, g.scope, &w));
        std::cout << ", boundaries " << (uniform ? "uniform" : "not uniform");
    }
    std::cout << "\n";
    return 0;
}

int cmd_gen(std::uint64_t seed, std::size_t n, std::size_t m, bool adversarial, const std::string& output) {
    auto pf = aop::generate(seed, n, m, adversarial ? aop::polarity_mode::adversarial : aop::polarity_mode::random);
    emit(output, "c generated seed=" + std::to_string(seed) + (adversarial ? " adversarial" : "") + "\n" +
                     aop::write_formula(pf));
    return 0;
}

int cmd_export_dot(const std::string& input, const std::string& witness, const std::string& output) {
    auto doc = aop::read_instance(slurp(input));
    std::optional<aop::orientation> o;
    if (!witness.empty()) o = aop::read_witness(slurp(witness), doc.problem.graph());
    emit(output, aop::export_dot(doc.problem, o ? &*o : nullptr, doc.labels, doc.registry ? &*doc.registry : nullptr));
    return 0;
}

int cmd_normalize(const std::string& input, const std::string& output) {
    auto doc = aop::read_instance(slurp(input));
    auto nz = aop::normalize_empty_T(doc.problem);
    std::vector<std::string> labels;
    for (auto v : nz.original_vertex) labels.push_back(doc.labels[v].empty() ? std::to_string(doc.ids[v]) : doc.labels[v]);
    emit(output, aop::write_instance(nz.problem, labels));
    std::cerr << "normalized: " << doc.problem.graph().vertex_count() << " -> " << nz.problem.graph().vertex_count()
              << " vertices, T = {}\n";
    return 0;
}

int cmd_apex(const std::string& input, std::optional<std::uint32_t> exempt, const std::string& output) {
    auto doc = aop::read_instance(slurp(input));
    auto q = exempt ? aop::apex_transform_exempting(doc.problem, *exempt) : aop::apex_transform(doc.problem);
    auto labels = doc.labels;
    labels.push_back("apex");
    emit(output, aop::write_instance(q, labels));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acyclic T-odd orientations and the planar 3-SAT reduction"};
    app.require_subcommand(1);

    solve_opts so;
    auto* solve = app.add_subcommand("solve", "decide an instance");
    solve->add_option("instance", so.input, "instance JSON")->required();
    solve->add_option("--witness", so.witness, "write the witness here");
    solve->add_option("--check-witness", so.check, "validate this witness instead of solving");
    solve->add_option("--node-budget", so.nodes, "search node cap")->check(CLI::PositiveNumber);
    solve->add_flag("--normalize-multi", so.normalize_multi, "merge odd / drop even parallel edges");
    solve->add_flag("--json", so.json);

    std::string reduce_in, reduce_out;
    bool reduce_json = false;
    auto* reduce = app.add_subcommand("reduce", "build the orientation instance of a planar formula");
    reduce->add_option("formula", reduce_in)->required();
    reduce->add_option("-o,--output", reduce_out);
    reduce->add_flag("--json", reduce_json);

    verify_opts vo;
    auto* verify = app.add_subcommand("verify", "check formula satisfiability against the reduction");
    verify->add_option("formula", vo.inputs);
    verify->add_option("--batch", vo.batch, "also check this many generated formulas");
    verify->add_option("--seed", vo.seed);
    verify->add_option("--n", vo.n)->check(CLI::Range(3, 20));
    verify->add_option("--m", vo.m)->check(CLI::PositiveNumber);
    verify->add_option("--node-budget", vo.nodes)->check(CLI::PositiveNumber);
    verify->add_flag("--adversarial", vo.adversarial);
    verify->add_flag("--json", vo.json);

    gadget_opts go;
    auto* gadget = app.add_subcommand("gadget", "emit a gadget and count its orientations");
    gadget->add_option("kind", go.kind)->required()->check(CLI::IsMember({"base", "variable", "clause"}));
    gadget->add_option("--degree", go.degree, "variable gadget copies");
    gadget->add_option("--polarities", go.polarities, "clause literal signs, e.g. -++");
    gadget->add_option("--ports", go.ports, "fix the connectors as driven by T/F variables, e.g. FFT");
    gadget->add_option("-o,--output", go.output);

    std::uint64_t gen_seed = 0;
    std::size_t gen_n = 5, gen_m = 5;
    bool gen_adv = false;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a planar formula");
    gen->add_option("--seed", gen_seed)->required();
    gen->add_option("--n", gen_n);
    gen->add_option("--m", gen_m);
    gen->add_flag("--adversarial", gen_adv);
    gen->add_option("-o,--output", gen_out);

    std::string dot_in, dot_witness, dot_out;
    auto* dot = app.add_subcommand("export-dot", "render an instance as Graphviz DOT");
    dot->add_option("instance", dot_in)->required();
    dot->add_option("--witness", dot_witness);
    dot->add_option("-o,--output", dot_out);

    std::string norm_in, norm_out;
    auto* norm = app.add_subcommand("normalize", "contract odd degree-2 vertices and flip to T = {}");
    norm->add_option("instance", norm_in)->required();
    norm->add_option("-o,--output", norm_out);

    std::string apex_in, apex_out;
    std::optional<std::uint32_t> apex_variant;
    auto* apex = app.add_subcommand("apex", "join a new vertex to every vertex outside T");
    apex->add_option("instance", apex_in)->required();
    apex->add_option("--apex-variant", apex_variant, "exempt this vertex instead of the apex");
    apex->add_option("-o,--output", apex_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve) return cmd_solve(so);
        if (*reduce) return cmd_reduce(reduce_in, reduce_out, reduce_json);
        if (*verify) return cmd_verify(vo);
        if (*gadget) return cmd_gadget(go);
        if (*gen) return cmd_gen(gen_seed, gen_n, gen_m, gen_adv, gen_out);
        if (*dot) return cmd_export_dot(dot_in, dot_witness, dot_out);
        if (*norm) return cmd_normalize(norm_in, norm_out);
        if (*apex) return cmd_apex(apex_in, apex_variant, apex_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
