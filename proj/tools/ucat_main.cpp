// Command-line front end: reads instance JSON, dispatches to the library,
// prints a machine-readable report. Exit codes: 0 success, 1 invalid
// input, 2 budget exceeded, 3 verification disagreement.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ucat/errors.hpp"
#include "ucat/exact_solver.hpp"
#include "ucat/gadgets.hpp"
#include "ucat/json_io.hpp"
#include "ucat/oracles.hpp"
#include "ucat/subdivide.hpp"
#include "ucat/tree_solver.hpp"
#include "ucat/unimodal.hpp"

namespace {

using ucat::json;

struct Options {
    std::string file;
    std::string method = "exact";
    std::string kind;
    unsigned p = 1;
    int k = -1;
    int refine = 0;
    bool strong = false;
    bool pretty = false;
    ucat::SolverLimits limits;
};

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void emit(const json& report, bool pretty) {
    if (pretty)
        std::cout << report.dump(2) << std::endl;
    else
        std::cout << report.dump() << std::endl;
}

json parameters_json(const Options& opt) {
    return json{{"p", opt.p},
                {"k", opt.k},
                {"refine", opt.refine},
                {"strong", opt.strong},
                {"method", opt.method},
                {"threads", opt.limits.threads},
                {"budget_vertices", opt.limits.max_vertices},
                {"max_k", opt.limits.max_k},
                {"lp_pivot_cap", opt.limits.lp_pivot_cap}};
}

int cmd_check(const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    auto inst = ucat::load_instance_file(opt.file);
    auto check = ucat::is_unimodal(inst.graph, inst.function);
    json report;
    report["command"] = "check";
    report["instance"] = json{{"name", inst.name}, {"vertices", inst.graph.vertex_count()}};
    report["result"] = json{{"unimodal", check.unimodal}};
    if (check.unimodal) report["result"]["root"] = check.root;
    if (check.witness) report["result"]["witness"] = witness_to_json(inst.graph, *check.witness);
    report["warnings"] = json::array();
    report["timings_ms"] = json{{"total", ms_since(start)}};
    emit(report, opt.pretty);
    return 0;
}

int cmd_decompose(const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    auto inst = ucat::load_instance_file(opt.file);
    json report;
    report["command"] = "decompose";
    report["instance"] = json{{"name", inst.name}, {"vertices", inst.graph.vertex_count()}};
    report["parameters"] = parameters_json(opt);
    json warnings = json::array();

    if (opt.method == "tree") {
        if (!ucat::is_tree(inst.graph)) {
            std::cerr << "error: the tree method needs an acyclic connected graph; "
                         "use --method exact for general graphs\n";
            return 1;
        }
        auto d = ucat::ucat_p_tree(inst.graph, inst.function, opt.p);
        report["result"] = json{{"count", d.count()}, {"exact", true}};
        report["certificates"] = decomposition_to_json(inst.graph, d);
        if (opt.strong) {
            std::vector<ucat::VertexFunction> fns;
            for (const auto& c : d.components) fns.push_back(c.values);
            auto sc = ucat::is_strong_decomposition(inst.graph, fns, opt.limits.threads);
            report["result"]["strong"] = sc.strong;
        }
    } else if (opt.k >= 0 && !opt.strong) {
        // decision mode: is ucat^p <= k at this refinement?
        auto powered = inst.function.pow(opt.p);
        auto leq = ucat::ucat_leq(inst.graph, powered, opt.k, opt.refine, opt.limits);
        report["result"] = json{{"satisfiable", leq.satisfiable}, {"k", opt.k}};
        if (leq.satisfiable) {
            auto refined = ucat::subdivide(inst.graph, powered, opt.refine);
            report["certificates"] = decomposition_to_json(refined.graph, leq.certificate);
        }
    } else {
        ucat::UcatResult res = opt.strong
                                   ? ucat::exact_ucat_strong(inst.graph, inst.function, opt.p,
                                                             opt.limits)
                                   : ucat::exact_ucat(inst.graph, inst.function, opt.p, opt.refine,
                                                      opt.limits);
        report["result"] = json{{"count", res.value},
                                {"exact", res.exact},
                                {"refinement", res.refinement},
                                {"strong", res.strong}};
        if (!res.exact)
            warnings.push_back("upper bound at refinement " + std::to_string(res.refinement) +
                               ": support has a cycle and vertex-supported components may be "
                               "non-minimal");
        if (res.strong_search_incomplete)
            warnings.push_back("strong search incomplete: only basic solutions were examined "
                               "below the reported size");
        report["certificates"] = decomposition_to_json(res.instance.graph, res.certificate);
    }
    report["warnings"] = std::move(warnings);
    report["timings_ms"] = json{{"total", ms_since(start)}};
    emit(report, opt.pretty);
    return 0;
}

int cmd_gadget(const Options& opt) {
    auto inst = ucat::load_instance_file(opt.file);
    ucat::GadgetInstance gadget;
    json provenance;
    if (opt.kind == "coloring") {
        int k = opt.k < 0 ? 3 : opt.k;
        gadget = ucat::coloring_gadget(inst.graph, k);
        provenance["kind"] = "coloring-apex";
        provenance["k"] = k;
        provenance["apex_vertices"] = gadget.apex_vertices;
    } else if (opt.kind == "vertex-cover") {
        gadget = ucat::vertex_cover_gadget(inst.graph);
        provenance["kind"] = "vertex-cover";
        provenance["midpoint_of_edge"] = gadget.midpoint_of_edge;
        if (!gadget.isolated_source_vertices.empty())
            provenance["isolated_source_vertices"] = gadget.isolated_source_vertices;
    } else {
        std::cerr << "error: unknown gadget kind '" << opt.kind << "'\n";
        return 1;
    }
    provenance["source"] = instance_to_json(inst.graph, inst.function, inst.name);
    json doc = instance_to_json(gadget.graph, gadget.function,
                                inst.name.empty() ? "" : inst.name + "-" + opt.kind);
    doc["provenance"] = std::move(provenance);
    emit(doc, opt.pretty);
    return 0;
}

int cmd_verify(const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    auto inst = ucat::load_instance_file(opt.file);
    ucat::ReductionReport rr;
    if (opt.kind == "coloring") {
        rr = ucat::verify_reduction(ucat::GadgetKind::ColoringApex, inst.graph,
                                    opt.k < 0 ? 3 : opt.k, opt.limits);
    } else if (opt.kind == "vertex-cover") {
        rr = ucat::verify_reduction(ucat::GadgetKind::VertexCover, inst.graph, 0, opt.limits);
    } else if (opt.kind == "two-trees") {
        rr = ucat::verify_two_trees(inst.graph, opt.limits);
    } else {
        std::cerr << "error: unknown verification kind '" << opt.kind << "'\n";
        return 1;
    }
    json report;
    report["command"] = "verify";
    report["instance"] = json{{"name", inst.name}, {"vertices", inst.graph.vertex_count()}};
    report["result"] = json{{"kind", rr.kind},
                            {"lhs", json{{"description", rr.lhs_description}, {"value", rr.lhs_value}}},
                            {"rhs", json{{"description", rr.rhs_description}, {"value", rr.rhs_value}}},
                            {"agree", rr.agree}};
    if (rr.ucat_side)
        report["certificates"] =
            decomposition_to_json(rr.ucat_side->instance.graph, rr.ucat_side->certificate);
    if (rr.two_trees_side && rr.two_trees_side->possible)
        report["certificates"] = json{{"first", bitset_to_json(rr.two_trees_side->first)},
                                      {"second", bitset_to_json(rr.two_trees_side->second)}};
    report["timings_ms"] = json{{"total", ms_since(start)}};
    emit(report, opt.pretty);
    return rr.agree ? 0 : 3;
}

int cmd_oracle(const Options& opt) {
    auto inst = ucat::load_instance_file(opt.file);
    json report;
    report["command"] = "oracle";
    report["instance"] = json{{"name", inst.name}, {"vertices", inst.graph.vertex_count()}};
    if (opt.kind == "chromatic") {
        int k = opt.k < 0 ? 3 : opt.k;
        auto ans = ucat::chromatic_decision(inst.graph, k);
        report["result"] = json{{"problem", "chromatic"}, {"k", k}, {"value", ans.colorable}};
        if (ans.colorable) report["result"]["witness"] = ans.coloring;
    } else if (opt.kind == "vc") {
        auto ans = ucat::min_vertex_cover(inst.graph);
        report["result"] = json{{"problem", "vertex-cover"},
                                {"value", ans.size},
                                {"witness", bitset_to_json(ans.cover)}};
    } else {
        std::cerr << "error: unknown oracle '" << opt.kind << "'\n";
        return 1;
    }
    emit(report, opt.pretty);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unimodal decompositions of edge-linear functions on graphs"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("UCAT_BUDGET_VERTICES")) opt.limits.max_vertices = std::atoi(env);

    auto add_common = [&](CLI::App* cmd, bool with_file = true) {
        if (with_file) cmd->add_option("file", opt.file, "instance JSON file")->required();
        cmd->add_option("--threads", opt.limits.threads, "worker cap");
        cmd->add_option("--budget-vertices", opt.limits.max_vertices,
                        "post-refinement vertex budget");
        cmd->add_option("--max-k", opt.limits.max_k, "largest component count searched");
        cmd->add_option("--lp-pivot-cap", opt.limits.lp_pivot_cap, "simplex pivot cap");
        cmd->add_flag("--pretty", opt.pretty, "indent the JSON report");
        cmd->add_flag("--json", [](std::int64_t) {}, "emit JSON (default)");
    };

    auto* check = app.add_subcommand("check", "decide unimodality with a witness");
    add_common(check);

    auto* decompose = app.add_subcommand("decompose", "compute a minimal decomposition");
    add_common(decompose);
    decompose->add_option("--method", opt.method, "tree | exact")
        ->check(CLI::IsMember({"tree", "exact"}));
    decompose->add_option("--p", opt.p, "power index");
    decompose->add_option("--k", opt.k, "decide ucat <= k instead of minimizing");
    decompose->add_option("--refine", opt.refine, "edge subdivision level");
    decompose->add_flag("--strong", opt.strong, "require strongly unimodal components");

    auto* gadget = app.add_subcommand("gadget", "emit a reduction instance");
    gadget->add_option("kind", opt.kind, "coloring | vertex-cover")->required();
    add_common(gadget);
    gadget->add_option("--k", opt.k, "apex count for coloring gadgets");

    auto* verify = app.add_subcommand("verify", "check a reduction equivalence");
    verify->add_option("kind", opt.kind, "coloring | vertex-cover | two-trees")->required();
    add_common(verify);
    verify->add_option("--k", opt.k, "color count for the coloring equivalence");

    auto* oracle = app.add_subcommand("oracle", "brute-force reference solvers");
    oracle->add_option("kind", opt.kind, "chromatic | vc")->required();
    add_common(oracle);
    oracle->add_option("--k", opt.k, "color count for the chromatic oracle");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(opt);
        if (decompose->parsed()) return cmd_decompose(opt);
        if (gadget->parsed()) return cmd_gadget(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (oracle->parsed()) return cmd_oracle(opt);
    } catch (const ucat::budget_error& e) {
        std::cerr << "budget exceeded (" << e.parameter() << "): " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
