#include "sandpiles/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sandpiles/errors.hpp"
#include "sandpiles/families.hpp"
#include "sandpiles/formulas.hpp"
#include "sandpiles/graph_io.hpp"
#include "sandpiles/sandpile.hpp"
#include "sandpiles/verify.hpp"

namespace sandpiles {

namespace {

using nlohmann::ordered_json;

Args to_args(const std::vector<std::string>& raw) {
    Args x;
    for (const std::string& s : raw) {
        try {
            x.emplace_back(s);
        } catch (const std::invalid_argument&) {
            throw ParseError("'" + s + "' is not an integer");
        }
    }
    return x;
}

std::vector<std::string> factor_strings(const GroupStructure& s) {
    std::vector<std::string> out;
    for (const Int& f : s.invariant_factors) out.push_back(f.get_str());
    return out;
}

void print_report(std::ostream& out, const ordered_json& report) {
    out << report.dump(2) << "\n";
}

// Shared tail of the three `gen` kinds: serialize, write or print, report.
int emit_graph(const Multigraph& g, const std::string& out_path, bool dot,
               bool json, const std::string& kind, ordered_json inputs,
               std::ostream& out) {
    const std::string text = dot ? write_dot(g) : write_graph_string(g);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw Error("cannot write '" + out_path + "'");
        f << text;
    }

    if (json) {
        ordered_json result;
        result["vertices"] = g.vertex_count();
        result["edges"] = g.edge_count();
        if (out_path.empty())
            result["graph"] = text;
        else
            result["out"] = out_path;
        ordered_json report;
        report["command"] = "gen";
        ordered_json keyed;
        keyed["kind"] = kind;
        for (auto& [key, value] : inputs.items()) keyed[key] = value;
        report["inputs"] = std::move(keyed);
        report["result"] = std::move(result);
        print_report(out, report);
    } else if (out_path.empty()) {
        out << text;
    } else {
        out << "vertices: " << g.vertex_count() << "\n"
            << "edges: " << g.edge_count() << "\n";
    }
    return 0;
}

int report_verify(const std::string& suite, const VerifyResult& r,
                  int trials, std::uint64_t seed, bool json,
                  std::ostream& out) {
    if (json) {
        ordered_json report;
        report["command"] = "verify";
        report["inputs"] = {{"suite", suite},
                            {"trials", trials},
                            {"seed", seed}};
        report["result"] = {{"passed", r.passed},
                            {"failed", r.failed},
                            {"failure_seeds", r.failure_seeds}};
        print_report(out, report);
    } else {
        out << suite << ": " << r.passed << "/" << trials << " passed\n";
        if (r.failed > 0) {
            out << "failure seeds:";
            for (std::uint64_t s : r.failure_seeds) out << " " << s;
            out << "\n";
        }
    }
    return r.failed > 0 ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Sandpile groups of multigraphs, chained-cycle graph "
                 "families, and their spanning-tree count formulas"};
    app.name("sandpile");
    app.require_subcommand(1);

    // --- group ---
    auto* cmd_group = app.add_subcommand(
        "group", "Sandpile group of a graph from a file");
    std::string group_path;
    int group_drop = 0;
    bool group_json = false, group_lap = false, group_red = false;
    cmd_group->add_option("file", group_path, "graph file")->required();
    cmd_group->add_option("--drop", group_drop,
                          "vertex to drop (default: highest id)");
    cmd_group->add_flag("--print-laplacian", group_lap,
                        "print the Laplacian as rows of integers");
    cmd_group->add_flag("--print-reduced", group_red,
                        "print the reduced Laplacian");
    cmd_group->add_flag("--json", group_json, "machine-readable report");

    // --- gen ---
    auto* cmd_gen = app.add_subcommand("gen", "Generate a family graph");
    cmd_gen->require_subcommand(1);
    std::string gen_out;
    bool gen_dot = false, gen_json = false;

    auto* gen_can = cmd_gen->add_subcommand(
        "ch-canonical", "Canonical chained-cycle graph");
    std::vector<std::int64_t> can_a;
    gen_can->add_option("--a", can_a, "cycle lengths")
        ->delimiter(',')
        ->required();

    auto* gen_mem = cmd_gen->add_subcommand(
        "ch-member", "Chained-cycle class member built from a plan");
    std::vector<std::int64_t> mem_a;
    std::vector<int> mem_plan;
    gen_mem->add_option("--a", mem_a, "cycle lengths")
        ->delimiter(',')
        ->required();
    gen_mem->add_option("--plan", mem_plan, "attachment plan (n-1 entries)")
        ->delimiter(',')
        ->required();

    auto* gen_h = cmd_gen->add_subcommand(
        "h", "Two graphs attached to a cycle");
    int h_n = 0, h_i = 0;
    std::string h_f_path, h_g_path;
    std::vector<std::int64_t> h_f1, h_f2, h_g1, h_g2;
    gen_h->add_option("--n", h_n, "cycle length (>= 3)")->required();
    gen_h->add_option("--i", h_i, "attachment index (0..n-2)");
    gen_h->add_option("--F", h_f_path, "graph file for F (omit for empty)");
    gen_h->add_option("--G", h_g_path, "graph file for G (omit for empty)");
    gen_h->add_option("--f1", h_f1, "edges from each F vertex to cycle vertex i")
        ->delimiter(',');
    gen_h->add_option("--f2", h_f2, "edges from each F vertex to cycle vertex i+1")
        ->delimiter(',');
    gen_h->add_option("--g1", h_g1, "edges from each G vertex to cycle vertex n-1")
        ->delimiter(',');
    gen_h->add_option("--g2", h_g2, "edges from each G vertex to cycle vertex n")
        ->delimiter(',');

    for (auto* sub : {gen_can, gen_mem, gen_h}) {
        sub->add_option("--out", gen_out, "write the graph to this file");
        sub->add_flag("--dot", gen_dot, "emit Graphviz instead of graph text");
        sub->add_flag("--json", gen_json, "machine-readable report");
    }

    // --- formula ---
    auto* cmd_formula =
        app.add_subcommand("formula", "Evaluate a tree-count formula");
    cmd_formula->require_subcommand(1);
    std::vector<std::string> formula_a;
    bool formula_json = false;
    auto* formula_f =
        cmd_formula->add_subcommand("f", "recursive form F_n");
    auto* formula_g =
        cmd_formula->add_subcommand("g", "closed form G_n");
    for (auto* sub : {formula_f, formula_g}) {
        sub->add_option("--a", formula_a, "integer arguments")
            ->delimiter(',')
            ->required();
        sub->add_flag("--json", formula_json, "machine-readable report");
    }

    // --- verify ---
    auto* cmd_verify =
        app.add_subcommand("verify", "Run a randomized verification suite");
    cmd_verify->require_subcommand(1);
    int trials = 50;
    std::uint64_t seed = 1;
    bool verify_json = false;
    auto* v_t1 = cmd_verify->add_subcommand(
        "t1", "attachment-position independence of the sandpile group");
    auto* v_t3 = cmd_verify->add_subcommand(
        "t3", "recursive and closed-form tree counts agree");
    auto* v_t4 = cmd_verify->add_subcommand(
        "t4", "chained-cycle groups are cyclic of the predicted order");
    auto* v_mt = cmd_verify->add_subcommand(
        "matrix-tree", "group order equals brute-force spanning tree count");
    for (auto* sub : {v_t1, v_t3, v_t4, v_mt}) {
        sub->add_option("--trials", trials, "number of trials");
        sub->add_option("--seed", seed, "base seed");
        sub->add_flag("--json", verify_json, "machine-readable report");
    }

    // Parse through an argv shim; CLI11's vector overload wants the
    // arguments reversed, which is easy to get wrong.
    std::vector<const char*> argv;
    argv.push_back("sandpile");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (cmd_group->parsed()) {
            Multigraph g = read_graph_file(group_path);
            VertexId drop =
                group_drop == 0 ? g.vertex_count() : group_drop;
            GroupStructure s = sandpile_group_dropping(g, drop);
            if (group_json) {
                ordered_json report;
                report["command"] = "group";
                report["inputs"] = {{"path", group_path}, {"drop", drop}};
                report["result"] = {{"factors", factor_strings(s)},
                                    {"order", s.order.get_str()}};
                print_report(out, report);
            } else {
                if (group_lap) out << g.laplacian().to_text() << "\n";
                if (group_red)
                    out << g.reduced_laplacian(drop).to_text() << "\n";
                out << "group: " << s.to_string() << "\n";
                out << "order: " << s.order << "\n";
            }
            return 0;
        }

        if (gen_can->parsed()) {
            ordered_json inputs;
            inputs["a"] = can_a;
            return emit_graph(build_ch_canonical(can_a), gen_out, gen_dot,
                              gen_json, "ch-canonical", std::move(inputs),
                              out);
        }
        if (gen_mem->parsed()) {
            ordered_json inputs;
            inputs["a"] = mem_a;
            inputs["plan"] = mem_plan;
            return emit_graph(build_ch_member({mem_a, mem_plan}), gen_out,
                              gen_dot, gen_json, "ch-member",
                              std::move(inputs), out);
        }
        if (gen_h->parsed()) {
            HSpec spec;
            spec.cycle_length = h_n;
            spec.attach_index = h_i;
            if (!h_f_path.empty()) spec.f = read_graph_file(h_f_path);
            if (!h_g_path.empty()) spec.g = read_graph_file(h_g_path);
            spec.f1 = h_f1;
            spec.f2 = h_f2;
            spec.g1 = h_g1;
            spec.g2 = h_g2;
            ordered_json inputs;
            inputs["n"] = h_n;
            inputs["i"] = h_i;
            inputs["F"] = h_f_path;
            inputs["G"] = h_g_path;
            inputs["f1"] = h_f1;
            inputs["f2"] = h_f2;
            inputs["g1"] = h_g1;
            inputs["g2"] = h_g2;
            return emit_graph(build_h(spec), gen_out, gen_dot, gen_json,
                              "h", std::move(inputs), out);
        }

        if (formula_f->parsed() || formula_g->parsed()) {
            Args x = to_args(formula_a);
            const bool is_f = formula_f->parsed();
            Int value = is_f ? f_recursive(x) : g_closed_form(x);
            if (formula_json) {
                ordered_json report;
                report["command"] = "formula";
                report["inputs"] = {{"kind", is_f ? "f" : "g"},
                                    {"a", formula_a}};
                report["result"] = {{"value", value.get_str()}};
                print_report(out, report);
            } else {
                out << value << "\n";
            }
            return 0;
        }

        if (v_t1->parsed())
            return report_verify("t1", verify_theorem1(trials, seed), trials,
                                 seed, verify_json, out);
        if (v_t3->parsed())
            return report_verify("t3", verify_theorem3(trials, seed), trials,
                                 seed, verify_json, out);
        if (v_t4->parsed())
            return report_verify("t4", verify_theorem4(trials, seed), trials,
                                 seed, verify_json, out);
        if (v_mt->parsed())
            return report_verify("matrix-tree",
                                 verify_matrix_tree(trials, seed), trials,
                                 seed, verify_json, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no command\n";
    return 2;
}

}  // namespace sandpiles
