#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crnd/decomp.hpp"
#include "crnd/errors.hpp"
#include "crnd/instance_io.hpp"
#include "crnd/lp.hpp"
#include "crnd/solver.hpp"

namespace crnd {

namespace cli_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string set_to_string(const ParsedInstance& parsed, const NodeSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.to_vector()) {
        if (!first) out += ",";
        out += parsed.name_of(v);
        first = false;
    }
    return out + "}";
}

inline std::string edge_to_string(const ParsedInstance& parsed, int e) {
    const auto& ed = parsed.inst.graph.edges[e];
    return parsed.name_of(ed.u) + " " + parsed.name_of(ed.v);
}

// Solution files: one edge per line, either `<u> <v>` (consumes the first
// unused parallel edge between u and v) or a bare edge id.  '#' comments ok.
inline std::vector<int> parse_edge_list(const ParsedInstance& parsed, const std::string& text) {
    const Multigraph& g = parsed.inst.graph;
    std::vector<bool> used(g.edge_count(), false);
    std::vector<int> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        if (a[0] == '#') continue;
        if (!(ls >> b)) {
            int e = -1;
            try {
                e = std::stoi(a);
            } catch (const std::exception&) {
                throw ParseError(line_no, "expected an edge id or '<u> <v>'");
            }
            if (e < 0 || e >= g.edge_count()) throw ParseError(line_no, "edge id out of range");
            if (used[e]) throw ParseError(line_no, "edge repeated");
            used[e] = true;
            out.push_back(e);
            continue;
        }
        int u = parsed.node_id(a), v = parsed.node_id(b);
        if (u < 0 || v < 0) throw ParseError(line_no, "unknown node in edge '" + line + "'");
        int chosen = -1;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (used[e]) continue;
            const auto& ed = g.edges[e];
            if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) {
                chosen = e;
                break;
            }
        }
        if (chosen == -1) throw ParseError(line_no, "no unused edge '" + a + " " + b + "'");
        used[chosen] = true;
        out.push_back(chosen);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cli_detail

// Exit codes: 0 success / feasible verdict, 1 infeasible verdict,
// 2 usage, parse, or size errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cut-relative survivable network design"};
    app.require_subcommand(1);

    std::string file, solution_file, model_name = "cut", graph_file;
    bool dump_lp = false, dump_tree_flag = false;
    long long gen_k = 2;
    int rand_n = 5, rand_m = 8, rand_reqs = 2, rand_rmax = 3;
    std::uint64_t rand_seed = 1;

    auto* solve_cmd = app.add_subcommand("solve", "iterative rounding solver");
    solve_cmd->add_option("file", file)->required();

    auto* lp_cmd = app.add_subcommand("lp", "extreme-point LP optimum");
    lp_cmd->add_option("file", file)->required();
    lp_cmd->add_flag("--dump", dump_lp, "print the working constraint rows");

    auto* verify_cmd = app.add_subcommand("verify", "check a solution file");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--solution", solution_file)->required();
    verify_cmd->add_option("--model", model_name)->check(CLI::IsMember({"cut", "path"}));

    auto* exact_cmd = app.add_subcommand("exact", "brute-force optimum");
    exact_cmd->add_option("file", file)->required();
    exact_cmd->add_option("--model", model_name)->check(CLI::IsMember({"cut", "path"}));

    auto* decomp_cmd = app.add_subcommand("decompose", "canonical decomposition tree");
    decomp_cmd->add_option("file", file)->required();
    decomp_cmd->add_flag("--tree", dump_tree_flag, "(kept for symmetry; tree always printed)");

    auto* gen_cmd = app.add_subcommand("gen", "instance generators");
    gen_cmd->require_subcommand(1);
    auto* gen_nolam_cmd = gen_cmd->add_subcommand("nolam", "the golden 5-node instance");
    auto* gen_kecss_cmd = gen_cmd->add_subcommand("kecss", "k-ECSS reduction of a graph");
    gen_kecss_cmd->add_option("--graph", graph_file)->required();
    gen_kecss_cmd->add_option("--k", gen_k)->required();
    auto* gen_random_cmd = gen_cmd->add_subcommand("random", "seeded random SNDP instance");
    gen_random_cmd->add_option("--n", rand_n);
    gen_random_cmd->add_option("--m", rand_m);
    gen_random_cmd->add_option("--reqs", rand_reqs);
    gen_random_cmd->add_option("--rmax", rand_rmax);
    gen_random_cmd->add_option("--seed", rand_seed);

    try {
        std::vector<const char*> argv;
        argv.push_back("crnd");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*solve_cmd) {
            ParsedInstance parsed = parse_instance(cli_detail::read_file(file));
            Solution sol = crndp_alg(parsed.inst);
            Rat ratio = sol.lp_bound == 0 ? Rat(1) : sol.cost / sol.lp_bound;
            out << "cost=" << rat_to_string(sol.cost) << " lp=" << rat_to_string(sol.lp_bound)
                << " ratio=" << rat_to_decimal(ratio, 3) << "\n";
            for (int e : sol.edges) out << cli_detail::edge_to_string(parsed, e) << "\n";
            return 0;
        }
        if (*lp_cmd) {
            ParsedInstance parsed = parse_instance(cli_detail::read_file(file));
            if (!parsed.inst.has_separation_oracle())
                throw UnsupportedFamilyError("lp needs an SNDP-family instance");
            CrlpResult lp = solve_crlp(parsed.inst.reqs, parsed.inst.graph, parsed.inst.costs,
                                       std::vector<bool>{});
            out << "objective=" << rat_to_string(lp.solution.objective) << "\n";
            for (int e = 0; e < parsed.inst.graph.edge_count(); ++e)
                out << cli_detail::edge_to_string(parsed, e) << " = "
                    << rat_to_string(lp.solution.x[e]) << "\n";
            if (dump_lp)
                dump_working_lp(out, lp, [&](int v) { return parsed.name_of(v); });
            return 0;
        }
        if (*verify_cmd) {
            ParsedInstance parsed = parse_instance(cli_detail::read_file(file));
            auto edges =
                cli_detail::parse_edge_list(parsed, cli_detail::read_file(solution_file));
            FeasibilityReport report =
                model_name == "cut" ? check_cut_relative(parsed.inst, edges)
                                    : check_path_relative(parsed.inst, edges);
            if (report.feasible) {
                out << "feasible\n";
                return 0;
            }
            out << "infeasible\n";
            if (report.witness_cut) {
                out << "witness cut " << cli_detail::set_to_string(parsed, *report.witness_cut)
                    << " has " << report.witness_have << " < " << report.witness_need << "\n";
            }
            if (report.witness_faults) {
                const auto& p = parsed.inst.reqs.pairs[report.witness_pair];
                out << "witness pair " << parsed.name_of(p.s) << "-" << parsed.name_of(p.t)
                    << " faults";
                for (int e : *report.witness_faults)
                    out << " [" << cli_detail::edge_to_string(parsed, e) << "]";
                out << "\n";
            }
            return 1;
        }
        if (*exact_cmd) {
            ParsedInstance parsed = parse_instance(cli_detail::read_file(file));
            auto [cost, edges] = exact_opt(
                parsed.inst, model_name == "cut" ? Model::CutRelative : Model::PathRelative);
            out << "cost=" << rat_to_string(cost) << "\n";
            for (int e : edges) out << cli_detail::edge_to_string(parsed, e) << "\n";
            return 0;
        }
        if (*decomp_cmd) {
            (void)dump_tree_flag;
            ParsedInstance parsed = parse_instance(cli_detail::read_file(file));
            DecompTree tree = parsed.inst.has_separation_oracle()
                                  ? build_decomposition_tree(parsed.inst.reqs, parsed.inst.graph)
                                  : build_decomposition_tree(parsed.inst.base_fn(),
                                                             parsed.inst.graph);
            dump_tree(out, tree, [&](int v) { return parsed.name_of(v); });
            Decomposition decomp = leaf_instances(tree);
            out << "partition:";
            for (const auto& [fn, nodes] : decomp.leaves)
                out << " " << cli_detail::set_to_string(parsed, nodes);
            out << "\n";
            out << "Z:";
            for (int e : decomp.forced_edges)
                out << " [" << cli_detail::edge_to_string(parsed, e) << "]";
            out << "\n";
            return 0;
        }
        if (*gen_nolam_cmd) {
            out << gen_nolam();
            return 0;
        }
        if (*gen_kecss_cmd) {
            ParsedInstance base =
                parse_instance(cli_detail::read_file(graph_file), /*require_family=*/false);
            out << gen_kecss_reduction(base, gen_k);
            return 0;
        }
        if (*gen_random_cmd) {
            out << gen_random(rand_n, rand_m, rand_reqs, rand_rmax, rand_seed);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace crnd
