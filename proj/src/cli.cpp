#include "impart/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "impart/errors.hpp"
#include "impart/io.hpp"
#include "impart/parameters.hpp"
#include "impart/reductions.hpp"
#include "impart/solvers.hpp"

namespace impart::cli {

namespace {

struct CommonOptions {
    std::string file;    // empty means standard input
    std::string format = "edgelist";
    bool json = false;
    bool timing = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool takes_graph = true) {
    if (takes_graph) {
        cmd->add_option("file", opts.file, "input graph file (default: standard input)");
        cmd->add_option("--format", opts.format, "input format")
            ->check(CLI::IsMember({"edgelist", "graph6"}));
    }
    cmd->add_flag("--json", opts.json, "emit a JSON report");
    cmd->add_flag("--timing", opts.timing, "include measured wall time in the report");
}

Graph load_graph(const CommonOptions& opts) {
    std::string text;
    if (opts.file.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(opts.file);
        if (!in) throw ParseError("cannot open input file '" + opts.file + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    if (opts.format == "graph6") return io::parse_graph6(text);
    return io::parse_edge_list(text);
}

std::string describe(const Graph& g) {
    std::ostringstream out;
    out << "graph n=" << g.order() << " m=" << g.size();
    return out.str();
}

std::string join_vertices(const std::vector<int>& vs) {
    std::ostringstream out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out << ' ';
        out << vs[i];
    }
    return out.str();
}

void fill_trace(const SolverTrace& trace, RunReport& report) {
    if (trace.early_exit_reason)
        report.trace["early_exit_reason"] = std::string(to_string(*trace.early_exit_reason));
    if (trace.high_degree_count)
        report.trace["high_degree_count"] = std::to_string(*trace.high_degree_count);
    if (trace.edge_budget) report.trace["edge_budget"] = std::to_string(*trace.edge_budget);
    if (trace.bag) report.trace["bag"] = join_vertices(trace.bag->members());
    report.trace["candidates_examined"] = std::to_string(trace.candidates_examined);
}

class UnsupportedParameter : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Answer dispatch_fpt(const Graph& g, ParameterId p, int k, int ell, int m) {
    switch (p) {
        case ParameterId::independence_number: return large_fpt_independence(g, k, ell, m);
        case ParameterId::treewidth: return large_fpt_treewidth(g, k, ell, m);
        case ParameterId::pathwidth: return large_fpt_pathwidth(g, k, ell, m);
        case ParameterId::order: return large_fpt_vertices(g, k, ell, m);
        case ParameterId::size: return large_fpt_edges(g, k, ell, m);
        default:
            throw UnsupportedParameter(
                "no FPT routine for parameter '" + std::string(to_string(p)) + "'");
    }
}

}  // namespace

std::string RunReport::to_text() const {
    std::ostringstream out;
    out << "command: " << command << '\n';
    out << "instance: " << instance << '\n';
    if (verdict) out << "verdict: " << *verdict << '\n';
    if (value) out << "value: " << *value << '\n';
    if (witness) out << "witness: " << join_vertices(*witness) << '\n';
    for (const auto& [key, val] : trace) out << "trace." << key << ": " << val << '\n';
    out << "wall_time_ms: " << wall_time_ms << '\n';
    return out.str();
}

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["command"] = command;
    j["instance"] = instance;
    if (verdict) j["verdict"] = *verdict;
    if (value) j["value"] = *value;
    if (witness) j["witness"] = *witness;
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [key, val] : trace) t[key] = val;
    j["trace"] = t;
    j["wall_time_ms"] = wall_time_ms;
    return j.dump();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"induced multipartite graph parameters toolkit"};
    app.require_subcommand(1);

    std::string command_echo;
    for (int i = 0; i < argc; ++i) {
        if (i) command_echo += ' ';
        command_echo += argv[i];
    }

    std::string param_name, gen_kind;
    int k = 2, ell = 0, m = 0, gen_n = 0, gen_k = 2, gen_edges = -1;
    std::uint64_t seed = 0;
    double gnp_p = 0.5;

    CommonOptions opt_param, opt_pk, opt_ikpsp, opt_oracle, opt_fpt, opt_lex, opt_tmd4,
        opt_thm1, opt_gen;

    auto* cmd_param = app.add_subcommand("param", "compute one graph parameter");
    cmd_param->add_option("tag", param_name, "parameter name")->required();
    add_common(cmd_param, opt_param);

    auto* cmd_pk = app.add_subcommand("pk", "maximum of the parameter over induced k-partite subgraphs");
    cmd_pk->add_option("--param", param_name, "parameter name")->required();
    cmd_pk->add_option("--k", k, "number of parts")->required();
    add_common(cmd_pk, opt_pk);

    auto* cmd_ikpsp = app.add_subcommand("ikpsp", "decide whether p(G,k) is at most ell");
    cmd_ikpsp->add_option("--param", param_name)->required();
    cmd_ikpsp->add_option("--k", k)->required();
    cmd_ikpsp->add_option("--ell", ell)->required();
    add_common(cmd_ikpsp, opt_ikpsp);

    auto* cmd_oracle =
        app.add_subcommand("large-oracle", "deletion-set enumeration reference solver");
    cmd_oracle->add_option("--param", param_name)->required();
    cmd_oracle->add_option("--k", k)->required();
    cmd_oracle->add_option("--ell", ell)->required();
    cmd_oracle->add_option("--m", m)->required();
    add_common(cmd_oracle, opt_oracle);

    auto* cmd_fpt = app.add_subcommand("large-fpt", "fixed-parameter routine for the parameter");
    cmd_fpt->add_option("--param", param_name)->required();
    cmd_fpt->add_option("--k", k)->required();
    cmd_fpt->add_option("--ell", ell)->required();
    cmd_fpt->add_option("--m", m)->required();
    add_common(cmd_fpt, opt_fpt);

    auto* cmd_reduce = app.add_subcommand("reduce", "construct a hardness-reduction instance");
    cmd_reduce->require_subcommand(1);
    auto* cmd_lex = cmd_reduce->add_subcommand("lex", "stable-set reduction via K_k | G");
    cmd_lex->add_option("--param", param_name)->required();
    cmd_lex->add_option("--k", k)->required();
    cmd_lex->add_option("--m", m)->required();
    add_common(cmd_lex, opt_lex);
    auto* cmd_tmd4 = cmd_reduce->add_subcommand("tmd4", "tripartite max-degree-4 reduction");
    cmd_tmd4->add_option("--param", param_name)->required();
    add_common(cmd_tmd4, opt_tmd4);

    auto* cmd_thm1 = app.add_subcommand("verify-thm1", "check p(G_k,k) == f_k(alpha(G))");
    cmd_thm1->add_option("--param", param_name)->required();
    cmd_thm1->add_option("--k", k)->required();
    add_common(cmd_thm1, opt_thm1);

    auto* cmd_gen = app.add_subcommand("gen", "generate a graph");
    cmd_gen->add_option("kind", gen_kind, "gnp | cycle | path | complete | complete_multipartite | max_degree4")
        ->required();
    cmd_gen->add_option("--n", gen_n, "order")->required();
    cmd_gen->add_option("--k", gen_k, "parts (complete_multipartite)");
    cmd_gen->add_option("--p", gnp_p, "edge probability (gnp)");
    cmd_gen->add_option("--edges", gen_edges, "edge budget (max_degree4)");
    cmd_gen->add_option("--seed", seed, "random seed");
    cmd_gen->add_option("--format", opt_gen.format, "output format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    cmd_gen->add_flag("--json", opt_gen.json, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    RunReport report;
    report.command = command_echo;

    auto finish = [&](const CommonOptions& opts) {
        if (opts.timing) {
            const auto elapsed = std::chrono::steady_clock::now() - started;
            report.wall_time_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        out << (opts.json ? report.to_json() + "\n" : report.to_text());
        return 0;
    };

    auto parse_param = [&]() {
        auto p = parameter_from_string(param_name);
        if (!p) throw UnsupportedParameter("unknown parameter '" + param_name + "'");
        return *p;
    };

    // Emission gate: a yes verdict with a witness must re-verify.
    auto gated_answer = [&](const Graph& g, const ProblemInstance& instance,
                            const Answer& answer) {
        if (answer.verdict && answer.deleted && !verify_answer(g, instance, answer))
            throw std::logic_error("internal error: witness failed verification");
        report.verdict = answer.verdict ? "yes" : "no";
        if (answer.deleted) report.witness = answer.deleted->members();
        fill_trace(answer.trace, report);
    };

    try {
        if (*cmd_param) {
            ParameterId p = parse_param();
            Graph g = load_graph(opt_param);
            report.instance = describe(g) + "; param=" + std::string(to_string(p));
            if (p == ParameterId::independence_number) {
                auto r = independence_number(g);
                report.value = r.value;
                report.witness = r.witness.members();
            } else {
                report.value = evaluate_parameter(p, g);
            }
            return finish(opt_param);
        }
        if (*cmd_pk) {
            ParameterId p = parse_param();
            Graph g = load_graph(opt_pk);
            report.instance = describe(g) + "; param=" + std::string(to_string(p)) +
                              " k=" + std::to_string(k);
            PkResult r = p_of_G_k(g, p, k);
            std::vector<Vertex> removed;
            for (Vertex v = 0; v < g.order(); ++v)
                if (!r.witness.contains(v)) removed.push_back(v);
            Answer as_answer{true, VertexSet(removed), {}};
            ProblemInstance instance{g, p, k, static_cast<int>(r.value), std::nullopt};
            if (!verify_answer(g, instance, as_answer))
                throw std::logic_error("internal error: witness failed verification");
            report.value = r.value;
            report.witness = r.witness.members();
            return finish(opt_pk);
        }
        if (*cmd_ikpsp) {
            ParameterId p = parse_param();
            Graph g = load_graph(opt_ikpsp);
            report.instance = describe(g) + "; param=" + std::string(to_string(p)) +
                              " k=" + std::to_string(k) + " ell=" + std::to_string(ell);
            Answer answer = ikpsp_decide(g, p, k, ell);
            ProblemInstance instance{g, p, k, ell, std::nullopt};
            if (answer.verdict)
                gated_answer(g, instance, answer);
            else {
                report.verdict = "no";
                if (answer.deleted) report.witness = answer.deleted->members();
                fill_trace(answer.trace, report);
            }
            return finish(opt_ikpsp);
        }
        if (*cmd_oracle || *cmd_fpt) {
            const bool fpt = static_cast<bool>(*cmd_fpt);
            const CommonOptions& opts = fpt ? opt_fpt : opt_oracle;
            ParameterId p = parse_param();
            Graph g = load_graph(opts);
            report.instance = describe(g) + "; param=" + std::string(to_string(p)) +
                              " k=" + std::to_string(k) + " ell=" + std::to_string(ell) +
                              " m=" + std::to_string(m);
            Answer answer = fpt ? dispatch_fpt(g, p, k, ell, m)
                                : large_ikpsp_oracle(g, p, k, ell, m);
            gated_answer(g, ProblemInstance{g, p, k, ell, m}, answer);
            return finish(opts);
        }
        if (*cmd_lex || *cmd_tmd4) {
            ParameterId p = parse_param();
            const CommonOptions& opts = *cmd_lex ? opt_lex : opt_tmd4;
            Graph g = load_graph(opts);
            ReductionOutput r = *cmd_lex ? mss_to_ikpsp(g, m, k, p) : tmd4_to_large(g, p);
            report.instance = describe(g) + "; reduction=" + r.provenance.reduction;
            report.trace["produced_graph6"] = io::emit_graph6(r.produced);
            report.trace["instance_param"] = std::string(to_string(r.instance.param));
            report.trace["instance_k"] = std::to_string(r.instance.k);
            report.trace["instance_ell"] = std::to_string(r.instance.ell);
            if (r.instance.m) report.trace["instance_m"] = std::to_string(*r.instance.m);
            if (r.threshold) report.trace["threshold"] = std::to_string(*r.threshold);
            report.trace["source_graph6"] = r.provenance.source_graph6;
            return finish(opts);
        }
        if (*cmd_thm1) {
            ParameterId p = parse_param();
            Graph g = load_graph(opt_thm1);
            report.instance = describe(g) + "; param=" + std::string(to_string(p)) +
                              " k=" + std::to_string(k);
            report.verdict = verify_theorem1_identity(g, k, p) ? "yes" : "no";
            return finish(opt_thm1);
        }
        if (*cmd_gen) {
            io::GenSpec spec;
            spec.kind = gen_kind;
            spec.n = gen_n;
            spec.k = gen_k;
            spec.p = gnp_p;
            spec.edge_budget = gen_edges;
            Graph g = io::gen(spec, seed);
            if (opt_gen.json) {
                nlohmann::json j;
                j["schema"] = 1;
                j["command"] = command_echo;
                j["graph6"] = io::emit_graph6(g);
                out << j.dump() << '\n';
            } else if (opt_gen.format == "graph6") {
                out << io::emit_graph6(g) << '\n';
            } else {
                out << io::emit_edge_list(g);
            }
            return 0;
        }
    } catch (const UnsupportedParameter& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return 3;
    } catch (const CeilingError& e) {
        err << "ceiling exceeded: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace impart::cli
