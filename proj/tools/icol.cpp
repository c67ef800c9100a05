// icol: generate the extremal families, validate interval colorings, print
// diameter bounds, and run the exact solver. Exit codes: 0 ok/valid/feasible,
// 1 invalid/infeasible/refused, 2 solver out of budget, 3 malformed input
// files, 64 usage errors. All output is deterministic: identical invocations
// produce identical bytes.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "icol/certificates.hpp"
#include "icol/coloring.hpp"
#include "icol/families.hpp"
#include "icol/graph.hpp"
#include "icol/io.hpp"
#include "icol/solver.hpp"

namespace {

struct CliError {
    int code;
    std::string message;
};

icol::Graph load_graph_or_die(const std::string& path) {
    std::string text;
    try {
        text = icol::read_file(path);
    } catch (const std::exception& ex) {
        throw CliError{3, ex.what()};
    }
    try {
        return icol::parse_graph(text);
    } catch (const icol::ParseError& ex) {
        throw CliError{3, path + ": " + ex.what()};
    }
}

icol::EdgeColoring load_coloring_or_die(const std::string& path) {
    std::string text;
    try {
        text = icol::read_file(path);
    } catch (const std::exception& ex) {
        throw CliError{3, ex.what()};
    }
    try {
        return icol::parse_coloring(text);
    } catch (const icol::ParseError& ex) {
        throw CliError{3, path + ": " + ex.what()};
    }
}

// Inclusive range "a..b" or a single value "a".
std::vector<int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            size_t used = 0;
            int v = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return {v};
        }
        size_t used = 0;
        int lo = std::stoi(text.substr(0, dots), &used);
        if (used != dots)
            throw std::invalid_argument(text);
        std::string rest = text.substr(dots + 2);
        int hi = std::stoi(rest, &used);
        if (used != rest.size() || hi < lo)
            throw std::invalid_argument(text);
        std::vector<int> out;
        for (int v = lo; v <= hi; ++v)
            out.push_back(v);
        return out;
    } catch (const std::exception&) {
        throw CliError{64, "bad range '" + text + "' (expected N or A..B)"};
    }
}

struct FamilyParams {
    std::optional<int> d, q, delta;
};

int need(const std::optional<int>& v, const char* name, const std::string& family) {
    if (!v)
        throw CliError{64, "family " + family + " needs --" + name};
    return *v;
}

// Builds one instance; d=2 and delta=2 requests for the gdd families are
// covered by kbb and cycle, so they are routed there with a notice.
icol::FamilyInstance build_family(icol::FamilyId id, const FamilyParams& p) {
    using icol::FamilyId;
    const std::string name = icol::family_name(id);
    if (id == FamilyId::gdd_even || id == FamilyId::gdd_3 || id == FamilyId::gdd_odd) {
        int delta = need(p.delta, "delta", name);
        int d = id == FamilyId::gdd_3 ? 3 : need(p.d, "d", name);
        if (delta == 2) {
            std::cerr << "note: delta=2 instances are even cycles; building family "
                         "cycle with d="
                      << d << "\n";
            return icol::build_cycle_family(d);
        }
        if (d == 2) {
            std::cerr << "note: d=2 instances are complete bipartite; building family "
                         "kbb with delta="
                      << delta << "\n";
            return icol::build_kbb(delta);
        }
    }
    switch (id) {
    case FamilyId::cycle:    return icol::build_cycle_family(need(p.d, "d", name));
    case FamilyId::kbb:      return icol::build_kbb(need(p.delta, "delta", name));
    case FamilyId::k2q:      return icol::color_k2q(need(p.q, "q", name));
    case FamilyId::gdq:
        return icol::build_gdq(need(p.d, "d", name), need(p.q, "q", name));
    case FamilyId::gdd_even:
        return icol::build_gdd_even(need(p.d, "d", name), need(p.delta, "delta", name));
    case FamilyId::gdd_3:    return icol::build_gdd_3(need(p.delta, "delta", name));
    case FamilyId::gdd_odd:
        return icol::build_gdd_odd(need(p.d, "d", name), need(p.delta, "delta", name));
    }
    throw CliError{64, "unknown family"};
}

std::string opt_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "-";
}

// One line per instance, fixed keys. The gap compares the construction's
// color count against the bound that applies to its family: the general
// diameter bound for the complete-graph-based families, the bipartite one
// for the rest.
std::string instance_record(const icol::FamilyInstance& inst, const FamilyParams& p) {
    icol::BoundsReport b = icol::bounds(inst.graph);
    const bool general_family =
        inst.family == icol::FamilyId::gdq || inst.family == icol::FamilyId::k2q;
    const int reference =
        general_family ? b.general_diameter_bound : *b.bipartite_diameter_bound;
    const int t = inst.expected_colors;
    std::ostringstream out;
    out << "family=" << icol::family_name(inst.family) << " d=" << opt_str(p.d)
        << " q=" << opt_str(p.q) << " delta=" << opt_str(p.delta) << " t=" << t
        << " bound_general=" << b.general_diameter_bound << " bound_bipartite="
        << (b.bipartite_diameter_bound ? std::to_string(*b.bipartite_diameter_bound)
                                       : "-")
        << " gap=" << reference - t << " valid=1";
    return out.str();
}

std::string instance_text(const icol::FamilyInstance& inst) {
    std::ostringstream out;
    out << "family " << icol::family_name(inst.family) << ": "
        << inst.graph.vertex_count() << " vertices, " << inst.graph.edge_count()
        << " edges, diameter " << inst.expected_diameter << ", max degree "
        << inst.expected_max_degree << ", interval coloring with "
        << inst.expected_colors << " colors";
    return out.str();
}

int run_verify(const std::string& graph_path, const std::string& coloring_path,
               bool records) {
    icol::Graph g = load_graph_or_die(graph_path);
    icol::EdgeColoring c = load_coloring_or_die(coloring_path);
    icol::ValidationReport rep;
    try {
        rep = icol::validate_interval(g, c);
    } catch (const std::invalid_argument& ex) {
        throw CliError{3, std::string("cannot validate: ") + ex.what()};
    }
    if (records) {
        std::cout << "valid=" << (rep.valid ? 1 : 0) << " t=" << rep.t
                  << " violations=" << rep.violations.size() << "\n";
    } else if (rep.valid) {
        std::cout << "valid interval coloring: t = " << rep.t << "\n";
    } else {
        std::cout << "invalid coloring: " << rep.violations.size() << " violation"
                  << (rep.violations.size() == 1 ? "" : "s") << "\n";
        for (const auto& v : rep.violations)
            std::cout << "  " << v.describe() << "\n";
    }
    return rep.valid ? 0 : 1;
}

int run_bounds(const std::string& graph_path, bool records) {
    icol::Graph g = load_graph_or_die(graph_path);
    icol::GraphStats st = icol::stats(g);
    if (!st.connected) {
        std::cerr << "refused: the diameter bounds require a connected graph and this "
                     "graph is disconnected\n";
        return 1;
    }
    icol::BoundsReport b = icol::bounds(g);
    auto opt = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("-");
    };
    if (records) {
        std::cout << "connected=1 bipartite=" << (b.bipartite ? 1 : 0)
                  << " triangle_free=" << (b.triangle_free ? 1 : 0)
                  << " max_degree=" << st.max_degree << " diameter=" << *st.diameter
                  << " bound_general=" << b.general_diameter_bound
                  << " bound_bipartite=" << opt(b.bipartite_diameter_bound)
                  << " bound_triangle_free=" << opt(b.triangle_free_bound)
                  << " bound_vertex=" << opt(b.general_vertex_bound) << "\n";
        return 0;
    }
    std::cout << "max degree " << st.max_degree << ", diameter " << *st.diameter
              << (b.bipartite ? ", bipartite" : "")
              << (b.triangle_free ? ", triangle-free" : "") << "\n";
    std::cout << "general diameter bound:   " << b.general_diameter_bound << "\n";
    if (b.bipartite_diameter_bound)
        std::cout << "bipartite diameter bound: " << *b.bipartite_diameter_bound << "\n";
    if (b.triangle_free_bound)
        std::cout << "triangle-free bound:      " << *b.triangle_free_bound << "\n";
    if (b.general_vertex_bound)
        std::cout << "vertex-count bound:       " << *b.general_vertex_bound << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval edge coloring toolkit"};
    app.require_subcommand(1);

    std::string family_str, out_path, out_graph, out_coloring;
    std::string graph_path, coloring_path, certificate_path;
    std::string format = "text";
    std::string d_range, q_range, delta_range;
    FamilyParams params;
    int basic_n = 0, basic_m = 0;
    std::optional<int> opt_t;
    bool want_w = false;
    long long max_nodes = icol::SolveBudget{}.max_nodes;
    std::optional<double> max_seconds;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text or records")
            ->check(CLI::IsMember({"text", "records"}));
    };
    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--d", params.d, "diameter-style family parameter d");
        cmd->add_option("--q", params.q, "power-of-two exponent q");
        cmd->add_option("--delta", params.delta, "maximum degree parameter");
    };

    auto* gen = app.add_subcommand("gen", "write a graph file");
    gen->add_option("--family", family_str,
                    "cycle|kbb|k2q|gdq|gdd-even|gdd-3|gdd-odd or a basic graph: "
                    "path|cycle-n|complete|biclique")
        ->required();
    add_params(gen);
    gen->add_option("--n", basic_n, "vertex count for basic graphs / second part size");
    gen->add_option("--m", basic_m, "first part size for biclique");
    gen->add_option("-o,--out", out_path, "output graph file")->required();

    auto* color = app.add_subcommand("color", "write a family instance's graph and coloring");
    color->add_option("--family", family_str, "cycle|kbb|k2q|gdq|gdd-even|gdd-3|gdd-odd")
        ->required();
    add_params(color);
    color->add_option("--out-graph", out_graph, "output graph file")->required();
    color->add_option("--out-coloring", out_coloring, "output coloring file")->required();
    add_format(color);

    auto* verify = app.add_subcommand("verify", "check a coloring against the definition");
    verify->add_option("--graph", graph_path, "graph file")->required();
    verify->add_option("--coloring", coloring_path, "coloring file")->required();
    add_format(verify);

    auto* solve = app.add_subcommand("solve", "exact search for interval colorings");
    solve->add_option("--graph", graph_path, "graph file")->required();
    solve->add_option("--t", opt_t, "decide existence of an interval t-coloring");
    solve->add_flag("--w", want_w, "compute the maximum feasible t");
    solve->add_option("--max-nodes", max_nodes, "search node budget");
    solve->add_option("--max-seconds", max_seconds, "wall clock budget");
    solve->add_option("--certificate", certificate_path,
                      "write the found coloring to this file");
    add_format(solve);

    auto* bounds_cmd = app.add_subcommand("bounds", "print color-count upper bounds");
    bounds_cmd->add_option("--graph", graph_path, "graph file")->required();
    add_format(bounds_cmd);

    auto* table = app.add_subcommand("table", "sweep a parameter grid, one line per instance");
    table->add_option("--family", family_str, "family to sweep")->required();
    table->add_option("--d", d_range, "d range, N or A..B");
    table->add_option("--q", q_range, "q range, N or A..B");
    table->add_option("--delta", delta_range, "delta range, N or A..B");
    add_format(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }
    const bool records = format == "records";

    try {
        if (gen->parsed()) {
            icol::Graph g = [&]() -> icol::Graph {
                if (family_str == "path")
                    return icol::make_path(basic_n);
                if (family_str == "cycle-n")
                    return icol::make_cycle(basic_n);
                if (family_str == "complete")
                    return icol::make_complete(basic_n);
                if (family_str == "biclique")
                    return icol::make_complete_bipartite(basic_m, basic_n);
                auto id = icol::family_from_name(family_str);
                if (!id)
                    throw CliError{64, "unknown family '" + family_str + "'"};
                return build_family(*id, params).graph;
            }();
            icol::write_file(out_path, icol::write_graph(g));
            return 0;
        }
        if (color->parsed()) {
            auto id = icol::family_from_name(family_str);
            if (!id)
                throw CliError{64, "unknown family '" + family_str + "'"};
            icol::FamilyInstance inst = build_family(*id, params);
            icol::write_file(out_graph, icol::write_graph(inst.graph));
            icol::write_file(out_coloring, icol::write_coloring(inst.coloring));
            std::cout << (records ? instance_record(inst, params) : instance_text(inst))
                      << "\n";
            return 0;
        }
        if (verify->parsed())
            return run_verify(graph_path, coloring_path, records);
        if (bounds_cmd->parsed())
            return run_bounds(graph_path, records);

        if (solve->parsed()) {
            if (want_w == opt_t.has_value())
                throw CliError{64, "solve needs exactly one of --t or --w"};
            icol::Graph g = load_graph_or_die(graph_path);
            icol::SolveBudget budget{max_nodes, max_seconds};
            icol::SolveStatus status;
            std::optional<int> result_t;
            long long nodes = 0;
            std::optional<icol::EdgeColoring> cert;
            if (opt_t) {
                icol::SolveOutcome out = icol::find_interval_coloring(g, *opt_t, budget);
                status = out.status;
                nodes = out.nodes_explored;
                cert = out.certificate;
                if (status == icol::SolveStatus::feasible)
                    result_t = *opt_t;
            } else {
                icol::WOutcome out = icol::compute_w_exact(g, budget);
                status = out.status;
                nodes = out.nodes_explored;
                result_t = out.w;
                if (out.w && !certificate_path.empty()) {
                    icol::SolveOutcome re = icol::find_interval_coloring(g, *out.w, budget);
                    cert = re.certificate;
                }
            }
            const char* status_str = status == icol::SolveStatus::feasible ? "feasible"
                                     : status == icol::SolveStatus::infeasible
                                         ? "infeasible"
                                         : "unknown";
            if (records) {
                std::cout << "status=" << status_str << " "
                          << (want_w ? "w=" : "t=")
                          << (result_t ? std::to_string(*result_t) : "-")
                          << " nodes=" << nodes << "\n";
            } else if (want_w) {
                if (status == icol::SolveStatus::feasible)
                    std::cout << "w = " << *result_t << "\n";
                else if (status == icol::SolveStatus::infeasible)
                    std::cout << "no interval coloring exists for any t\n";
                else
                    std::cout << "unknown: budget exhausted"
                              << (result_t ? " (feasible for t = " +
                                                 std::to_string(*result_t) + ")"
                                           : "")
                              << "\n";
            } else {
                std::cout << status_str << "\n";
            }
            if (!certificate_path.empty() && cert)
                icol::write_file(certificate_path, icol::write_coloring(*cert));
            return status == icol::SolveStatus::feasible     ? 0
                   : status == icol::SolveStatus::infeasible ? 1
                                                             : 2;
        }

        if (table->parsed()) {
            auto id = icol::family_from_name(family_str);
            if (!id)
                throw CliError{64, "unknown family '" + family_str + "'"};

            // each family sweeps exactly its own parameters
            using icol::FamilyId;
            const bool uses_d = *id == FamilyId::cycle || *id == FamilyId::gdq ||
                                *id == FamilyId::gdd_even || *id == FamilyId::gdd_odd;
            const bool uses_q = *id == FamilyId::k2q || *id == FamilyId::gdq;
            const bool uses_delta = *id == FamilyId::kbb || *id == FamilyId::gdd_even ||
                                    *id == FamilyId::gdd_3 || *id == FamilyId::gdd_odd;
            if ((!uses_d && !d_range.empty()) || (!uses_q && !q_range.empty()) ||
                (!uses_delta && !delta_range.empty()))
                throw CliError{64, "family " + family_str +
                                       " does not take that sweep parameter"};
            if ((uses_d && d_range.empty()) || (uses_q && q_range.empty()) ||
                (uses_delta && delta_range.empty()))
                throw CliError{64, "family " + family_str + " needs" +
                                       (uses_d ? " --d" : "") + (uses_q ? " --q" : "") +
                                       (uses_delta ? " --delta" : "")};

            std::vector<int> ds = d_range.empty() ? std::vector<int>{} : parse_range(d_range);
            std::vector<int> qs = q_range.empty() ? std::vector<int>{} : parse_range(q_range);
            std::vector<int> deltas =
                delta_range.empty() ? std::vector<int>{} : parse_range(delta_range);

            // grid axes per family; a missing axis is a single "unset" slot
            auto axis = [](std::vector<int> v) {
                return v.empty() ? std::vector<std::optional<int>>{std::nullopt}
                                 : [&] {
                                       std::vector<std::optional<int>> out;
                                       for (int x : v)
                                           out.emplace_back(x);
                                       return out;
                                   }();
            };
            if (!records)
                std::cout << "family d q delta t bound gap\n";
            for (const auto& dv : axis(ds))
                for (const auto& qv : axis(qs))
                    for (const auto& deltav : axis(deltas)) {
                        FamilyParams p{dv, qv, deltav};
                        std::optional<icol::FamilyInstance> inst;
                        try {
                            inst = build_family(*id, p);
                        } catch (const std::invalid_argument& ex) {
                            // out-of-domain grid point (wrong parity etc.)
                            std::cerr << "skipping d=" << opt_str(p.d)
                                      << " q=" << opt_str(p.q)
                                      << " delta=" << opt_str(p.delta) << ": "
                                      << ex.what() << "\n";
                            continue;
                        }
                        if (records) {
                            std::cout << instance_record(*inst, p) << "\n";
                        } else {
                            icol::BoundsReport b = icol::bounds(inst->graph);
                            const bool general = inst->family == icol::FamilyId::gdq ||
                                                 inst->family == icol::FamilyId::k2q;
                            int bound = general ? b.general_diameter_bound
                                                : *b.bipartite_diameter_bound;
                            std::cout << icol::family_name(inst->family) << " "
                                      << opt_str(p.d) << " " << opt_str(p.q) << " "
                                      << opt_str(p.delta) << " "
                                      << inst->expected_colors << " " << bound << " "
                                      << bound - inst->expected_colors << "\n";
                        }
                    }
            return 0;
        }
    } catch (const CliError& ex) {
        std::cerr << "error: " << ex.message << "\n";
        return ex.code;
    } catch (const icol::ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const icol::CacheError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 64;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
    return 64;
}
