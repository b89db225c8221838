#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lcol/brooks.hpp"
#include "lcol/connectivity.hpp"
#include "lcol/gadgets.hpp"
#include "lcol/hypergraph.hpp"
#include "lcol/io.hpp"
#include "lcol/list_fpt.hpp"
#include "lcol/mlec.hpp"
#include "lcol/morass.hpp"
#include "lcol/oracle.hpp"
#include "lcol/outcome.hpp"

namespace lcol {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_graph(std::ostream& out, const Graph& g, GraphFormat f) {
    if (f == GraphFormat::Dimacs)
        write_dimacs(out, g);
    else
        write_edge_list(out, g);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return in;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << j.dump(2) << '\n';
}

int int_param(const std::vector<std::string>& params, std::size_t i, const std::string& what) {
    if (i >= params.size()) throw UsageError("missing parameter: " + what);
    try {
        std::size_t used = 0;
        int v = std::stoi(params[i], &used);
        if (used != params[i].size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::logic_error&) {
        throw UsageError("parameter " + what + " must be an integer, got '" + params[i] + "'");
    }
}

// Runs the chosen colouring routine; `extra` receives algorithm-specific fields.
ColourOutcome colour_with(const Graph& g, int k, std::string algorithm, nlohmann::json& extra) {
    if (algorithm == "auto") {
        ClassReport r = classify(g, k);
        if (r.c1_hat)
            algorithm = "mlec";
        else if (k == 3 && r.c1)
            algorithm = "morass";
        else
            algorithm = "fpt";
        extra["dispatch"] = algorithm;
    }
    if (algorithm == "brooks") return brooks_colour(g, k);
    if (algorithm == "mlec") return colour_kconn_mleck(g, k);
    if (algorithm == "morass") {
        if (k != 3) throw UsageError("--algorithm morass needs --k 3");
        return colour3_mlec3(g);
    }
    if (algorithm == "fpt") {
        FptOutcome f = fpt_colour(g, k);
        extra["branches"] = f.branches;
        extra["p"] = f.p;
        return f.outcome;
    }
    // brute
    if (auto c = brute_k_colourable(g, k)) return ColourOutcome::success(*c);
    return ColourOutcome::obstruction(OutcomeKind::Infeasible, {}, "exhaustive search found no colouring");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph colouring under local connectivity bounds", "lcol"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_name = "edges";
    app.add_option("--format", format_name, "Input and output graph format")
        ->check(CLI::IsMember({"edges", "dimacs"}));

    std::string graph_path, second_path;
    int k = 3;

    auto* analyze = app.add_subcommand("analyze", "Report local connectivity and class membership as JSON");
    analyze->add_option("graph", graph_path)->required();
    analyze->add_option("--k", k)->required();

    std::string algorithm = "auto";
    bool as_json = false;
    auto* color = app.add_subcommand("color", "Colour a graph or report an obstruction");
    color->add_option("graph", graph_path)->required();
    color->add_option("--k", k)->required();
    color->add_option("--algorithm", algorithm)
        ->check(CLI::IsMember({"auto", "brooks", "mlec", "morass", "fpt", "brute"}));
    color->add_flag("--json", as_json, "Print the outcome as JSON on success too");

    std::optional<int> verify_k;
    auto* verify = app.add_subcommand("verify", "Check that a colouring file is proper");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("colouring", second_path)->required();
    verify->add_option("--k", verify_k, "Also require colours in 1..k");

    std::string family;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    std::string cert_out;
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("family", family)
        ->required()
        ->check(CLI::IsMember({"odd-wheel", "morass", "grid", "hub", "degree-gadget", "rigid-hypergraph"}));
    gen->add_option("params", params, "Family parameters");
    gen->add_option("--seed", seed);
    gen->add_option("--certificate", cert_out, "morass: write the join tree JSON here");

    std::string which, map_out;
    int boost_j = 1;
    auto* reduce = app.add_subcommand("reduce", "Apply a hardness reduction");
    reduce->add_option("which", which)
        ->required()
        ->check(CLI::IsMember({"mlc3", "mleck", "hypergraph", "min-kconn", "boost"}));
    reduce->add_option("input", graph_path)->required();
    reduce->add_option("--k", k, "Colour count for mleck, hypergraph and min-kconn");
    reduce->add_option("--j", boost_j, "Connectivity for boost");
    reduce->add_option("--map", map_out, "Write the forward map and notes as JSON");

    auto* mverify = app.add_subcommand("morass-verify", "Check a morass certificate against a graph");
    mverify->add_option("graph", graph_path)->required();
    mverify->add_option("certificate", second_path)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const GraphFormat format = parse_format_name(format_name);
        auto load = [&](const std::string& path) {
            open_input(path);
            return read_graph_file(path, format);
        };

        if (analyze->parsed()) {
            Graph g = load(graph_path);
            out << to_json(classify(g, k), g).dump(2) << '\n';
            return 0;
        }

        if (color->parsed()) {
            Graph g = load(graph_path);
            nlohmann::json extra = nlohmann::json::object();
            ColourOutcome r = colour_with(g, k, algorithm, extra);
            if (r.coloured() && !verify_colouring(g, r.colouring)) throw InvariantError("returned colouring failed to verify");
            if (r.coloured() && !as_json) {
                write_colouring(out, g, r.colouring);
                return 0;
            }
            nlohmann::json j = to_json(r, g);
            j["algorithm"] = algorithm;
            for (auto& [key, value] : extra.items()) j[key] = value;
            out << j.dump(2) << '\n';
            return r.coloured() ? 0 : 1;
        }

        if (verify->parsed()) {
            Graph g = load(graph_path);
            auto in = open_input(second_path);
            Colouring c = read_colouring(in, g);
            if (verify_k) c.k = *verify_k;
            VerifyResult v = verify_colouring(g, c);
            if (v) {
                out << "ok: proper colouring with " << c.distinct_colours() << " colours\n";
                return 0;
            }
            out << "invalid: " << v.message << '\n';
            return 1;
        }

        if (gen->parsed()) {
            if (family == "rigid-hypergraph") {
                write_hypergraph(out, rigid_hypergraph(int_param(params, 0, "k")));
                return 0;
            }
            Graph g;
            if (family == "odd-wheel") {
                g = odd_wheel(int_param(params, 0, "rim length"));
            } else if (family == "grid") {
                g = grid_family(int_param(params, 0, "x"));
            } else if (family == "hub") {
                g = hub_gadget(int_param(params, 0, "l")).graph;
            } else if (family == "degree-gadget") {
                g = degree_gadget(int_param(params, 0, "l"), int_param(params, 1, "k")).graph;
            } else {
                std::vector<int> rims;
                for (std::size_t i = 0; i < params.size(); ++i) rims.push_back(int_param(params, i, "rim length"));
                if (rims.empty()) throw UsageError("morass needs at least one rim length");
                GeneratedMorass gm = random_morass(static_cast<int>(rims.size()) - 1, rims, seed);
                g = gm.graph;
                if (!cert_out.empty()) write_json_file(cert_out, to_json(gm.certificate, g));
            }
            write_graph(out, g, format);
            return 0;
        }

        if (reduce->parsed()) {
            if (which == "min-kconn") {
                auto in = open_input(graph_path);
                Hypergraph h = read_hypergraph(in);
                write_graph(out, hypergraph_to_min_kconn(h, k), format);
                return 0;
            }
            Graph g = load(graph_path);
            if (which == "hypergraph") {
                write_hypergraph(out, graph_to_hypergraph(g, k));
                return 0;
            }
            if (which == "boost") {
                write_graph(out, boost_connectivity(g, boost_j), format);
                return 0;
            }
            ReductionOutput r = which == "mlc3" ? reduce_to_mlc3(g) : reduce_to_mleck(g, k);
            write_graph(out, r.graph, format);
            if (!map_out.empty()) write_json_file(map_out, to_json(r, g));
            return 0;
        }

        if (mverify->parsed()) {
            Graph g = load(graph_path);
            auto in = open_input(second_path);
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
            }
            // Accept either a bare join tree or a colouring outcome that carries one.
            if (j.is_object() && j.contains("certificate")) j = j["certificate"];
            if (j.is_null()) {
                out << "invalid: no certificate present\n";
                return 1;
            }
            MorassCertificate cert = certificate_from_json(j, g);
            if (verify_morass_certificate(g, cert)) {
                out << "ok: certificate builds the whole graph\n";
                return 0;
            }
            if (verify_morass_block(g, cert)) {
                out << "ok: certificate builds a block of the graph\n";
                return 0;
            }
            ReplayResult rr = replay_certificate(cert);
            out << "invalid: " << (rr.ok ? std::string("replayed graph does not match") : rr.error) << '\n';
            return 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return 2;
    } catch (const SizeLimitError& e) {
        err << "size limit: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace lcol
