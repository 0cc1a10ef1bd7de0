// Command-line front end: graph generation, state-space statistics,
// recolouring plans, connectivity classification, and exports.
//
// Exit codes: 0 connected / path found, 1 disconnected / no path (with a
// certificate emitted), 2 input or cap error, 3 verification mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strongrecolor/certificates.hpp"
#include "strongrecolor/classifier.hpp"
#include "strongrecolor/errors.hpp"
#include "strongrecolor/json_io.hpp"

using namespace strongrecolor;

namespace {

constexpr int kExitConnected = 0;
constexpr int kExitDisconnected = 1;
constexpr int kExitError = 2;
constexpr int kExitMismatch = 3;

Graph graph_from_family(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::istringstream in(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(in, tok, ','))
            args.push_back(std::stoi(tok));
    }
    if (name == "path" && args.size() == 1) return make_path(args[0]);
    if (name == "cycle" && args.size() == 1) return make_cycle(args[0]);
    if (name == "kmn" && args.size() == 2) return make_complete_bipartite(args[0], args[1]);
    if (name == "star" && args.size() == 1) return make_star(args[0]);
    if (name == "psi" && args.size() == 1) return make_psi(args[0]);
    if (name == "phi" && args.size() == 2) return make_phi(args[0], args[1]);
    if (name == "i" && args.empty()) return make_i();
    throw std::invalid_argument(
        "bad family spec '" + spec +
        "' (expected path:n, cycle:n, kmn:m,q, star:m, psi:n, phi:p,q, or i)");
}

Graph load_graph(const std::string& file, const std::string& family) {
    if (!family.empty()) return graph_from_family(family);
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open graph file '" + file + "'");
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
}

Mode parse_mode(const std::string& text) {
    if (text == "strong") return Mode::Strong;
    if (text == "proper") return Mode::Proper;
    throw std::invalid_argument("mode must be 'strong' or 'proper'");
}

std::uint64_t env_default_cap() {
    const char* raw = std::getenv("STRONGRECOLOR_CAP");
    if (!raw) return kDefaultCap;
    const long long value = std::stoll(raw);
    if (value < 1) throw std::invalid_argument("STRONGRECOLOR_CAP must be >= 1");
    return static_cast<std::uint64_t>(value);
}

void emit(const std::string& out, const std::string& bytes) {
    if (out.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot open output file '" + out + "'");
    f << bytes;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_stats(const Graph& g, int k, Mode mode, std::uint64_t cap,
              const std::string& out) {
    const auto rg = build(g, k, mode, cap);
    std::ostringstream report;
    report << "mode: " << (mode == Mode::Strong ? "strong" : "proper") << "\n"
           << "k: " << k << "\n"
           << "states: " << rg.states.size() << "\n"
           << "state-space edges: " << rg.edge_count << "\n"
           << "components: " << rg.component_count << "\n";
    const auto summary = component_summary(rg);
    for (std::size_t i = 0; i < summary.size(); ++i) {
        const auto& s = summary[i];
        report << "component " << i << ": size " << s.size << ", degree "
               << s.min_degree << ".." << s.max_degree
               << (s.is_cycle ? ", cycle" : "") << "\n";
    }
    report << "connected: " << (is_connected(rg) ? "yes" : "no") << "\n";
    emit(out, report.str());
    return is_connected(rg) ? kExitConnected : kExitDisconnected;
}

int cmd_plan(const Graph& g, int k, const std::string& from_text,
             const std::string& to_text, std::uint64_t cap,
             const std::string& out) {
    const Colouring from = parse_colouring(from_text, k);
    const Colouring to = parse_colouring(to_text, k);
    for (const auto* c : {&from, &to})
        if (!is_strong(g, *c))
            throw std::invalid_argument("plan endpoints must be strong colourings");

    const auto schedule = find_path(g, k, from, to, Mode::Strong, cap);
    if (schedule) {
        validate_schedule(g, k, *schedule, Mode::Strong);
        emit(out, dump(schedule_to_json(*schedule)));
        return kExitConnected;
    }
    const auto cert = certify_separation(g, k, from, to, cap);
    if (!cert) throw std::runtime_error("no path found yet no certificate either");
    if (!verify_certificate(g, k, from, to, *cert))
        throw std::runtime_error("separation certificate failed verification");
    emit(out, dump(certificate_to_json(*cert)));
    return kExitDisconnected;
}

int cmd_classify(const Graph& g, int k, bool verify, std::uint64_t cap,
                 const std::string& out) {
    const Verdict verdict = classify(g, k, cap);
    emit(out, dump(verdict_to_json(verdict)));
    if (verify) {
        const bool brute = is_connected(build(g, k, Mode::Strong, cap));
        if (brute != verdict.connected) {
            std::cerr << "verification mismatch: classifier says "
                      << (verdict.connected ? "connected" : "disconnected")
                      << ", brute force says "
                      << (brute ? "connected" : "disconnected") << "\n";
            return kExitMismatch;
        }
    }
    return verdict.connected ? kExitConnected : kExitDisconnected;
}

int cmd_export(const Graph& g, int k, Mode mode, const std::string& format,
               std::uint64_t cap, const std::string& out) {
    const auto rg = build(g, k, mode, cap);
    if (format == "dot") {
        emit(out, to_dot(rg));
    } else if (format == "csv") {
        emit(out, to_csv(rg));
    } else if (format == "json") {
        nlohmann::json j;
        j["mode"] = mode == Mode::Strong ? "strong" : "proper";
        j["k"] = k;
        j["states"] = nlohmann::json::array();
        for (const auto& s : rg.states) j["states"].push_back(colouring_to_json(s));
        j["edges"] = nlohmann::json::array();
        for (std::size_t i = 0; i < rg.adjacency.size(); ++i)
            for (int v : rg.adjacency[i])
                if (static_cast<std::size_t>(v) > i)
                    j["edges"].push_back({i, v});
        j["component"] = rg.component;
        emit(out, dump(j));
    } else {
        throw std::invalid_argument("format must be json, dot, or csv");
    }
    return kExitConnected;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong colouring reconfiguration toolkit"};
    app.require_subcommand(1);

    std::string graph_file, family, mode_text = "strong", from_text, to_text;
    std::string out, format = "json";
    int k = 0;
    std::int64_t cap_flag = -1;
    bool verify = false;

    // One of --graph/--family is required; enforced after parse so the error
    // lands on our exit-code contract instead of CLI11's.
    auto add_graph_source = [&](CLI::App* cmd) {
        auto* gopt = cmd->add_option("--graph", graph_file, "graph JSON file");
        auto* fopt = cmd->add_option("--family", family,
                                     "family spec: path:n, cycle:n, kmn:m,q, "
                                     "star:m, psi:n, phi:p,q, i");
        gopt->excludes(fopt);
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--k", k, "number of colours")->required();
        cmd->add_option("--cap", cap_flag, "state cap override");
        cmd->add_option("--out", out, "output file (default stdout)");
    };

    auto* gen = app.add_subcommand("gen", "write a named family as graph JSON");
    gen->add_option("--family", family, "family spec")->required();
    gen->add_option("--out", out, "output file (default stdout)");

    auto* stats = app.add_subcommand("stats", "build the state space and report it");
    add_graph_source(stats);
    add_common(stats);
    stats->add_option("--mode", mode_text, "strong|proper (default strong)");

    auto* plan = app.add_subcommand("plan", "shortest recolouring schedule");
    add_graph_source(plan);
    add_common(plan);
    plan->add_option("--from", from_text, "start colouring")->required();
    plan->add_option("--to", to_text, "target colouring")->required();

    auto* classify_cmd = app.add_subcommand("classify", "connectivity verdict");
    add_graph_source(classify_cmd);
    add_common(classify_cmd);
    classify_cmd->add_flag("--verify", verify, "cross-check against brute force");

    auto* export_cmd = app.add_subcommand("export", "dump the state space");
    add_graph_source(export_cmd);
    add_common(export_cmd);
    export_cmd->add_option("--mode", mode_text, "strong|proper (default strong)");
    export_cmd->add_option("--format", format, "json|dot|csv (default json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        const std::uint64_t cap =
            cap_flag >= 1 ? static_cast<std::uint64_t>(cap_flag) : env_default_cap();
        if (cap_flag != -1 && cap_flag < 1)
            throw std::invalid_argument("--cap must be >= 1");

        if (gen->parsed()) {
            emit(out, dump(graph_to_json(graph_from_family(family))));
            return kExitConnected;
        }

        if (graph_file.empty() && family.empty())
            throw std::invalid_argument("one of --graph or --family is required");
        const Graph g = load_graph(graph_file, family);
        const Mode mode = parse_mode(mode_text);

        if (stats->parsed()) return cmd_stats(g, k, mode, cap, out);
        if (plan->parsed()) return cmd_plan(g, k, from_text, to_text, cap, out);
        if (classify_cmd->parsed()) return cmd_classify(g, k, verify, cap, out);
        if (export_cmd->parsed()) return cmd_export(g, k, mode, format, cap, out);
        throw std::logic_error("unreachable: no subcommand");
    } catch (const CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what()
                  << " (raise with --cap or STRONGRECOLOR_CAP)\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
