#include "strongrecolor/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace strongrecolor {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back(json::array({u, v}));
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("each edge must be a [u, v] pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Graph(n, std::move(edges), std::move(labels));
}

json colouring_to_json(const Colouring& c) { return json(c.colours); }

Colouring colouring_from_json(const json& j, int k) {
    if (!j.is_array()) throw std::invalid_argument("colouring JSON must be an array");
    Colouring c;
    c.k = k;
    for (const auto& x : j) {
        const int value = x.get<int>();
        if (value < 0 || value >= k)
            throw std::invalid_argument("colour entry outside 0..k-1");
        c.colours.push_back(value);
    }
    return c;
}

json schedule_to_json(const Schedule& s) {
    json j;
    j["start"] = colouring_to_json(s.start);
    j["steps"] = json::array();
    for (const auto& step : s.steps)
        j["steps"].push_back(
            {{"vertex", step.vertex}, {"from", step.from_colour}, {"to", step.to_colour}});
    return j;
}

Schedule schedule_from_json(const json& j, int k) {
    if (!j.is_object() || !j.contains("start") || !j.contains("steps"))
        throw std::invalid_argument("schedule JSON needs \"start\" and \"steps\"");
    Schedule s;
    s.start = colouring_from_json(j.at("start"), k);
    for (const auto& step : j.at("steps"))
        s.steps.push_back(RecolourStep{step.at("vertex").get<int>(),
                                       step.at("from").get<int>(),
                                       step.at("to").get<int>()});
    return s;
}

json certificate_to_json(const Certificate& c) {
    json j;
    if (const auto* swap = std::get_if<BipartiteSwapCert>(&c)) {
        j["kind"] = "BIPARTITE_SWAP";
        j["part_a"] = swap->bipartition.part_a;
        j["part_b"] = swap->bipartition.part_b;
        j["colour"] = swap->colour;
    } else if (const auto* weight = std::get_if<CycleWeightCert>(&c)) {
        j["kind"] = "CYCLE_WEIGHT";
        j["cycle"] = weight->cycle;
        j["weight_alpha"] = weight->weight_alpha;
        j["weight_beta"] = weight->weight_beta;
    } else if (const auto* frozen = std::get_if<FrozenVertexCert>(&c)) {
        j["kind"] = "FROZEN_VERTEX";
        j["vertex"] = frozen->vertex;
    } else {
        const auto& ex = std::get<ExhaustiveCert>(c);
        j["kind"] = "EXHAUSTIVE";
        j["component_alpha"] = ex.component_alpha;
        j["component_beta"] = ex.component_beta;
    }
    return j;
}

Certificate certificate_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "BIPARTITE_SWAP") {
        BipartiteSwapCert c;
        c.bipartition.part_a = j.at("part_a").get<std::vector<int>>();
        c.bipartition.part_b = j.at("part_b").get<std::vector<int>>();
        c.colour = j.at("colour").get<int>();
        return c;
    }
    if (kind == "CYCLE_WEIGHT") {
        CycleWeightCert c;
        c.cycle = j.at("cycle").get<std::vector<int>>();
        c.weight_alpha = j.at("weight_alpha").get<long long>();
        c.weight_beta = j.at("weight_beta").get<long long>();
        return c;
    }
    if (kind == "FROZEN_VERTEX") return FrozenVertexCert{j.at("vertex").get<int>()};
    if (kind == "EXHAUSTIVE")
        return ExhaustiveCert{j.at("component_alpha").get<int>(),
                              j.at("component_beta").get<int>()};
    throw std::invalid_argument("unknown certificate kind '" + kind + "'");
}

std::string reason_name(Reason r) {
    switch (r) {
        case Reason::PathTheorem: return "PATH_THM";
        case Reason::CycleTheorem: return "CYCLE_THM";
        case Reason::TreeTheorem: return "TREE_THM";
        case Reason::BipartiteObstruction: return "BIPARTITE_OBSTRUCTION";
        case Reason::TwoColour: return "TWO_COLOUR";
        case Reason::BruteForce: return "BRUTE_FORCE";
    }
    return "UNKNOWN";
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["connected"] = v.connected;
    j["reason"] = reason_name(v.reason);
    if (v.witness) j["witness"] = certificate_to_json(*v.witness);
    if (v.component_count) j["component_count"] = *v.component_count;
    return j;
}

json component_summary_to_json(const std::vector<ComponentStats>& summary) {
    json j = json::array();
    for (const auto& c : summary)
        j.push_back({{"size", c.size},
                     {"min_degree", c.min_degree},
                     {"max_degree", c.max_degree},
                     {"is_cycle", c.is_cycle}});
    return j;
}

std::string to_dot(const ReconfigGraph& rg) {
    std::ostringstream out;
    out << "graph states {\n";
    for (std::size_t i = 0; i < rg.states.size(); ++i)
        out << "  " << i << " [label=\"" << format_colouring(rg.states[i]) << "\"];\n";
    for (std::size_t i = 0; i < rg.states.size(); ++i)
        for (int j : rg.adjacency[i])
            if (static_cast<std::size_t>(j) > i)
                out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_csv(const ReconfigGraph& rg) {
    std::ostringstream out;
    for (std::size_t i = 0; i < rg.states.size(); ++i)
        for (int j : rg.adjacency[i])
            if (static_cast<std::size_t>(j) > i)
                out << format_colouring(rg.states[i]) << ','
                    << format_colouring(rg.states[static_cast<std::size_t>(j)]) << '\n';
    return out.str();
}

} // namespace strongrecolor
