#pragma once

#include <string>

#include <json.hpp>

#include "strongrecolor/certificates.hpp"
#include "strongrecolor/classifier.hpp"
#include "strongrecolor/reconfig.hpp"

namespace strongrecolor {

// Graph files: {"n": int, "edges": [[u,v], ...], "labels": [...]?} with edges
// written u < v in sorted order.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Colourings are plain integer arrays.
nlohmann::json colouring_to_json(const Colouring& c);
Colouring colouring_from_json(const nlohmann::json& j, int k);

// {"start": [...], "steps": [{"vertex": v, "from": c1, "to": c2}, ...]}
nlohmann::json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const nlohmann::json& j, int k);

// Tagged by "kind": BIPARTITE_SWAP | CYCLE_WEIGHT | FROZEN_VERTEX | EXHAUSTIVE.
nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json component_summary_to_json(const std::vector<ComponentStats>& summary);

std::string reason_name(Reason r);

// Graphviz dump of a built state space; nodes carry letter labels ("abcda").
std::string to_dot(const ReconfigGraph& rg);

// Edge list, one "label_u,label_v" row per state-space edge, sorted by ids.
std::string to_csv(const ReconfigGraph& rg);

} // namespace strongrecolor
