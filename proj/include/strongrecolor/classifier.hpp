#pragma once

#include <cstdint>
#include <optional>

#include "strongrecolor/certificates.hpp"
#include "strongrecolor/graph.hpp"

namespace strongrecolor {

enum class Reason {
    PathTheorem,          // closed form for path graphs
    CycleTheorem,         // closed form for cycle graphs
    TreeTheorem,          // subtree criterion for trees at k = 3
    BipartiteObstruction, // spanning complete bipartite subgraph present
    TwoColour,            // k = 2 colour-class swap argument
    BruteForce,           // full state-space build
};

struct Verdict {
    bool connected;
    Reason reason;
    std::optional<Certificate> witness; // present for some disconnected verdicts
    std::optional<int> component_count; // present for brute-force verdicts
};

// Closed-form answers; n is the number of vertices, not a graph.
Verdict classify_path(int n, int k);  // n >= 2, k >= 2
Verdict classify_cycle(int n, int k); // n >= 3, k >= 3

// k = 3 criterion: connected iff the tree contains a 5-vertex path or the
// I-shaped tree as a subgraph. Throws if t is not a tree with n >= 4.
Verdict classify_tree(const Graph& t);

// Dispatcher: recognizes path/cycle shapes and trees at k = 3, then the
// spanning-complete-bipartite obstruction, then the two-colour rule, and
// finally falls back to building the state space.
Verdict classify(const Graph& g, int k, std::uint64_t cap = kDefaultCap);

} // namespace strongrecolor
