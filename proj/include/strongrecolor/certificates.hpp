#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "strongrecolor/colouring.hpp"
#include "strongrecolor/graph.hpp"

namespace strongrecolor {

// Machine-checkable reasons why two strong colourings cannot reach each other.
// Every payload carries enough data to re-derive the obstruction from scratch.

// Some colour sits on different sides of a spanning complete bipartite split
// in the two colourings; no single recolouring can move a colour across.
struct BipartiteSwapCert {
    Bipartition bipartition;
    int colour;
};

// k = 3 only: the signed weight of an oriented cycle is preserved by every
// single recolouring, and the two colourings disagree on it.
struct CycleWeightCert {
    std::vector<int> cycle; // oriented vertex sequence, consecutive + wrap edges
    long long weight_alpha;
    long long weight_beta;
};

// A vertex no strong colouring can recolour, on which the two colourings differ.
struct FrozenVertexCert {
    int vertex;
};

// Fallback: component labels from a full build of the state space.
struct ExhaustiveCert {
    int component_alpha;
    int component_beta;
};

using Certificate =
    std::variant<BipartiteSwapCert, CycleWeightCert, FrozenVertexCert, ExhaustiveCert>;

// Signed weight of the oriented cycle (given as a vertex sequence) under a
// 3-colouring: an edge u->v counts +1 when the colour advances cyclically
// (0->1->2->0) and -1 when it recedes. Throws on k != 3, on a sequence that is
// not a cycle of g, and on a monochromatic edge.
long long cycle_weight(const Graph& g, const std::vector<int>& cycle, const Colouring& c);

// Searches the fundamental cycles of a spanning tree for one whose weight
// separates a and b (k = 3, both strong). For cycle graphs the base cycle is
// itself the single fundamental cycle.
std::optional<Certificate> weight_certificate(const Graph& g, const Colouring& a,
                                              const Colouring& b);

// Fires when g has a spanning complete bipartite subgraph and some colour lies
// in different parts under a and b; returns the smallest such colour.
std::optional<Certificate> swap_certificate(const Graph& g, int k, const Colouring& a,
                                            const Colouring& b);

// Vertices that are recolourable in no strong k-colouring of g, ascending.
std::vector<int> globally_frozen_vertices(const Graph& g, int k,
                                          std::uint64_t cap = kDefaultCap);

// Tries the cheap obstructions in order (swap, weight, frozen vertex) and
// falls back to a full build. Returns nullopt exactly when a and b share a
// component. Both colourings must be strong.
std::optional<Certificate> certify_separation(const Graph& g, int k, const Colouring& a,
                                              const Colouring& b,
                                              std::uint64_t cap = kDefaultCap);

// Recomputes the claimed obstruction from scratch; false on any mismatch,
// never throws.
bool verify_certificate(const Graph& g, int k, const Colouring& a, const Colouring& b,
                        const Certificate& cert);

} // namespace strongrecolor
