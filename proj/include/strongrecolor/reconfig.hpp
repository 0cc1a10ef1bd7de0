#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strongrecolor/colouring.hpp"
#include "strongrecolor/enumerate.hpp"
#include "strongrecolor/graph.hpp"

namespace strongrecolor {

struct RecolourStep {
    int vertex;
    int from_colour;
    int to_colour;

    friend bool operator==(const RecolourStep&, const RecolourStep&) = default;
};

struct Schedule {
    Colouring start;
    std::vector<RecolourStep> steps;
};

struct ComponentStats {
    int size;
    int min_degree;
    int max_degree;
    bool is_cycle; // every state has degree 2 and the component is one cycle
};

// The recolouring graph over all valid colourings: states are listed in
// lexicographic order (index = state id), adjacency joins colourings differing
// at exactly one vertex, and component labels are renumbered so that label
// order follows the smallest state id contained in each component.
struct ReconfigGraph {
    Mode mode = Mode::Strong;
    Graph base;
    int k = 0;
    std::vector<Colouring> states;
    std::vector<std::vector<int>> adjacency;
    std::vector<int> component;
    int component_count = 0;
    std::uint64_t edge_count = 0;
};

// Valid single-vertex recolourings of c, ordered by vertex then new colour.
std::vector<Colouring> neighbours(const Graph& g, int k, const Colouring& c, Mode mode);

// Vertices admitting at least one valid recolouring, ascending.
std::vector<int> recolourable_vertices(const Graph& g, int k, const Colouring& c, Mode mode);

ReconfigGraph build(const Graph& g, int k, Mode mode, std::uint64_t cap = kDefaultCap);

// component_count <= 1; an empty state space counts as connected.
bool is_connected(const ReconfigGraph& rg);

// Shortest recolouring schedule between two valid colourings, or nullopt when
// no walk exists. Implicit BFS over the state space — never builds the full
// graph — expanding neighbours in (vertex, colour) order, so the result is
// reproducible. The visited set is bounded by cap.
std::optional<Schedule> find_path(const Graph& g, int k, const Colouring& from,
                                  const Colouring& to, Mode mode,
                                  std::uint64_t cap = kDefaultCap);

// Replays s, checking every step's from-colour and every intermediate
// colouring; throws ScheduleError at the first violation. Returns the final
// colouring.
Colouring validate_schedule(const Graph& g, int k, const Schedule& s, Mode mode);

// One entry per component, in component-label order.
std::vector<ComponentStats> component_summary(const ReconfigGraph& rg);

// Adjacency kernels over a fixed state list (serial reference + OpenMP).
// Rows are independent, so the parallel kernel writes each row in the same
// deterministic (vertex, colour) order as the serial one.
namespace kernels {
std::vector<std::vector<int>> adjacency_serial(const Graph& g, int k, Mode mode,
                                               const std::vector<Colouring>& states);
std::vector<std::vector<int>> adjacency_parallel(const Graph& g, int k, Mode mode,
                                                 const std::vector<Colouring>& states);
} // namespace kernels

} // namespace strongrecolor
