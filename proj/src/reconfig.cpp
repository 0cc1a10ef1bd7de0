#include "strongrecolor/reconfig.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "strongrecolor/errors.hpp"

namespace strongrecolor {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull; // FNV-1a over the entries
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using StateIndex = std::unordered_map<std::vector<int>, int, VecHash>;

// Calls fn(v, c) for every valid single-vertex recolouring of `colours`,
// in ascending vertex then ascending replacement colour order. `count[c]`
// must hold the number of vertices currently coloured c; in Strong mode a
// move is rejected when it would empty the old colour class.
template <typename Fn>
void for_each_move(const Graph& g, int k, Mode mode, const std::vector<int>& colours,
                   const std::vector<int>& count, Fn&& fn) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        const int old = colours[v];
        if (mode == Mode::Strong && count[old] == 1) continue;
        for (int c = 0; c < k; ++c) {
            if (c == old) continue;
            bool ok = true;
            for (int u : g.neighbours(v))
                if (colours[u] == c) {
                    ok = false;
                    break;
                }
            if (ok) fn(v, c);
        }
    }
}

std::vector<int> colour_counts(const std::vector<int>& colours, int k) {
    std::vector<int> count(k, 0);
    for (int x : colours) ++count[x];
    return count;
}

// Disjoint-set forest with path compression and union by size.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
    }

    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

std::vector<std::vector<int>> adjacency_rows(const Graph& g, int k, Mode mode,
                                             const std::vector<Colouring>& states,
                                             bool parallel) {
    StateIndex index;
    index.reserve(states.size() * 2);
    for (std::size_t i = 0; i < states.size(); ++i)
        index.emplace(states[i].colours, static_cast<int>(i));

    std::vector<std::vector<int>> rows(states.size());
    // Each iteration touches only its own row and reads the shared index, so
    // the parallel path produces exactly the serial rows.
    const std::int64_t total = static_cast<std::int64_t>(states.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
#endif
    for (std::int64_t i = 0; i < total; ++i) {
        const auto& colours = states[i].colours;
        auto count = colour_counts(colours, k);
        auto probe = colours;
        for_each_move(g, k, mode, colours, count, [&](int v, int c) {
            probe[v] = c;
            auto it = index.find(probe);
            if (it != index.end()) rows[i].push_back(it->second);
            probe[v] = colours[v];
        });
    }
#ifndef _OPENMP
    (void)parallel;
#endif
    return rows;
}

} // namespace

namespace kernels {

std::vector<std::vector<int>> adjacency_serial(const Graph& g, int k, Mode mode,
                                               const std::vector<Colouring>& states) {
    return adjacency_rows(g, k, mode, states, false);
}

std::vector<std::vector<int>> adjacency_parallel(const Graph& g, int k, Mode mode,
                                                 const std::vector<Colouring>& states) {
    return adjacency_rows(g, k, mode, states, true);
}

} // namespace kernels

std::vector<Colouring> neighbours(const Graph& g, int k, const Colouring& c, Mode mode) {
    check_colouring(g, c);
    if (c.k != k) throw std::invalid_argument("colouring k does not match");
    if (!is_valid_for_mode(g, c, mode))
        throw std::invalid_argument("colouring is not valid for the requested mode");

    std::vector<Colouring> out;
    auto count = colour_counts(c.colours, k);
    auto probe = c;
    for_each_move(g, k, mode, c.colours, count, [&](int v, int col) {
        probe.colours[v] = col;
        out.push_back(probe);
        probe.colours[v] = c.colours[v];
    });
    return out;
}

std::vector<int> recolourable_vertices(const Graph& g, int k, const Colouring& c, Mode mode) {
    check_colouring(g, c);
    if (c.k != k) throw std::invalid_argument("colouring k does not match");
    if (!is_valid_for_mode(g, c, mode))
        throw std::invalid_argument("colouring is not valid for the requested mode");

    std::vector<int> out;
    auto count = colour_counts(c.colours, k);
    for_each_move(g, k, mode, c.colours, count, [&](int v, int) {
        if (out.empty() || out.back() != v) out.push_back(v);
    });
    return out;
}

ReconfigGraph build(const Graph& g, int k, Mode mode, std::uint64_t cap) {
    ReconfigGraph rg;
    rg.mode = mode;
    rg.base = g;
    rg.k = k;
    rg.states = enumerate_colourings(g, k, mode, cap);
    rg.adjacency = adjacency_rows(g, k, mode, rg.states, true);

    const int m = static_cast<int>(rg.states.size());
    UnionFind uf(m);
    std::uint64_t degree_sum = 0;
    for (int i = 0; i < m; ++i) {
        degree_sum += rg.adjacency[i].size();
        for (int j : rg.adjacency[i]) uf.unite(i, j);
    }
    rg.edge_count = degree_sum / 2;

    // Renumber components so labels follow the smallest state id they contain.
    rg.component.assign(m, -1);
    std::unordered_map<int, int> relabel;
    for (int i = 0; i < m; ++i) {
        int root = uf.find(i);
        auto [it, inserted] = relabel.emplace(root, static_cast<int>(relabel.size()));
        rg.component[i] = it->second;
    }
    rg.component_count = static_cast<int>(relabel.size());
    return rg;
}

bool is_connected(const ReconfigGraph& rg) { return rg.component_count <= 1; }

std::optional<Schedule> find_path(const Graph& g, int k, const Colouring& from,
                                  const Colouring& to, Mode mode, std::uint64_t cap) {
    check_colouring(g, from);
    check_colouring(g, to);
    if (from.k != k || to.k != k) throw std::invalid_argument("colouring k does not match");
    if (!is_valid_for_mode(g, from, mode) || !is_valid_for_mode(g, to, mode))
        throw std::invalid_argument("endpoint colouring is not valid for the requested mode");

    // BFS over the implicit state graph. parent/move records let the walk be
    // reconstructed without storing whole colourings per step.
    StateIndex index;
    std::vector<std::vector<int>> stored;
    std::vector<int> parent;
    std::vector<RecolourStep> incoming;

    auto intern = [&](const std::vector<int>& colours, int par, RecolourStep step) {
        auto [it, inserted] = index.emplace(colours, static_cast<int>(stored.size()));
        if (inserted) {
            stored.push_back(colours);
            parent.push_back(par);
            incoming.push_back(step);
        }
        return std::pair{it->second, inserted};
    };

    intern(from.colours, -1, RecolourStep{-1, -1, -1});
    std::queue<int> frontier;
    frontier.push(0);
    int goal = from.colours == to.colours ? 0 : -1;

    while (goal < 0 && !frontier.empty()) {
        int cur = frontier.front();
        frontier.pop();
        const auto colours = stored[cur]; // copy: stored may reallocate below
        auto count = colour_counts(colours, k);
        auto probe = colours;
        bool found = false;
        for_each_move(g, k, mode, colours, count, [&](int v, int c) {
            if (found) return;
            probe[v] = c;
            auto [id, inserted] = intern(probe, cur, RecolourStep{v, colours[v], c});
            probe[v] = colours[v];
            if (inserted) {
                if (stored.size() > cap) throw CapExceededError(stored.size(), cap);
                if (stored[id] == to.colours) {
                    goal = id;
                    found = true;
                    return;
                }
                frontier.push(id);
            }
        });
    }
    if (goal < 0) return std::nullopt;

    Schedule s;
    s.start = from;
    std::vector<RecolourStep> reversed;
    for (int cur = goal; parent[cur] >= 0; cur = parent[cur])
        reversed.push_back(incoming[cur]);
    s.steps.assign(reversed.rbegin(), reversed.rend());
    return s;
}

Colouring validate_schedule(const Graph& g, int k, const Schedule& s, Mode mode) {
    check_colouring(g, s.start);
    if (s.start.k != k) throw std::invalid_argument("colouring k does not match");
    if (!is_valid_for_mode(g, s.start, mode))
        throw ScheduleError(0, "start colouring is not valid for the mode");

    Colouring current = s.start;
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        const auto& step = s.steps[i];
        if (step.vertex < 0 || step.vertex >= g.vertex_count())
            throw ScheduleError(i, "vertex out of range");
        if (step.to_colour < 0 || step.to_colour >= k)
            throw ScheduleError(i, "target colour out of range");
        if (step.from_colour == step.to_colour)
            throw ScheduleError(i, "step does not change the colour");
        if (current.colours[step.vertex] != step.from_colour)
            throw ScheduleError(i, "from-colour does not match the current colouring");
        current.colours[step.vertex] = step.to_colour;
        if (!is_valid_for_mode(g, current, mode))
            throw ScheduleError(i, mode == Mode::Strong
                                       ? "intermediate colouring is not strong"
                                       : "intermediate colouring is not proper");
    }
    return current;
}

std::vector<ComponentStats> component_summary(const ReconfigGraph& rg) {
    std::vector<ComponentStats> out(rg.component_count,
                                    ComponentStats{0, 0, 0, false});
    std::vector<int> min_deg(rg.component_count, std::numeric_limits<int>::max());
    std::vector<int> max_deg(rg.component_count, 0);
    std::vector<std::uint64_t> edge_endpoints(rg.component_count, 0);

    for (std::size_t i = 0; i < rg.states.size(); ++i) {
        int comp = rg.component[i];
        int deg = static_cast<int>(rg.adjacency[i].size());
        ++out[comp].size;
        min_deg[comp] = std::min(min_deg[comp], deg);
        max_deg[comp] = std::max(max_deg[comp], deg);
        edge_endpoints[comp] += static_cast<std::uint64_t>(deg);
    }
    for (int c = 0; c < rg.component_count; ++c) {
        out[c].min_degree = out[c].size ? min_deg[c] : 0;
        out[c].max_degree = max_deg[c];
        const std::uint64_t edges = edge_endpoints[c] / 2;
        out[c].is_cycle = out[c].size >= 3 && min_deg[c] == 2 && max_deg[c] == 2 &&
                          edges == static_cast<std::uint64_t>(out[c].size);
    }
    return out;
}

} // namespace strongrecolor
