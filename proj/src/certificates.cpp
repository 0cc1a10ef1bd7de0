#include "strongrecolor/certificates.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "strongrecolor/reconfig.hpp"

namespace strongrecolor {

namespace {

bool vertices_form_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int len = static_cast<int>(cycle.size());
    if (len < 3) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < len; ++i)
        if (!g.adjacent(cycle[i], cycle[(i + 1) % len])) return false;
    return true;
}

// Fundamental cycles of a BFS spanning tree, one per non-tree edge: the two
// tree paths up to the meeting point, stitched into an oriented vertex list.
std::vector<std::vector<int>> fundamental_cycles(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(n, -2), depth(n, 0);
    std::vector<std::vector<int>> cycles;
    std::vector<std::pair<int, int>> non_tree;

    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbours(u))
                if (parent[v] == -2) {
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                }
        }
    }
    for (auto [u, v] : g.edges())
        if (parent[v] != u && parent[u] != v) non_tree.emplace_back(u, v);

    for (auto [u, v] : non_tree) {
        std::vector<int> up_u{u}, up_v{v};
        int a = u, b = v;
        while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
        while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
        while (a != b) {
            up_u.push_back(a = parent[a]);
            up_v.push_back(b = parent[b]);
        }
        // up_u ends at the meeting vertex; append the v-side path reversed,
        // dropping its copy of the meeting vertex.
        std::vector<int> cycle(up_u.begin(), up_u.end());
        cycle.insert(cycle.end(), up_v.rbegin() + 1, up_v.rend());
        std::reverse(cycle.begin() + 1, cycle.end()); // orient as u -> v -> ... -> u
        if (cycle.size() >= 3) cycles.push_back(std::move(cycle));
    }
    return cycles;
}

} // namespace

long long cycle_weight(const Graph& g, const std::vector<int>& cycle, const Colouring& c) {
    check_colouring(g, c);
    if (c.k != 3) throw std::invalid_argument("cycle weight is defined for k = 3 only");
    if (!vertices_form_cycle(g, cycle))
        throw std::invalid_argument("vertex sequence is not a cycle of the graph");

    long long w = 0;
    const int len = static_cast<int>(cycle.size());
    for (int i = 0; i < len; ++i) {
        const int cu = c.colours[cycle[i]];
        const int cv = c.colours[cycle[(i + 1) % len]];
        const int diff = (cv - cu + 3) % 3;
        if (diff == 0)
            throw std::invalid_argument("monochromatic edge has no weight");
        w += diff == 1 ? 1 : -1;
    }
    return w;
}

std::optional<Certificate> weight_certificate(const Graph& g, const Colouring& a,
                                              const Colouring& b) {
    if (a.k != 3 || b.k != 3)
        throw std::invalid_argument("weight certificates are defined for k = 3 only");
    if (!is_strong(g, a) || !is_strong(g, b))
        throw std::invalid_argument("both colourings must be strong");

    for (const auto& cycle : fundamental_cycles(g)) {
        const long long wa = cycle_weight(g, cycle, a);
        const long long wb = cycle_weight(g, cycle, b);
        if (wa != wb) return Certificate{CycleWeightCert{cycle, wa, wb}};
    }
    return std::nullopt;
}

namespace {

// Side of each colour under a proper colouring of a spanning complete
// bipartite split: every colour class lies entirely in one part, because any
// cross pair is an edge. 0 = part_a, 1 = part_b; -1 = colour unused.
std::vector<int> colour_sides(const Bipartition& bp, const Colouring& c) {
    std::vector<int> side(c.k, -1);
    for (int v : bp.part_a) side[c.colours[v]] = 0;
    for (int v : bp.part_b) side[c.colours[v]] = 1;
    return side;
}

} // namespace

std::optional<Certificate> swap_certificate(const Graph& g, int k, const Colouring& a,
                                            const Colouring& b) {
    if (a.k != k || b.k != k) throw std::invalid_argument("colouring k does not match");
    if (!is_strong(g, a) || !is_strong(g, b))
        throw std::invalid_argument("both colourings must be strong");

    auto bp = detect_spanning_complete_bipartite(g);
    if (!bp) return std::nullopt;
    const auto side_a = colour_sides(*bp, a);
    const auto side_b = colour_sides(*bp, b);
    for (int colour = 0; colour < k; ++colour)
        if (side_a[colour] != side_b[colour])
            return Certificate{BipartiteSwapCert{*bp, colour}};
    return std::nullopt;
}

std::vector<int> globally_frozen_vertices(const Graph& g, int k, std::uint64_t cap) {
    const auto states = enumerate_strong(g, k, cap);
    std::vector<char> frozen(g.vertex_count(), 1);
    for (const auto& s : states)
        for (int v : recolourable_vertices(g, k, s, Mode::Strong)) frozen[v] = 0;
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (frozen[v]) out.push_back(v);
    return out;
}

std::optional<Certificate> certify_separation(const Graph& g, int k, const Colouring& a,
                                              const Colouring& b, std::uint64_t cap) {
    if (a.k != k || b.k != k) throw std::invalid_argument("colouring k does not match");
    if (!is_strong(g, a) || !is_strong(g, b))
        throw std::invalid_argument("both colourings must be strong");

    if (auto cert = swap_certificate(g, k, a, b)) return cert;
    if (k == 3)
        if (auto cert = weight_certificate(g, a, b)) return cert;
    for (int v : globally_frozen_vertices(g, k, cap))
        if (a.colours[v] != b.colours[v]) return Certificate{FrozenVertexCert{v}};

    const auto rg = build(g, k, Mode::Strong, cap);
    int comp_a = -1, comp_b = -1;
    for (std::size_t i = 0; i < rg.states.size(); ++i) {
        if (rg.states[i].colours == a.colours) comp_a = rg.component[i];
        if (rg.states[i].colours == b.colours) comp_b = rg.component[i];
    }
    if (comp_a == comp_b) return std::nullopt;
    return Certificate{ExhaustiveCert{comp_a, comp_b}};
}

bool verify_certificate(const Graph& g, int k, const Colouring& a, const Colouring& b,
                        const Certificate& cert) {
    try {
        if (a.k != k || b.k != k) return false;
        if (!is_strong(g, a) || !is_strong(g, b)) return false;

        if (const auto* swap = std::get_if<BipartiteSwapCert>(&cert)) {
            const auto& bp = swap->bipartition;
            if (swap->colour < 0 || swap->colour >= k) return false;
            if (bp.part_a.empty() || bp.part_b.empty()) return false;
            std::vector<int> membership(g.vertex_count(), -1);
            for (int v : bp.part_a) {
                if (v < 0 || v >= g.vertex_count() || membership[v] != -1) return false;
                membership[v] = 0;
            }
            for (int v : bp.part_b) {
                if (v < 0 || v >= g.vertex_count() || membership[v] != -1) return false;
                membership[v] = 1;
            }
            if (std::count(membership.begin(), membership.end(), -1) > 0) return false;
            for (int u : bp.part_a)
                for (int v : bp.part_b)
                    if (!g.adjacent(u, v)) return false;
            const auto side_a = colour_sides(bp, a);
            const auto side_b = colour_sides(bp, b);
            return side_a[swap->colour] != -1 && side_b[swap->colour] != -1 &&
                   side_a[swap->colour] != side_b[swap->colour];
        }

        if (const auto* weight = std::get_if<CycleWeightCert>(&cert)) {
            if (k != 3) return false;
            const long long wa = cycle_weight(g, weight->cycle, a);
            const long long wb = cycle_weight(g, weight->cycle, b);
            return wa == weight->weight_alpha && wb == weight->weight_beta && wa != wb;
        }

        if (const auto* frozen = std::get_if<FrozenVertexCert>(&cert)) {
            const int v = frozen->vertex;
            if (v < 0 || v >= g.vertex_count()) return false;
            if (a.colours[v] == b.colours[v]) return false;
            const auto all_frozen = globally_frozen_vertices(g, k);
            return std::binary_search(all_frozen.begin(), all_frozen.end(), v);
        }

        const auto& exhaustive = std::get<ExhaustiveCert>(cert);
        const auto rg = build(g, k, Mode::Strong);
        int comp_a = -1, comp_b = -1;
        for (std::size_t i = 0; i < rg.states.size(); ++i) {
            if (rg.states[i].colours == a.colours) comp_a = rg.component[i];
            if (rg.states[i].colours == b.colours) comp_b = rg.component[i];
        }
        return comp_a >= 0 && comp_b >= 0 && comp_a == exhaustive.component_alpha &&
               comp_b == exhaustive.component_beta && comp_a != comp_b;
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace strongrecolor
