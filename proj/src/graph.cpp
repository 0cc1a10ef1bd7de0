#include "strongrecolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "strongrecolor/errors.hpp"

namespace strongrecolor {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list,
             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label list length must match vertex count");

    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edge_list);

    adj_.assign(n, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(int u, int v) const {
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

Graph make_complete_bipartite(int m, int q) {
    if (m < 1 || q < 1) throw std::invalid_argument("both parts must be non-empty");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + q; ++v) e.emplace_back(u, v);
    return Graph(m + q, std::move(e));
}

Graph make_star(int m) { return make_complete_bipartite(1, m); }

Graph make_psi(int n) {
    if (n < 1) throw std::invalid_argument("hub needs at least one leaf");
    std::vector<std::pair<int, int>> e;
    for (int leaf = 1; leaf <= n; ++leaf) e.emplace_back(0, leaf);
    e.emplace_back(0, n + 1);
    e.emplace_back(n + 1, n + 2);
    return Graph(n + 3, std::move(e));
}

Graph make_phi(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("both centres need at least two leaves");
    std::vector<std::pair<int, int>> e;
    e.emplace_back(0, 1);
    for (int leaf = 2; leaf <= p + 1; ++leaf) e.emplace_back(0, leaf);
    for (int leaf = p + 2; leaf <= p + q + 1; ++leaf) e.emplace_back(1, leaf);
    return Graph(p + q + 2, std::move(e));
}

Graph make_i() {
    return Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}});
}

Graph add_vertex(const Graph& g, const std::vector<int>& neighbours) {
    if (neighbours.empty())
        throw std::invalid_argument("new vertex needs at least one neighbour");
    const int n = g.vertex_count();
    auto edges = g.edges();
    std::vector<int> seen(n, 0);
    for (int u : neighbours) {
        if (u < 0 || u >= n) throw std::invalid_argument("neighbour out of range");
        if (seen[u]++) throw std::invalid_argument("duplicate neighbour");
        edges.emplace_back(u, n);
    }
    return Graph(n + 1, std::move(edges));
}

namespace {

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbours(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

} // namespace

bool is_connected_graph(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 &&
           static_cast<int>(g.edges().size()) == g.vertex_count() - 1 &&
           is_connected_graph(g);
}

int tree_diameter(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("diameter shortcut requires a tree");
    auto d0 = bfs_distances(t, 0);
    int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = bfs_distances(t, far);
    return *std::max_element(d1.begin(), d1.end());
}

std::optional<Bipartition> detect_spanning_complete_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("need at least two vertices");

    // Components of the complement graph, without materializing it: grow each
    // component by scanning the not-yet-placed vertices for complement edges.
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = comp_count;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (comp[v] < 0 && v != u && !g.adjacent(u, v)) {
                    comp[v] = comp_count;
                    q.push(v);
                }
        }
        ++comp_count;
    }
    if (comp_count < 2) return std::nullopt;

    // Any complement component vs. the rest is a complete cross split; use the
    // one containing vertex 0 so the answer is deterministic.
    Bipartition bp;
    for (int v = 0; v < n; ++v)
        (comp[v] == comp[0] ? bp.part_a : bp.part_b).push_back(v);
    return bp;
}

bool contains_p5_subgraph(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("containment test requires a tree");
    return tree_diameter(t) >= 4;
}

bool contains_i_subgraph(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("containment test requires a tree");
    for (auto [u, v] : t.edges())
        if (t.degree(u) >= 3 && t.degree(v) >= 3) return true;
    return false;
}

namespace {

// First-solution backtracking for a proper k-colouring; each recursion step
// spends one unit of budget.
bool properly_colourable(const Graph& g, int k, std::uint64_t cap) {
    const int n = g.vertex_count();
    std::vector<int> colour(n, -1);
    std::uint64_t visited = 0;

    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        if (++visited > cap) throw CapExceededError(visited, cap);
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u : g.neighbours(v))
                if (u < v && colour[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            colour[v] = c;
            if (self(self, v + 1)) return true;
        }
        colour[v] = -1;
        return false;
    };
    return rec(rec, 0);
}

} // namespace

int chromatic_number(const Graph& g, std::uint64_t cap) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (properly_colourable(g, k, cap)) return k;
}

} // namespace strongrecolor
