#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace strongrecolor {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

// A split V = A ∪ B, both parts non-empty and disjoint; vertex lists kept sorted.
struct Bipartition {
    std::vector<int> part_a;
    std::vector<int> part_b;
};

// Simple undirected graph. Immutable after construction: edges are normalized
// to u < v, sorted and deduplicated, and adjacency lists are prebuilt sorted.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    const std::vector<std::string>& labels() const { return labels_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

// Named families. Vertex numbering conventions are part of the interface:
//  make_path(n):    0-1-2-...-(n-1)
//  make_cycle(n):   path plus the wrap edge {0, n-1}
//  make_complete_bipartite(m, q): parts {0..m-1} and {m..m+q-1}
//  make_star(m):    centre 0 with leaves 1..m  (= K_{1,m})
//  make_psi(n):     hub 0 with leaves 1..n, plus the pendant 2-path 0-(n+1)-(n+2)
//  make_phi(p, q):  adjacent centres 0 and 1; 0 carries leaves 2..p+1,
//                   1 carries leaves p+2..p+q+1 (p, q >= 2)
//  make_i():        the 6-vertex tree 0-1-2, 3-4-5, 1-4
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete_bipartite(int m, int q);
Graph make_star(int m);
Graph make_psi(int n);
Graph make_phi(int p, int q);
Graph make_i();

// New vertex with index g.n, wired to the given (non-empty, distinct) vertices.
Graph add_vertex(const Graph& g, const std::vector<int>& neighbours);

bool is_connected_graph(const Graph& g);
bool is_tree(const Graph& g);

// Largest distance (in edges) realized in a tree; two BFS passes.
int tree_diameter(const Graph& t);

// A spanning complete bipartite subgraph K_{A,B} exists iff the complement
// graph is disconnected; returns the complement-component split if so.
std::optional<Bipartition> detect_spanning_complete_bipartite(const Graph& g);

// Tree-only containment tests (throw if the input is not a tree).
// A path on five vertices embeds in a tree iff its diameter is >= 4;
// the I-shaped tree embeds iff some edge joins two vertices of degree >= 3.
bool contains_p5_subgraph(const Graph& t);
bool contains_i_subgraph(const Graph& t);

// Smallest k admitting a proper k-colouring; first-solution backtracking with a
// visited-node budget of `cap` per candidate k.
int chromatic_number(const Graph& g, std::uint64_t cap = kDefaultCap);

} // namespace strongrecolor
