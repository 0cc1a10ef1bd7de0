#include "strongrecolor/trees.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace strongrecolor {

Graph prufer_decode(const std::vector<int>& seq, int n) {
    if (n < 2) throw std::invalid_argument("decoding needs n >= 2");
    if (static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("sequence length must be n - 2");
    for (int x : seq)
        if (x < 0 || x >= n) throw std::invalid_argument("sequence entry out of range");

    std::vector<int> remaining_degree(n, 1);
    for (int x : seq) ++remaining_degree[x];

    // Repeatedly join the smallest leaf to the next sequence entry.
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (remaining_degree[v] == 1) leaves.push(v);

    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--remaining_degree[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

namespace {

// Rooted AHU encoding: a node's code is "(" + its children's codes in sorted
// order + ")", which is invariant under relabelling.
std::string ahu_encode(const Graph& t, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int u : t.neighbours(v))
        if (u != parent) child_codes.push_back(ahu_encode(t, u, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

// One or two middle vertices, found by peeling leaves layer by layer.
std::vector<int> tree_centres(const Graph& t) {
    const int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> degree(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = t.degree(v);
        if (degree[v] == 1) layer.push_back(v);
    }
    int stripped = 0;
    while (n - stripped > 2) {
        stripped += static_cast<int>(layer.size());
        std::vector<int> next;
        for (int leaf : layer)
            for (int u : t.neighbours(leaf))
                if (--degree[u] == 1) next.push_back(u);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

} // namespace

std::string ahu_canonical_form(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("canonical form requires a tree");
    const auto centres = tree_centres(t);
    if (centres.size() == 1) return ahu_encode(t, centres[0], -1);
    // Bicentral tree: encode the two halves, each rooted at its centre with
    // the other centre as the excluded parent, and order them canonically.
    std::string a = ahu_encode(t, centres[0], centres[1]);
    std::string b = ahu_encode(t, centres[1], centres[0]);
    if (b < a) std::swap(a, b);
    return a + "|" + b;
}

std::vector<Graph> tree_isomorphism_classes(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (n == 1) return {Graph(1, {})};
    if (n == 2) return {make_path(2)};

    std::vector<Graph> classes;
    std::map<std::string, bool> seen;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        Graph t = prufer_decode(seq, n);
        auto canon = ahu_canonical_form(t);
        if (seen.emplace(std::move(canon), true).second) classes.push_back(std::move(t));

        // Advance the sequence like an odometer in base n.
        int pos = n - 3;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return classes;
}

} // namespace strongrecolor
