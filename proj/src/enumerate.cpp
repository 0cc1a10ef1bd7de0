#include "strongrecolor/enumerate.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <stdexcept>

#include "strongrecolor/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace strongrecolor {

namespace {

// k^n, saturating at max so the cap comparison never overflows.
std::uint64_t candidate_count(int n, int k) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k))
            return std::numeric_limits<std::uint64_t>::max();
        total *= static_cast<std::uint64_t>(k);
    }
    return total;
}

// Backtracking core. Extends `partial` (first `depth` vertices already set,
// colour usage counts in `used`) over vertices depth..n-1 in colour order, so
// completions come out in lexicographic order. In Strong mode, branches that
// cannot reach all k colours with the vertices left are cut.
void extend(const Graph& g, int k, Mode mode, std::vector<int>& partial, int depth,
            std::vector<int>& used, int missing, std::vector<std::vector<int>>& out) {
    const int n = g.vertex_count();
    if (mode == Mode::Strong && missing > n - depth) return;
    if (depth == n) {
        out.push_back(partial);
        return;
    }
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbours(depth))
            if (u < depth && partial[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        partial[depth] = c;
        if (used[c]++ == 0) --missing;
        extend(g, k, mode, partial, depth + 1, used, missing, out);
        if (--used[c] == 0) ++missing;
        partial[depth] = -1;
    }
}

// All proper colour prefixes of the first `depth` vertices, lexicographic.
std::vector<std::vector<int>> proper_prefixes(const Graph& g, int k, int depth) {
    std::vector<std::vector<int>> prefixes;
    std::vector<int> buf(depth, -1);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == depth) {
            prefixes.push_back(buf);
            return;
        }
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u : g.neighbours(v))
                if (u < v && buf[u] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                buf[v] = c;
                self(self, v + 1);
                buf[v] = -1;
            }
        }
    };
    rec(rec, 0);
    return prefixes;
}

} // namespace

namespace kernels {

std::vector<std::vector<int>> enumerate_serial(const Graph& g, int k, Mode mode) {
    std::vector<std::vector<int>> out;
    std::vector<int> partial(g.vertex_count(), -1);
    std::vector<int> used(k, 0);
    extend(g, k, mode, partial, 0, used, k, out);
    return out;
}

std::vector<std::vector<int>> enumerate_parallel(const Graph& g, int k, Mode mode) {
    const int n = g.vertex_count();
    const int prefix_len = std::min(n, 2);
    auto prefixes = proper_prefixes(g, k, prefix_len);

    // One buffer per prefix; concatenating in prefix order reproduces the
    // global lexicographic order exactly.
    std::vector<std::vector<std::vector<int>>> buffers(prefixes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t p = 0; p < prefixes.size(); ++p) {
        std::vector<int> partial(n, -1);
        std::vector<int> used(k, 0);
        int missing = k;
        for (int v = 0; v < prefix_len; ++v) {
            partial[v] = prefixes[p][v];
            if (used[partial[v]]++ == 0) --missing;
        }
        extend(g, k, mode, partial, prefix_len, used, missing, buffers[p]);
    }

    std::vector<std::vector<int>> out;
    for (auto& buf : buffers)
        out.insert(out.end(), std::make_move_iterator(buf.begin()),
                   std::make_move_iterator(buf.end()));
    return out;
}

} // namespace kernels

std::vector<Colouring> enumerate_colourings(const Graph& g, int k, Mode mode,
                                            std::uint64_t cap) {
    if (k < 1) throw std::invalid_argument("enumeration needs k >= 1");
    const std::uint64_t total = candidate_count(g.vertex_count(), k);
    if (total > cap) throw CapExceededError(total, cap);

    // The parallel kernel only pays off when the candidate space is sizable.
    std::vector<std::vector<int>> raw;
#ifdef _OPENMP
    if (total >= 1u << 12)
        raw = kernels::enumerate_parallel(g, k, mode);
    else
        raw = kernels::enumerate_serial(g, k, mode);
#else
    raw = kernels::enumerate_serial(g, k, mode);
#endif

    std::vector<Colouring> out;
    out.reserve(raw.size());
    for (auto& v : raw) out.push_back(Colouring{std::move(v), k});
    return out;
}

std::vector<Colouring> enumerate_strong(const Graph& g, int k, std::uint64_t cap) {
    return enumerate_colourings(g, k, Mode::Strong, cap);
}

std::vector<Colouring> enumerate_proper(const Graph& g, int k, std::uint64_t cap) {
    return enumerate_colourings(g, k, Mode::Proper, cap);
}

} // namespace strongrecolor
