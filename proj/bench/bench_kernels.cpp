// Compares the serial reference kernels against the OpenMP ones on a few
// mid-sized instances: enumeration first, then adjacency construction over
// the same state list. Run from the build tree; wall times in milliseconds.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "strongrecolor/enumerate.hpp"
#include "strongrecolor/reconfig.hpp"

using namespace strongrecolor;

namespace {

template <typename Fn>
double best_of_three_ms(Fn&& fn) {
    double best = 1e300;
    for (int i = 0; i < 3; ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const std::chrono::duration<double, std::milli> d =
            std::chrono::steady_clock::now() - start;
        if (d.count() < best) best = d.count();
    }
    return best;
}

void bench_instance(const std::string& name, const Graph& g, int k, Mode mode) {
    std::vector<std::vector<int>> serial_states;
    const double enum_serial = best_of_three_ms(
        [&] { serial_states = kernels::enumerate_serial(g, k, mode); });
    std::vector<std::vector<int>> parallel_states;
    const double enum_parallel = best_of_three_ms(
        [&] { parallel_states = kernels::enumerate_parallel(g, k, mode); });
    if (serial_states != parallel_states) {
        std::printf("%s: KERNEL MISMATCH (enumeration)\n", name.c_str());
        return;
    }

    std::vector<Colouring> states;
    states.reserve(serial_states.size());
    for (auto& v : serial_states) states.push_back({std::move(v), k});

    std::vector<std::vector<int>> adj_serial_rows, adj_parallel_rows;
    const double adj_serial = best_of_three_ms(
        [&] { adj_serial_rows = kernels::adjacency_serial(g, k, mode, states); });
    const double adj_parallel = best_of_three_ms([&] {
        adj_parallel_rows = kernels::adjacency_parallel(g, k, mode, states);
    });
    if (adj_serial_rows != adj_parallel_rows) {
        std::printf("%s: KERNEL MISMATCH (adjacency)\n", name.c_str());
        return;
    }

    std::printf("%-24s %8zu states | enumerate %8.1f ms -> %8.1f ms (x%.2f) | "
                "adjacency %8.1f ms -> %8.1f ms (x%.2f)\n",
                name.c_str(), states.size(), enum_serial, enum_parallel,
                enum_serial / enum_parallel, adj_serial, adj_parallel,
                adj_serial / adj_parallel);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
    if (omp_get_max_threads() == 1)
        std::printf("note: single thread available; expect ratios near 1\n");
#else
    std::printf("built without OpenMP: parallel kernels run serially\n");
#endif
    bench_instance("10-path, 4 colours", make_path(10), 4, Mode::Strong);
    bench_instance("9-cycle, 4 colours", make_cycle(9), 4, Mode::Strong);
    bench_instance("K_{3,4}, 5 colours", make_complete_bipartite(3, 4), 5,
                   Mode::Strong);
    bench_instance("8-path, 3 col, proper", make_path(8), 3, Mode::Proper);
    return 0;
}
