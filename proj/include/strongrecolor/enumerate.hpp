#pragma once

#include <cstdint>
#include <vector>

#include "strongrecolor/colouring.hpp"
#include "strongrecolor/graph.hpp"

namespace strongrecolor {

// All valid colourings of g in lexicographic order of the colour vector.
// Precondition k >= 1; throws CapExceededError when k^n > cap. A k below the
// chromatic number just yields an empty list.
std::vector<Colouring> enumerate_colourings(const Graph& g, int k, Mode mode,
                                            std::uint64_t cap = kDefaultCap);
std::vector<Colouring> enumerate_strong(const Graph& g, int k,
                                        std::uint64_t cap = kDefaultCap);
std::vector<Colouring> enumerate_proper(const Graph& g, int k,
                                        std::uint64_t cap = kDefaultCap);

// The raw enumeration kernels. The serial one is the reference; the parallel
// one splits the search on two-vertex colour prefixes and concatenates the
// per-prefix buffers in prefix order, so both produce the identical vector.
namespace kernels {
std::vector<std::vector<int>> enumerate_serial(const Graph& g, int k, Mode mode);
std::vector<std::vector<int>> enumerate_parallel(const Graph& g, int k, Mode mode);
} // namespace kernels

} // namespace strongrecolor
