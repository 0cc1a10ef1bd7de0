#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "strongrecolor/graph.hpp"

namespace strongrecolor {

// A k-colouring of a fixed graph: colours[v] in {0..k-1} for every vertex v.
struct Colouring {
    std::vector<int> colours;
    int k = 0;

    friend bool operator==(const Colouring& a, const Colouring& b) {
        return a.k == b.k && a.colours == b.colours;
    }
};

enum class Mode { Strong, Proper };

// Throws std::invalid_argument if c has the wrong length or an entry outside
// {0..k-1}; used at every external boundary.
void check_colouring(const Graph& g, const Colouring& c);

bool is_proper(const Graph& g, const Colouring& c);
// Proper and using every one of the k colours at least once.
bool is_strong(const Graph& g, const Colouring& c);
bool is_valid_for_mode(const Graph& g, const Colouring& c, Mode mode);

// Accepts "a,b,c" (letters a..j standing for 0..9) or "0,1,2"; the two token
// styles must not be mixed. Entries must be < k.
Colouring parse_colouring(std::string_view text, int k);

// Letter form when every colour fits in a..j, digit form otherwise.
std::string format_colouring(const Colouring& c);

} // namespace strongrecolor
