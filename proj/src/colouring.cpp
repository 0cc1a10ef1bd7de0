#include "strongrecolor/colouring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace strongrecolor {

void check_colouring(const Graph& g, const Colouring& c) {
    if (c.k < 1) throw std::invalid_argument("colouring needs k >= 1");
    if (static_cast<int>(c.colours.size()) != g.vertex_count())
        throw std::invalid_argument("colouring length does not match vertex count");
    for (int x : c.colours)
        if (x < 0 || x >= c.k)
            throw std::invalid_argument("colour entry outside 0..k-1");
}

bool is_proper(const Graph& g, const Colouring& c) {
    check_colouring(g, c);
    for (auto [u, v] : g.edges())
        if (c.colours[u] == c.colours[v]) return false;
    return true;
}

bool is_strong(const Graph& g, const Colouring& c) {
    if (!is_proper(g, c)) return false;
    std::vector<char> used(c.k, 0);
    for (int x : c.colours) used[x] = 1;
    return std::find(used.begin(), used.end(), 0) == used.end();
}

bool is_valid_for_mode(const Graph& g, const Colouring& c, Mode mode) {
    return mode == Mode::Strong ? is_strong(g, c) : is_proper(g, c);
}

Colouring parse_colouring(std::string_view text, int k) {
    if (k < 1) throw std::invalid_argument("colouring needs k >= 1");

    // Split on commas, trimming surrounding spaces from each token.
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        while (!current.empty() && std::isspace(static_cast<unsigned char>(current.back())))
            current.pop_back();
        tokens.push_back(current);
        current.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(ch)) || !current.empty()) {
            current.push_back(ch);
        }
    }
    flush();

    bool saw_letter = false, saw_integer = false;
    Colouring result;
    result.k = k;
    for (const auto& tok : tokens) {
        if (tok.empty()) throw std::invalid_argument("empty colour token");
        int value;
        if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'j') {
            saw_letter = true;
            value = tok[0] - 'a';
        } else if (std::all_of(tok.begin(), tok.end(),
                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            saw_integer = true;
            value = std::stoi(tok);
        } else {
            throw std::invalid_argument("unknown colour symbol '" + tok + "'");
        }
        if (value >= k)
            throw std::invalid_argument("colour '" + tok + "' is outside 0..k-1");
        result.colours.push_back(value);
    }
    if (saw_letter && saw_integer)
        throw std::invalid_argument("letter and integer colour tokens must not be mixed");
    return result;
}

std::string format_colouring(const Colouring& c) {
    bool letters = std::all_of(c.colours.begin(), c.colours.end(),
                               [](int x) { return x < 10; });
    std::string out;
    for (std::size_t i = 0; i < c.colours.size(); ++i) {
        if (letters) {
            out.push_back(static_cast<char>('a' + c.colours[i]));
        } else {
            if (i) out.push_back(',');
            out += std::to_string(c.colours[i]);
        }
    }
    return out;
}

} // namespace strongrecolor
