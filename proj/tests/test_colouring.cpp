#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "strongrecolor/enumerate.hpp"
#include "strongrecolor/errors.hpp"
#include "support/oracles.hpp"

using namespace strongrecolor;

namespace {

long long binomial(int n, int r) {
    long long out = 1;
    for (int i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

} // namespace

TEST_CASE("properness and strongness") {
    const Graph p3 = make_path(3);
    CHECK(is_proper(p3, {{0, 1, 0}, 2}));
    CHECK(is_strong(p3, {{0, 1, 0}, 2}));
    CHECK(is_proper(p3, {{0, 1, 0}, 3}));
    CHECK(!is_strong(p3, {{0, 1, 0}, 3})); // colour 2 never used
    CHECK(!is_proper(p3, {{0, 0, 1}, 2}));
    CHECK(is_strong(make_cycle(3), {{0, 1, 2}, 3}));
    CHECK_THROWS_AS(is_proper(p3, {{0, 1}, 2}), std::invalid_argument);
    CHECK_THROWS_AS(is_proper(p3, {{0, 2, 0}, 2}), std::invalid_argument);
}

TEST_CASE("parsing letters and integers") {
    CHECK(parse_colouring("a,b,a", 2).colours == std::vector<int>{0, 1, 0});
    CHECK(parse_colouring("0,1,0", 2).colours == std::vector<int>{0, 1, 0});
    CHECK(parse_colouring(" a , c ", 3).colours == std::vector<int>{0, 2});
    CHECK(parse_colouring("1,10", 11).colours == std::vector<int>{1, 10});

    CHECK_THROWS_AS(parse_colouring("a,1", 2), std::invalid_argument); // mixed styles
    CHECK_THROWS_AS(parse_colouring("a,e", 4), std::invalid_argument); // e = 4 >= k
    CHECK_THROWS_AS(parse_colouring("a,z", 9), std::invalid_argument);
    CHECK_THROWS_AS(parse_colouring("a,,b", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_colouring("", 3), std::invalid_argument);

    CHECK(format_colouring({{0, 1, 2, 0}, 3}) == "abca");
}

TEST_CASE("frozen enumeration counts") {
    CHECK(enumerate_strong(make_path(5), 3).size() == 42);
    CHECK(enumerate_strong(make_path(4), 3).size() == 18);
    CHECK(enumerate_strong(make_cycle(5), 4).size() == 120);
    CHECK(enumerate_strong(make_cycle(4), 3).size() == 12);
    CHECK(enumerate_strong(make_i(), 3).size() == 90);
    CHECK(enumerate_proper(make_path(5), 3).size() == 48);
    CHECK(enumerate_proper(make_cycle(3), 3).size() == 6);
    for (int n = 2; n <= 8; ++n) CHECK(enumerate_strong(make_path(n), 2).size() == 2);
}

TEST_CASE("below the chromatic number the strong list is empty, not an error") {
    CHECK(enumerate_strong(make_cycle(5), 2).empty());
    CHECK(enumerate_proper(make_cycle(5), 2).empty());
    CHECK(enumerate_strong(make_cycle(3), 2).empty());
}

TEST_CASE("lexicographic order and agreement with the naive filter") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : oracles::connected_graph_classes(n))
            for (int k = 1; k <= 4; ++k)
                for (Mode mode : {Mode::Strong, Mode::Proper}) {
                    const auto fast = enumerate_colourings(g, k, mode);
                    const auto slow = oracles::naive_enumerate(g, k, mode);
                    REQUIRE(fast.size() == slow.size());
                    for (std::size_t i = 0; i < fast.size(); ++i)
                        CHECK(fast[i].colours == slow[i].colours);
                    for (std::size_t i = 1; i < fast.size(); ++i)
                        CHECK(fast[i - 1].colours < fast[i].colours);
                }

    // A couple of larger spot checks against the raw filter.
    for (auto [g, k] : {std::pair{make_path(8), 4}, {make_cycle(7), 3}}) {
        const auto fast = enumerate_strong(g, k);
        const auto slow = oracles::naive_enumerate(g, k, Mode::Strong);
        REQUIRE(fast.size() == slow.size());
        CHECK(std::equal(fast.begin(), fast.end(), slow.begin()));
    }
}

TEST_CASE("inclusion-exclusion ties strong counts to proper counts") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : oracles::connected_graph_classes(n))
            for (int k = 1; k <= 4; ++k) {
                long long expected = 0;
                for (int j = 0; j < k; ++j) {
                    const long long properly =
                        static_cast<long long>(enumerate_proper(g, k - j).size());
                    expected += (j % 2 ? -1 : 1) * binomial(k, j) * properly;
                }
                CAPTURE(n);
                CAPTURE(k);
                CHECK(static_cast<long long>(enumerate_strong(g, k).size()) == expected);
            }
}

TEST_CASE("the strong set is invariant under colour permutations") {
    auto as_set = [](const std::vector<Colouring>& states) {
        std::set<std::vector<int>> s;
        for (const auto& c : states) s.insert(c.colours);
        return s;
    };
    for (auto [g, k] : {std::pair{make_path(5), 3}, {make_cycle(5), 4}, {make_i(), 3}}) {
        const auto states = enumerate_strong(g, k);
        const auto base = as_set(states);
        std::vector<int> perm(k);
        for (int i = 0; i < k; ++i) perm[i] = i;
        do {
            std::set<std::vector<int>> mapped;
            for (const auto& c : states) {
                auto v = c.colours;
                for (int& x : v) x = perm[x];
                mapped.insert(std::move(v));
            }
            CHECK(mapped == base);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("candidate cap") {
    CHECK_THROWS_AS(enumerate_strong(make_path(30), 2), CapExceededError);
    CHECK_THROWS_AS(enumerate_strong(make_path(10), 3, 100), CapExceededError);
    CHECK(enumerate_strong(make_path(10), 3, 100'000).size() > 0);
    CHECK_THROWS_AS(enumerate_strong(make_path(3), 0), std::invalid_argument);

    try {
        enumerate_strong(make_path(24), 2);
        FAIL("cap should have tripped");
    } catch (const CapExceededError& e) {
        CHECK(e.requested() == (1ull << 24));
        CHECK(e.cap() == kDefaultCap);
    }
}
