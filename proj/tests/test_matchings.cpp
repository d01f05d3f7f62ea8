#include "doctest.h"
#include "snakecalc/suites.hpp"

using namespace snakecalc;

TEST_CASE("a single tile has two matchings, the single edge one")
{
    CHECK(enumerate_matchings(build_snake({})).size() == 2);
    CHECK(count_matchings(edge_graph()) == 1);
}

TEST_CASE("matching enumeration agrees with the subset oracle")
{
    for (const auto& w : all_words(6)) {
        Snake g = build_snake(w);
        auto fast = enumerate_matchings(g);
        std::sort(fast.begin(), fast.end());
        CHECK_MESSAGE(fast == matchings_by_subsets(g), word_string(w));
    }
}

TEST_CASE("straight snakes count Fibonacci numbers")
{
    long long a = 1, b = 2;  // d = 0 (an edge), d = 1
    for (int d = 1; d <= 9; ++d) {
        std::vector<Dir> w(d - 1, Dir::north);
        CHECK(static_cast<long long>(enumerate_matchings(build_snake(w)).size()) == b);
        long long c = a + b;
        a = b;
        b = c;
    }
}

TEST_CASE("the minimal matching is all boundary and holds S of the first tile")
{
    for (const auto& w : all_words(6)) {
        Snake g = build_snake(w);
        Matching pm = minimal_matching(g);
        CHECK_FALSE(uses_interior(g, pm));
        CHECK(std::binary_search(pm.begin(), pm.end(), canonical(g, {1, S})));
        Matching px = maximal_matching(g);
        CHECK_FALSE(uses_interior(g, px));
        CHECK(pm != px);
        CHECK(enclosed_tiles(g, pm, pm).empty());
        CHECK(static_cast<int>(enclosed_tiles(g, px, pm).size()) == g.d());
    }
}

TEST_CASE("good matchings: the 2-tile band has three")
{
    Band b = glue_band(build_snake(parse_word("U")), S);
    CHECK(enumerate_good_matchings(b).size() == 3);
}

TEST_CASE("good matchings: filter equals the union over cuts")
{
    for (const auto& w : all_words(5))
        for (Side s : {S, W}) {
            Band b = glue_band(build_snake(w), s);
            std::vector<Matching> f;
            for (const auto& gm : enumerate_good_matchings(b)) {
                f.push_back(gm.edges);
                CHECK_FALSE(gm.witnesses.empty());
            }
            std::sort(f.begin(), f.end());
            CHECK(f == good_matchings_by_cuts(b));
        }
}

TEST_CASE("good matchings do not depend on the cut used to present the band")
{
    for (const auto& w : all_words(5))
        for (Side s : {S, W}) {
            Band b = glue_band(build_snake(w), s);
            auto n = enumerate_good_matchings(b).size();
            for (int k = 1; k < b.d(); ++k) CHECK(enumerate_good_matchings(rotate_band(b, k)).size() == n);
        }
}
