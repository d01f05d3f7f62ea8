#include "doctest.h"
#include "snakecalc/suites.hpp"

using namespace snakecalc;

namespace {

std::multiset<TileId> ids_of(const std::vector<Component>& parts)
{
    auto v = tile_ids(parts);
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("a crossing pair resolves into four components")
{
    // two 3-tile snakes meeting in a zigzag with opposite exits
    Snake g1 = build_snake(parse_word("UR")), g2 = build_snake(parse_word("RU"));
    Int product = Int(matchings_by_subsets(g1).size() * matchings_by_subsets(g2).size());
    CHECK(product == 16);
    int crossings = 0;
    for (const auto& ov : find_pair_overlaps(g1, g2)) {
        if (!is_crossing_pair(g1, g2, ov)) continue;
        ++crossings;
        Resolution r = resolve_pair(g1, g2, ov);
        CHECK(r.first.size() == 2);
        CHECK(r.second.size() == 2);
        CHECK(count(r.element()) == product);
    }
    CHECK(crossings > 0);
}

TEST_CASE("a snake does not cross itself along the full overlap")
{
    // lone tiles of straight pieces also overlap in the turned frame and may cross
    for (const auto& w : all_words(5)) {
        Snake g = build_snake(w);
        int full = 0;
        for (const auto& ov : find_pair_overlaps(g, g))
            if (ov.s == 1 && ov.t == g.d() && ov.sp == 1 && ov.tp == g.d() && ov.direction() == Direction::same) {
                ++full;
                CHECK_FALSE(is_crossing_pair(g, g, ov));
            }
        CHECK(full == 1);
    }
}

TEST_CASE("pair resolutions conserve tiles")
{
    for (const auto& a : all_words(4))
        for (const auto& b : all_words(4)) {
            Snake g1 = build_snake(a), g2 = build_snake(b);
            for (const auto& ov : find_pair_overlaps(g1, g2)) {
                if (!is_crossing_pair(g1, g2, ov)) continue;
                Resolution r = resolve_pair(g1, g2, ov);
                CHECK(ids_of(r.first) == ids_of(std::vector<Component>(r.inputs.begin(), r.inputs.end())));
            }
        }
}

TEST_CASE("counting identities on small graphs")
{
    CHECK(pair_counting_suite(4).ok());
    CHECK(self_counting_suite(5).ok());
    CHECK(graft_counting_suite(4).ok());
}

TEST_CASE("every self-crossing family shows up by 7 tiles")
{
    auto r = self_counting_suite(7);
    CHECK(r.ok());
    for (std::string tag : {"SELF-OPPOSITE", "SELF-SAME-s'<=t", "SELF-SAME-s'>t+1(a)", "SELF-SAME-s'>t+1(b)",
                            "SELF-SAME-s'>t+1(c)", "SELF-SAME-s'=t+1(a)", "SELF-SAME-s'=t+1(d)"})
        CHECK_MESSAGE(r.by_case.count(tag), tag);
    long h = 0;
    for (const auto& [k, n] : r.by_case)
        if (k.rfind("SELF-SAME-s'=t+1(c)", 0) == 0) h += n;
    CHECK(h > 0);
}

TEST_CASE("crossing verdicts do not depend on the sign function")
{
    CHECK(seed_independence_suite(5).ok());
}

TEST_CASE("negative control: a perturbed coefficient breaks the identity")
{
    auto f = load_surface(std::string(SNAKECALC_FIXTURE_DIR) + "/torus.txt");
    int checked = 0;
    for (const auto& a : enumerate_arcs(f.T, 3))
        for (const auto& b : enumerate_arcs(f.T, 3))
            for (const auto& sm : pair_smoothings(f.T, a, b)) {
                auto rl = resolution_laurent(sm.res, sm.overlap ? &*sm.overlap : nullptr);
                REQUIRE(rl.total == sm.lhs);
                Laurent bumped = rl.first_coef * rl.first + rl.second_coef * Laurent::y(1) * rl.second;
                CHECK(bumped != sm.lhs);
                Laurent dropped = rl.first_coef * rl.first;
                CHECK(dropped != sm.lhs);
                ++checked;
            }
    CHECK(checked > 10);
}

TEST_CASE("negative control: a wrong counting term is caught")
{
    Snake g1 = build_snake(parse_word("UR")), g2 = build_snake(parse_word("RU"));
    Int product = Int(matchings_by_subsets(g1).size() * matchings_by_subsets(g2).size());
    for (const auto& ov : find_pair_overlaps(g1, g2)) {
        if (!is_crossing_pair(g1, g2, ov)) continue;
        Resolution r = resolve_pair(g1, g2, ov);
        r.second_sign = -r.second_sign;
        CHECK(count(r.element()) != product);
    }
}

TEST_CASE("grafting needs delta3 exactly at the last tile")
{
    Snake g1 = build_snake(parse_word("UU")), g2 = build_snake(parse_word("R"));
    CHECK_THROWS(graft_pair(g1, g2, 3));
    CHECK_THROWS(graft_pair(g1, g2, 1, N));
    CHECK_NOTHROW(graft_pair(g1, g2, 3, E));
    CHECK_THROWS(self_graft(g1, 3));
    CHECK_THROWS(graft_pair(g1, g2, 4, N));
}

TEST_CASE("record files: resolve what the block asks for")
{
    std::istringstream in(
        "# two blocks\n"
        "snake: UR\n"
        "snake: RU\n"
        "\n"
        "case: grafting\n"
        "snake: UU\n"
        "edge-graph: -\n"
        "graft: s=2\n");
    auto recs = parse_graph_file(in);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].line == 2);
    CHECK(recs[1].name == "grafting");
    CHECK_FALSE(record_resolutions(recs[0]).empty());
    auto g = record_resolutions(recs[1]);
    REQUIRE(g.size() == 1);
    CHECK(g[0].res.tag == "GRAFT-3");

    std::istringstream bad("snake: U\nsnake: U\ngraft: s=x\n");
    try {
        parse_graph_file(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}
