#include "doctest.h"
#include "snakecalc/suites.hpp"

using namespace snakecalc;

namespace {

std::string fixture(const std::string& name) { return std::string(SNAKECALC_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("fixtures parse and are consistent triangulations")
{
    for (std::string name : {"torus.txt", "annulus1.txt", "annulus2.txt"}) {
        auto f = load_surface(fixture(name));
        CHECK_NOTHROW(f.T.validate());
    }
    auto torus = load_surface(fixture("torus.txt"));
    CHECK(torus.T.vertex_count() == 1);
    CHECK(torus.T.arcs().size() == 4);
    CHECK(load_surface(fixture("annulus1.txt")).T.vertex_count() == 2);
}

TEST_CASE("surface parse errors carry line numbers")
{
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            parse_surface(in);
        } catch (const ParseError& e) {
            return e.line;
        }
        return 0;
    };
    CHECK(line_of("boundary: b\ntriangle: 1 2\n") == 2);
    CHECK(line_of("boundary: o i\ntriangle: 1 o 2\ntriangle: 2 1 i\narc: rel=+2 1\n") == 4);
    CHECK(line_of("boundary: o i\ntriangle: 1 o 2\ntriangle: 2 1 i\n\narc: 1 x9=3\n") == 5);
    CHECK(line_of("triangle: 1 1 2\n") == 1);
    CHECK(line_of("nonsense\n") == 1);
}

TEST_CASE("labeled snakes: glued edges carry equal labels and tiles carry the crossed arcs")
{
    for (std::string name : {"torus.txt", "annulus1.txt", "annulus2.txt"}) {
        auto f = load_surface(fixture(name));
        for (const auto& c : enumerate_arcs(f.T, 5)) {
            Snake g = build_labeled_snake(f.T, c);
            REQUIRE(g.d() == static_cast<int>(c.crossings.size()));
            for (int i = 1; i <= g.d(); ++i) CHECK(g.tile(i).label == f.T.label(c.crossings[i - 1]));
        }
    }
}

// Crossings read off the surface agree with the
// snake-graph crossing overlaps.
TEST_CASE("crossing windows: surface versus snake graphs")
{
    for (std::string name : {"torus.txt", "annulus2.txt", "annulus1.txt"}) {
        auto f = load_surface(fixture(name));
        auto arcs = enumerate_arcs(f.T, 4);
        long pairs = 0, exact = 0;
        for (const auto& a : arcs)
            for (const auto& b : arcs) {
                Snake g1 = build_labeled_snake(f.T, a), g2 = build_labeled_snake(f.T, b);
                bool lone = g1.d() == 1 && g2.d() == 1;  // a lone tile has no direction
                std::set<GeometricOverlap> snake, surface;
                for (const auto& ov : find_pair_overlaps(g1, g2))
                    if (is_crossing_pair(g1, g2, ov))
                        snake.insert({ov.s, ov.t, ov.sp, ov.tp, lone ? Direction::same : ov.direction()});
                for (auto o : geometric_overlaps(f.T, a, b))
                    if (geometric_crossing(f.T, a, b, o)) {
                        if (lone) o.dir = Direction::same;
                        surface.insert(o);
                    }
                ++pairs;
                if (snake == surface) ++exact;
                // every crossing on the surface is seen by the snake graphs
                CHECK(std::includes(snake.begin(), snake.end(), surface.begin(), surface.end()));
            }
        // annulus1 has tiles with labels (b,2,b,2): its snake graphs cannot
        // tell the two directions apart, so only inclusion holds there
        if (name != "annulus1.txt") CHECK_MESSAGE(exact == pairs, name);
    }
}

TEST_CASE("all overlap windows: surface versus snake graphs")
{
    for (std::string name : {"torus.txt", "annulus2.txt"}) {
        auto f = load_surface(fixture(name));
        auto arcs = enumerate_arcs(f.T, 4);
        for (const auto& a : arcs)
            for (const auto& b : arcs) {
                Snake g1 = build_labeled_snake(f.T, a), g2 = build_labeled_snake(f.T, b);
                bool lone = g1.d() == 1 && g2.d() == 1;
                std::set<GeometricOverlap> snake, surface;
                for (const auto& ov : find_pair_overlaps(g1, g2))
                    snake.insert({ov.s, ov.t, ov.sp, ov.tp, lone ? Direction::same : ov.direction()});
                for (auto o : geometric_overlaps(f.T, a, b)) {
                    if (lone) o.dir = Direction::same;
                    surface.insert(o);
                }
                CHECK(snake == surface);
            }
    }
}

TEST_CASE("self-resolution outputs are realized by curves on the surface")
{
    // snake components of self-resolutions of torus arcs are snake graphs of arcs
    auto f = load_surface(fixture("torus.txt"));
    std::set<std::string> realized;
    for (const auto& c : enumerate_arcs(f.T, 7)) realized.insert(canonical_form(build_labeled_snake(f.T, c)));
    long seen = 0;
    for (const auto& c : enumerate_arcs(f.T, 6))
        for (const auto& sm : self_smoothings(f.T, c))
            for (const auto* part : {&sm.res.first, &sm.res.second})
                for (const auto& comp : *part) {
                    auto* g = std::get_if<Snake>(&comp);
                    if (!g || g->edge_only) continue;
                    ++seen;
                    CHECK_MESSAGE(realized.count(canonical_form(*g)), to_text(comp));
                }
    CHECK(seen > 0);
}

TEST_CASE("torus: the product identity")
{
    auto f = load_surface(fixture("torus.txt"));
    auto ids = check_identities(f);
    REQUIRE(ids.size() == 1);
    CHECK(ids[0].ok());
    CHECK(ids[0].lhs.to_string() == ids[0].rhs.to_string());
}

TEST_CASE("skein check on the torus pair")
{
    auto f = load_surface(fixture("torus.txt"));
    auto rep = skein_check(f.T, f.curves[0], f.curves[1]);
    CHECK_FALSE(rep.compatible);
    CHECK(rep.ok());
}

TEST_CASE("compatible arcs: nothing to smooth")
{
    auto f = load_surface(std::string(SNAKECALC_FIXTURE_DIR) + "/../tests/data/compatible.txt");
    auto rep = skein_check(f.T, f.curves[0], f.curves[1]);
    CHECK(rep.compatible);
    CHECK(rep.terms.empty());
}

TEST_CASE("labeled identities on surface curves")
{
    for (std::string name : {"torus.txt", "annulus1.txt", "annulus2.txt"}) {
        SuiteResult r;
        labeled_surface(r, load_surface(fixture(name)), name, 5, 3);
        CHECK_MESSAGE(r.ok(), name << ": " << r.first_failure);
    }
}
