#include <random>

#include "doctest.h"
#include "snakecalc/suites.hpp"

using namespace snakecalc;

namespace {

Laurent random_laurent(std::mt19937& rng)
{
    std::uniform_int_distribution<int> n(0, 4), c(-5, 5), var(1, 3), e(-2, 2);
    Laurent r;
    for (int i = n(rng); i > 0; --i) {
        Laurent m = c(rng);
        m *= Laurent::x(var(rng), e(rng));
        m *= Laurent::y(var(rng), e(rng));
        r += m;
    }
    return r;
}

std::string fixture(const std::string& name) { return std::string(SNAKECALC_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("Laurent ring laws")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * Laurent(1) == a);
        CHECK(a * Laurent::x(2) * Laurent::x(2, -1) == a);
    }
}

TEST_CASE("Laurent text round trip")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        Laurent a = random_laurent(rng);
        CHECK(parse_laurent(a.to_string()) == a);
    }
    CHECK(Laurent().to_string() == "0");
}

TEST_CASE("big coefficients stay exact")
{
    Laurent p = Laurent(1) + Laurent::x(1);
    Laurent q = 1;
    for (int i = 0; i < 80; ++i) q *= p;
    Int c = 1;
    for (int i = 0; i < 40; ++i) c = c * (80 - i) / (i + 1);  // C(80,40)
    CHECK(q.terms().at(Laurent::x(1, 40).terms().begin()->first) == c);
}

TEST_CASE("expression evaluation")
{
    std::map<std::string, Laurent> v{{"a", Laurent::x(1) + Laurent(1)}};
    CHECK(evaluate_expression("a^2 - 2*a + 1", v) == Laurent::x(1, 2));
    CHECK(evaluate_expression("(x1 + y2) * x1", v) == Laurent::x(1, 2) + Laurent::x(1) * Laurent::y(2));
    CHECK(evaluate_expression("-3 + 3", v).is_zero());
    CHECK_THROWS(evaluate_expression("a +", v));
    CHECK_THROWS(evaluate_expression("b", v));
    CHECK_THROWS(evaluate_expression("(a", v));
}

TEST_CASE("exchange relation for every arc of every fixture")
{
    for (std::string name : {"torus.txt", "annulus1.txt", "annulus2.txt"}) {
        auto f = load_surface(fixture(name));
        for (int k : f.T.arcs()) {
            CurveSpec c;
            c.crossings = {k};
            Laurent flip = cluster_variable(f.T, c);
            CHECK_MESSAGE(flip * Laurent::x(k) == exchange_rhs(f.T, k), name << " arc " << k);
        }
    }
}

TEST_CASE("cluster variables on the fixtures have positive coefficients")
{
    for (std::string name : {"torus.txt", "annulus1.txt", "annulus2.txt"}) {
        auto f = load_surface(fixture(name));
        for (const auto& c : enumerate_arcs(f.T, 5)) CHECK(cluster_variable(f.T, c).positive());
    }
}

TEST_CASE("loops: contractible, kinks, and band heights")
{
    auto f = load_surface(fixture("torus.txt"));
    CurveSpec triv;
    triv.loop = true;
    triv.contractible = true;
    CHECK(loop_laurent(f.T, triv) == Laurent(-2));
    CurveSpec zeta = f.curves[2];
    Laurent xz = loop_laurent(f.T, zeta);
    zeta.kinks = 1;
    CHECK(loop_laurent(f.T, zeta) == -xz);
    for (const auto& c : f.curves) {
        if (!c.loop) continue;
        BandHeightCheck chk;
        laurent_of(build_labeled_band(f.T, c), &chk);
        CHECK(chk.matchings > 0);
        CHECK(chk.disagreements == 0);
    }
}

TEST_CASE("L times the crossing monomial at x = y = 1 counts matchings")
{
    auto f = load_surface(fixture("annulus2.txt"));
    for (const auto& c : enumerate_arcs(f.T, 5)) {
        Snake g = build_labeled_snake(f.T, c);
        Laurent num = laurent_of(g) * crossing_monomial(g);
        CHECK(num.at_ones() == Int(enumerate_matchings(g).size()));
    }
    CHECK_THROWS(laurent_of(build_snake(parse_word("U"))));
}
