#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "km/families.hpp"
#include "km/quad.hpp"

using namespace km;

TEST_CASE("canonical_quad matches explicit orbit enumeration") {
    // independent oracle: apply all eight dihedral ops directly
    auto oracle = [](const Quad& q) {
        Quad best = q;
        Quad cur = q;
        for (int i = 0; i < 4; ++i) {
            best = std::min(best, cur);
            best = std::min(best, reverse_quad(cur));
            cur = shift_quad(cur);
        }
        return best;
    };
    for (const Quad& q : all_ordered_quads(6)) {
        auto orbit = dihedral_orbit(q);
        CHECK(std::set<Quad>(orbit.begin(), orbit.end()).size() == 8);
        CHECK(canonical_quad(q, false).quad == oracle(q));
        CHECK(canonical_quad(q, false).sign == +1);
    }
}

TEST_CASE("canonical_quad pinned examples") {
    auto u = canonical_quad(Quad(2, 1, 3, 4), false);
    CHECK(u.quad == Quad(1, 2, 4, 3));
    CHECK(u.sign == +1);

    auto s1 = canonical_quad(Quad(2, 3, 4, 1), true);
    CHECK(s1.quad == Quad(1, 2, 3, 4));
    CHECK(s1.sign == -1);

    auto s2 = canonical_quad(Quad(3, 4, 1, 2), true);
    CHECK(s2.quad == Quad(1, 2, 3, 4));
    CHECK(s2.sign == +1);
}

TEST_CASE("signed canonicalization is a consistent character of the orbit") {
    for (const Quad& q : all_ordered_quads(5)) {
        auto c = canonical_quad(q, true);
        // one shift flips the sign, two shifts restore it
        auto cs = canonical_quad(shift_quad(q), true);
        CHECK(cs.quad == c.quad);
        CHECK(cs.sign == -c.sign);
        auto cr = canonical_quad(reverse_quad(q), true);
        CHECK(cr.quad == c.quad);
        CHECK(cr.sign == -c.sign);
    }
}

TEST_CASE("canonical quad counts") {
    for (int n = 4; n <= 7; ++n)
        CHECK(static_cast<long long>(canonical_quads(n).size()) == 3 * binomial(n, 4));
}

TEST_CASE("the 15 canonical quads of n=5 are the Theta set") {
    std::set<std::string> names;
    for (const Quad& q : canonical_quads(5)) names.insert(quad_name(q));
    std::set<std::string> theta{"(1234)", "(1235)", "(1243)", "(1245)", "(1253)",
                                "(1254)", "(1324)", "(1325)", "(1345)", "(1354)",
                                "(1425)", "(1435)", "(2345)", "(2354)", "(2435)"};
    CHECK(names == theta);
}

TEST_CASE("quad names parse and render") {
    CHECK(quad_name(Quad(1, 2, 3, 4)) == "(1234)");
    CHECK(quad_name(Quad(10, 2, 3, 4)) == "(10,2,3,4)");
    CHECK(parse_quad_name("(1234)") == Quad(1, 2, 3, 4));
    CHECK(parse_quad_name("(10,2,3,4)") == Quad(10, 2, 3, 4));
    CHECK(!parse_quad_name("(1123)").has_value());
    CHECK(!parse_quad_name("1234").has_value());
}

TEST_CASE("builder counts for gamma") {
    RelatorCounts c4;
    Presentation g4 = build_gamma(4, EnumMode::full, &c4);
    CHECK(g4.generator_count() == 24);
    CHECK(c4.involutive == 24);
    CHECK(c4.dihedral == 48);
    CHECK(c4.commutative == 0);
    CHECK(c4.pentagon == 0);

    RelatorCounts c5;
    Presentation g5 = build_gamma(5, EnumMode::full, &c5);
    CHECK(g5.generator_count() == 120);
    CHECK(c5.commutative == 0);
    CHECK(c5.pentagon == 120);

    RelatorCounts c6;
    Presentation g6 = build_gamma(6, EnumMode::full, &c6);
    CHECK(g6.generator_count() == 360);
    CHECK(c6.pentagon == 720);

    // brute-force oracle for the commutative relator count at n=6
    long long pairs = 0;
    auto quads6 = increasing_quads(6);
    for (std::size_t a = 0; a < quads6.size(); ++a)
        for (std::size_t b = a + 1; b < quads6.size(); ++b) {
            int mask_a = 0, mask_b = 0;
            for (int i = 0; i < 4; ++i) {
                mask_a |= 1 << quads6[a].e[i];
                mask_b |= 1 << quads6[b].e[i];
            }
            if (__builtin_popcount(mask_a & mask_b) <= 2) ++pairs;
        }
    CHECK(c6.commutative == pairs * 24 * 24);
    CHECK(static_cast<long long>(g6.relators.size()) == c6.total());
}

TEST_CASE("reduced gamma at n=5 is the Theta presentation") {
    RelatorCounts c;
    Presentation p = build_gamma(5, EnumMode::reduced, &c);
    CHECK(p.generator_count() == 15);
    CHECK(p.relators.size() == 27);
    CHECK(c.involutive == 15);
    CHECK(c.commutative == 0);
    CHECK(c.pentagon == 12);
}

TEST_CASE("builder counts for gamma_hat and delta") {
    RelatorCounts ch;
    Presentation gh5 = build_gamma_hat(5, EnumMode::full, &ch);
    CHECK(gh5.generator_count() == 120);
    CHECK(ch.involutive == 0);
    CHECK(ch.dihedral == 240);
    CHECK(ch.pentagon == 120);

    RelatorCounts cd4;
    Presentation d4 = build_delta(4, false, &cd4);
    CHECK(d4.generator_count() == 1);
    CHECK(d4.relators.size() == 1);

    RelatorCounts cd5;
    Presentation d5 = build_delta(5, false, &cd5);
    CHECK(d5.generator_count() == 5);
    CHECK(cd5.involutive == 5);
    CHECK(cd5.commutative == 0);
    CHECK(cd5.pentagon == 1);

    RelatorCounts cd6;
    build_delta(6, false, &cd6);
    CHECK(cd6.commutative == 45);
    CHECK(cd6.pentagon == 6);

    CHECK(build_delta(4, true).relators.empty());  // signed variant: free of rank 1
    CHECK_THROWS_AS(build_gamma(3, EnumMode::full), std::invalid_argument);
    CHECK_THROWS_AS(build_delta(3, false), std::invalid_argument);
}

TEST_CASE("lambda generating sets") {
    auto l4 = lambda_generators(4, Family::gamma);
    CHECK(l4 == std::vector<Quad>{Quad(1, 2, 3, 4), Quad(1, 3, 2, 4), Quad(1, 2, 4, 3)});

    auto l5 = lambda_generators(5, Family::gamma_hat);
    std::set<Quad> expect{Quad(1, 2, 3, 4), Quad(1, 2, 3, 5), Quad(1, 3, 2, 4),
                          Quad(1, 3, 2, 5), Quad(1, 4, 2, 5), Quad(1, 2, 4, 3),
                          Quad(1, 2, 5, 3), Quad(1, 2, 5, 4), Quad(1, 3, 5, 4)};
    CHECK(std::set<Quad>(l5.begin(), l5.end()) == expect);
    CHECK(l5.size() == 9);

    for (int n = 4; n <= 12; ++n) {
        CHECK(lambda_size_closed_form(n) == lambda_size_binomial(n));
        CHECK(static_cast<long long>(lambda_generators(n, Family::gamma).size()) ==
              lambda_size_closed_form(n));
        CHECK(static_cast<long long>(lambda_generators(n, Family::delta).size()) ==
              binomial(n - 1, 3));
    }
}

TEST_CASE("abelianizations of the small families") {
    CHECK(h1(build_gamma(4, EnumMode::full)).to_string() == "(Z/2)^3");
    CHECK(h1(build_gamma(5, EnumMode::full)).to_string() == "(Z/2)^9");
    CHECK(h1(build_gamma_hat(4, EnumMode::full)).to_string() == "Z^3");
    CHECK(h1(build_gamma_hat(5, EnumMode::full)).to_string() == "Z^9");
    CHECK(h1(build_delta(4, false)).to_string() == "Z/2");
    CHECK(h1(build_delta(5, false)).to_string() == "(Z/2)^4");
    CHECK(h1(build_delta(5, true)).to_string() == "Z^4");
}

TEST_CASE("reduced and full modes have identical H1") {
    for (int n = 4; n <= 5; ++n) {
        CHECK(h1(build_gamma(n, EnumMode::reduced)) == h1(build_gamma(n, EnumMode::full)));
        CHECK(h1(build_gamma_hat(n, EnumMode::reduced)) == h1(build_gamma_hat(n, EnumMode::full)));
    }
}
