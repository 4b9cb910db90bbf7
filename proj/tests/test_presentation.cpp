#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "km/families.hpp"
#include "km/presentation.hpp"

using namespace km;

namespace {

Presentation two_gen(const std::vector<Word>& relators) {
    Presentation p;
    p.generators = {"a", "b"};
    for (const Word& r : relators) p.add_relator(r);
    return p;
}

}  // namespace

TEST_CASE("validate accepts builder output and flags violations") {
    CHECK(validate(build_gamma(5, EnumMode::full)).empty());
    CHECK(validate(build_gamma(5, EnumMode::reduced)).empty());

    Presentation p = two_gen({});
    p.relators.push_back(Word{{0, +1}, {7, +1}});  // undeclared symbol
    CHECK(validate(p).size() == 1);

    Presentation q = two_gen({});
    q.relators.push_back(Word{{0, +1}, {0, -1}});  // freely trivial
    auto violations = validate(q);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("redundant") != std::string::npos);
}

TEST_CASE("abelianized relation matrix entries are signed exponent sums") {
    Presentation p;
    p.generators = {"g"};
    p.add_relator(Word{{0, +1}, {0, +1}});
    SparseIntMatrix m = abelianized_relation_matrix(p);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 1);
    CHECK(m.at(0, 0) == 2);

    // unsigned pentagon relator: five distinct symbols, +1 each
    Presentation g5 = build_gamma(5, EnumMode::full);
    SparseIntMatrix mg = abelianized_relation_matrix(g5);
    int pentagon_row = static_cast<int>(g5.relators.size()) - 1;
    int nonzero = 0;
    for (const auto& [rc, v] : mg.entries())
        if (rc.first == pentagon_row) {
            CHECK(v == 1);
            ++nonzero;
        }
    CHECK(nonzero == 5);

    // signed pentagon relator: (+1,+1,+1,-1,-1) on its five symbols
    Presentation gh5 = build_gamma_hat(5, EnumMode::full);
    SparseIntMatrix mh = abelianized_relation_matrix(gh5);
    int srow = static_cast<int>(gh5.relators.size()) - 1;
    int plus = 0, minus = 0;
    for (const auto& [rc, v] : mh.entries())
        if (rc.first == srow) {
            if (v == 1) ++plus;
            if (v == -1) ++minus;
        }
    CHECK(plus == 3);
    CHECK(minus == 2);
}

TEST_CASE("presentation text and JSON formats round-trip") {
    Presentation p = build_delta(5, false);
    Presentation q = presentation_from_text(presentation_to_text(p));
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
    CHECK(q.family == p.family);
    CHECK(q.n == p.n);

    Presentation r = presentation_from_json(presentation_to_json(p));
    CHECK(r.generators == p.generators);
    CHECK(r.relators == p.relators);
    CHECK(r.family == p.family);
}

TEST_CASE("tietze eliminates a redundant generator") {
    Presentation p = two_gen({Word{{0, +1}, {1, -1}}});
    TietzeResult t = tietze_simplify(p);
    CHECK(t.presentation.generator_count() == 1);
    CHECK(t.presentation.relators.empty());
    CHECK(t.presentation.generators == std::vector<std::string>{"b"});
}

TEST_CASE("tietze leaves an involution relator alone") {
    Presentation p;
    p.generators = {"a"};
    p.add_relator(Word{{0, +1}, {0, +1}});
    TietzeResult t = tietze_simplify(p);
    CHECK(t.presentation.generator_count() == 1);
    CHECK(t.presentation.relators.size() == 1);
}

TEST_CASE("tietze drops duplicates and trivial relators") {
    Presentation p = two_gen({
        Word{{0, +1}, {1, +1}, {0, +1}, {1, +1}},
        Word{{1, +1}, {0, +1}, {1, +1}, {0, +1}},          // rotation of the first
        Word{{1, -1}, {0, -1}, {1, -1}, {0, -1}},          // inverse of the first
        Word{{1, +1}, {0, +1}, {0, -1}, {1, -1}},          // freely trivial
    });
    TietzeResult t = tietze_simplify(p);
    CHECK(t.presentation.relators.size() == 1);
    CHECK(t.presentation.generator_count() == 2);
}

TEST_CASE("tietze collapses the free-rank-3 presentation of the signed n=4 family") {
    TietzeResult t = tietze_simplify(build_gamma_hat(4, EnumMode::full));
    CHECK(t.presentation.generator_count() == 3);
    CHECK(t.presentation.relators.empty());
    CHECK(t.rounds <= 5);
}

TEST_CASE("tietze preserves H1") {
    std::vector<Presentation> corpus;
    corpus.push_back(build_gamma(4, EnumMode::full));
    corpus.push_back(build_gamma(5, EnumMode::reduced));
    corpus.push_back(build_gamma_hat(4, EnumMode::full));
    corpus.push_back(build_gamma_hat(5, EnumMode::reduced));
    corpus.push_back(build_delta(5, false));
    corpus.push_back(build_delta(6, true));
    corpus.push_back(delta5_four_generator_presentation());
    corpus.push_back(delta5_index2_subgroup_presentation());
    for (const Presentation& p : corpus) {
        TietzeResult t = tietze_simplify(p);
        CHECK(h1(t.presentation) == h1(p));
        CHECK(t.presentation.generator_count() <= p.generator_count());
    }
}

TEST_CASE("h1 of pinned small presentations") {
    CHECK(h1(delta5_index2_subgroup_presentation()).to_string() == "Z^2 + Z/2");
    CHECK(h1(delta5_four_generator_presentation()).to_string() == "(Z/2)^4");
    CHECK(h1(build_delta(5, false)).to_string() == "(Z/2)^4");
}
