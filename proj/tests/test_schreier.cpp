#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "km/families.hpp"
#include "km/homs.hpp"
#include "km/schreier.hpp"

using namespace km;

namespace {

Word parse(const Presentation& p, const std::string& text) {
    auto index = generator_index(p);
    return parse_word(text, [&index](const std::string& s) {
        auto it = index.find(s);
        return it == index.end() ? -1 : it->second;
    });
}

std::string rewrite_to_string(const Presentation& p, const CosetTable& t, const Word& w) {
    // render Schreier symbols as a(...)/b(...) names
    std::vector<std::string> names(static_cast<std::size_t>(t.num_cosets) * t.num_generators);
    for (int c = 0; c < t.num_cosets; ++c)
        for (int g = 0; g < t.num_generators; ++g)
            names[static_cast<std::size_t>(c) * t.num_generators + g] =
                std::string(1, static_cast<char>('a' + c)) + p.generators[g];
    return format_word(schreier_rewrite(t, w, 0), names);
}

}  // namespace

TEST_CASE("coset table of nu on the Theta presentation") {
    Presentation theta = build_gamma(5, EnumMode::reduced);
    AbelianHom nu_hom = make_hom("nu", theta);
    CosetTable t = coset_table(theta, nu_hom);
    CHECK(t.num_cosets == 2);
    auto idx = generator_index(theta);
    CHECK(t.act(0, idx.at("(1234)")) == 1);
    CHECK(t.act(1, idx.at("(1234)")) == 0);
    CHECK(t.act(0, idx.at("(2345)")) == 0);

    Transversal tr = schreier_transversal(t);
    CHECK(tr.reps[0].empty());
    CHECK(format_word(tr.reps[1], theta.generators) == "(1234)");
}

TEST_CASE("rewriting process tau matches the worked relator examples") {
    Presentation theta = build_gamma(5, EnumMode::reduced);
    CosetTable t = coset_table(theta, make_hom("nu", theta));

    CHECK(rewrite_to_string(theta, t, parse(theta, "(1234) (1235) (1235) (1234)^-1")) ==
          "a(1234) b(1235) a(1235) a(1234)^-1");
    CHECK(rewrite_to_string(theta, t, parse(theta, "(1234) (1245) (2345) (1235) (1345)")) ==
          "a(1234) b(1245) a(2345) a(1235) b(1345)");
}

TEST_CASE("rs_presentation counts for the nu kernel") {
    Presentation theta = build_gamma(5, EnumMode::reduced);
    CosetTable t = coset_table(theta, make_hom("nu", theta));
    Transversal tr = schreier_transversal(t);
    RsPresentation rs = rs_presentation(theta, t, tr);

    CHECK(rs.naming.size() == 30);  // 2 cosets x 15 generators
    long long trivial = 0;
    for (const auto& e : rs.naming) trivial += e.trivial ? 1 : 0;
    CHECK(trivial == 1);  // the tree edge a(1234)
    CHECK(rs.presentation.generator_count() == 29);
    CHECK(rs.presentation.relators.size() == 54);  // index x relators of p

    TietzeResult simplified = tietze_simplify(rs.presentation);
    CHECK(simplified.presentation.generator_count() == 17);
    CHECK(simplified.presentation.relators.size() == 30);
    CHECK(h1(simplified.presentation).to_string() == "Z^2 + (Z/2)^6");
}

TEST_CASE("h1_kernel pipeline for nu, both routes and a custom transversal") {
    Presentation theta = build_gamma(5, EnumMode::reduced);
    AbelianHom nu_hom = make_hom("nu", theta);

    KernelH1Result res = h1_kernel(theta, nu_hom);
    CHECK(res.route_taken == KernelRoute::materialize);
    CHECK(res.num_cosets == 2);
    CHECK(res.invariants.to_string() == "Z^2 + (Z/2)^6");
    CHECK(res.simplified_generators == 17);
    CHECK(res.simplified_relators == 30);

    KernelH1Options stream_opts;
    stream_opts.route = KernelRoute::stream;
    CHECK(h1_kernel(theta, nu_hom, stream_opts).invariants == res.invariants);

    // transversal independence: {1, (1235)} instead of {1, (1234)}
    CosetTable t = coset_table(theta, nu_hom);
    Transversal alt = parse_transversal("1;(1235)", theta, t);
    KernelH1Options alt_opts;
    alt_opts.transversal = &alt;
    CHECK(h1_kernel(theta, nu_hom, alt_opts).invariants == res.invariants);

    // the full 120-generator presentation gives the same kernel H1
    Presentation full = build_gamma(5, EnumMode::full);
    CHECK(h1_kernel(full, make_hom("nu", full)).invariants == res.invariants);
}

TEST_CASE("streamed matrix equals the abelianized materialized presentation") {
    Presentation theta = build_gamma(5, EnumMode::reduced);
    AbelianHom nu_hom = make_hom("nu", theta);
    CosetTable t = coset_table(theta, nu_hom);
    Transversal tr = schreier_transversal(t);
    SparseIntMatrix streamed = rs_abelianized_matrix(theta, t, tr);
    RsPresentation rs = rs_presentation(theta, t, tr);
    CHECK(streamed.cols() == rs.presentation.generator_count());
    CHECK(cokernel_invariants(streamed) == h1(rs.presentation));
}

TEST_CASE("transversal validation") {
    Presentation theta = build_gamma(5, EnumMode::reduced);
    CosetTable t = coset_table(theta, make_hom("nu", theta));
    CHECK_THROWS_AS(parse_transversal("1", theta, t), std::invalid_argument);
    CHECK_THROWS_AS(parse_transversal("1;(2345)", theta, t), std::invalid_argument);
    CHECK_THROWS_AS(parse_transversal("(1234);(1234) (2345)", theta, t), std::invalid_argument);
}

TEST_CASE("schreier generator count on a free presentation") {
    // Nielsen-Schreier: an index-m subgroup of F_r is free of rank m(r-1)+1
    Presentation free2;
    free2.generators = {"a", "b"};
    AbelianHom eps = make_hom("eps_all_ones", free2);
    KernelH1Result res = h1_kernel(free2, eps);
    CHECK(res.num_cosets == 2);
    CHECK(res.rs_generators == 3);  // 2*2 - 2 + 1
    CHECK(res.invariants.to_string() == "Z^3");
}

TEST_CASE("index-one kernel: the trivial hom returns the group itself") {
    Presentation p = delta5_index2_subgroup_presentation();
    AbelianHom trivial;
    trivial.name = "trivial";
    trivial.modulus = 2;
    trivial.target_dim = 0;
    trivial.images.assign(p.generator_count(), IntVec{});
    KernelH1Result res = h1_kernel(p, trivial);
    CHECK(res.num_cosets == 1);
    CHECK(res.invariants.to_string() == "Z^2 + Z/2");
}

TEST_CASE("the index-2 subgroup of the rewritten delta_5 presentation") {
    Presentation p = delta5_four_generator_presentation();
    AbelianHom eps = make_hom("eps_all_ones", p);
    CHECK(check_well_defined(eps, p).empty());
    CosetTable t = coset_table(p, eps);
    CHECK(t.num_cosets == 2);
    KernelH1Result res = h1_kernel(p, eps);
    CHECK(res.invariants.to_string() == "Z^2 + Z/2");
    CHECK(res.invariants == h1(delta5_index2_subgroup_presentation()));
    // Euler-characteristic sanity: index x relator count
    CHECK(res.rs_relators == 2 * static_cast<long long>(p.relators.size()));
}

TEST_CASE("eps_all_ones is rejected where it is not well-defined") {
    Presentation d5 = build_delta(5, false);  // pentagon relator has odd length
    AbelianHom eps = make_hom("eps_all_ones", d5);
    CHECK(!check_well_defined(eps, d5).empty());
    CHECK_THROWS_AS(coset_table(d5, eps), std::invalid_argument);
}

TEST_CASE("coset_table rejects infinite targets") {
    Presentation gh = build_gamma_hat(5, EnumMode::full);
    AbelianHom h3 = make_hom("phi3", gh);
    CHECK_THROWS_AS(coset_table(gh, h3), std::invalid_argument);
}

TEST_CASE("abelianization kernel of gamma_5: the commutator subgroup, 512 cosets") {
    Presentation theta = build_gamma(5, EnumMode::reduced);
    AbelianHom ab = make_hom("abelianization", theta);
    CosetTable t = coset_table(theta, ab);
    CHECK(t.num_cosets == 512);
    Transversal tr = schreier_transversal(t);
    std::size_t max_len = 0;
    for (const Word& w : tr.reps) {
        max_len = std::max(max_len, w.size());
        for (std::size_t cut = 0; cut < w.size(); ++cut) {
            Word prefix(w.begin(), w.begin() + cut);
            bool found = false;
            for (const Word& other : tr.reps)
                if (other == prefix) {
                    found = true;
                    break;
                }
            CHECK(found);  // prefix-closed
        }
        if (max_len > 9) break;
    }
    CHECK(max_len <= 9);
}
