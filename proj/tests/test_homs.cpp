#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "km/families.hpp"
#include "km/homs.hpp"
#include "km/snf.hpp"

using namespace km;

namespace {

IntVec basis_vec(int dim, int idx, long long v = 1) {
    IntVec out(dim, 0);
    out[idx] = v;
    return out;
}

IntVec eval_word_phi3(const std::vector<Quad>& quads, const Word& w, int n) {
    IntVec acc(subset_basis(n, 3).size(), 0);
    for (const Letter& l : w) {
        IntVec v = phi3(quads[l.gen], n);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += l.sign * v[i];
    }
    return acc;
}

}  // namespace

TEST_CASE("phi3 on (1234) at n=4") {
    SubsetBasis b = subset_basis(4, 3);
    IntVec v = phi3(Quad(1, 2, 3, 4), 4);
    CHECK(v[b.index_of({1, 2, 3})] == 1);
    CHECK(v[b.index_of({1, 2, 4})] == -1);
    CHECK(v[b.index_of({1, 3, 4})] == 1);
    CHECK(v[b.index_of({2, 3, 4})] == -1);
}

TEST_CASE("phi3 of (i,n-1,j,n)(i,j,n-1,n)^-1 concentrates on two triples") {
    // n=5, i=2, j=3: 2{2,3,5} - 2{2,4,5}
    const int n = 5;
    SubsetBasis b = subset_basis(n, 3);
    IntVec a = phi3(Quad(2, 4, 3, 5), n);
    IntVec c = phi3(Quad(2, 3, 4, 5), n);
    IntVec diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - c[i];
    for (int i = 0; i < b.size(); ++i) {
        long long expect = 0;
        if (i == b.index_of({2, 3, 5})) expect = 2;
        if (i == b.index_of({2, 4, 5})) expect = -2;
        CHECK(diff[i] == expect);
    }
}

TEST_CASE("phi3 and phi2 on the word (1324)(3546)(5162) at n=6") {
    const int n = 6;
    SubsetBasis b3 = subset_basis(n, 3);
    std::vector<Quad> qs{Quad(1, 3, 2, 4), Quad(3, 5, 4, 6), Quad(5, 1, 6, 2)};
    IntVec sum3(b3.size(), 0);
    IntVec sum2(subset_basis(n, 2).size(), 0);
    for (const Quad& q : qs) {
        IntVec v3 = phi3(q, n), v2 = phi2(q, n);
        for (std::size_t i = 0; i < sum3.size(); ++i) sum3[i] += v3[i];
        for (std::size_t i = 0; i < sum2.size(); ++i) sum2[i] += v2[i];
    }
    CHECK(sum3[b3.index_of({1, 2, 3})] == 1);
    CHECK(sum3[b3.index_of({1, 3, 5})] == 0);
    CHECK(std::any_of(sum3.begin(), sum3.end(), [](long long x) { return x != 0; }));
    CHECK(std::all_of(sum2.begin(), sum2.end(), [](long long x) { return x == 0; }));
}

TEST_CASE("phi2 pinned values") {
    SubsetBasis b = subset_basis(4, 2);
    IntVec v = phi2(Quad(1, 2, 3, 4), 4);
    CHECK(v[b.index_of({1, 3})] == 1);
    CHECK(v[b.index_of({2, 4})] == -1);

    SubsetBasis b5 = subset_basis(5, 2);
    IntVec w = phi2(Quad(1, 4, 2, 5), 5);
    CHECK(w[b5.index_of({1, 2})] == 1);
    CHECK(w[b5.index_of({4, 5})] == -1);
}

TEST_CASE("eta3 basis formula and the identity 2*phi2 = eta3 o phi3") {
    const int n = 5;
    SubsetBasis b3 = subset_basis(n, 3);
    SubsetBasis b2 = subset_basis(n, 2);
    IntVec e = eta3(basis_vec(b3.size(), b3.index_of({1, 2, 3})), n);
    for (int i = 0; i < b2.size(); ++i) {
        bool in = (i == b2.index_of({1, 2})) || (i == b2.index_of({2, 3})) ||
                  (i == b2.index_of({1, 3}));
        CHECK(e[i] == (in ? 1 : 0));
    }
    CHECK(eta3(IntVec(b3.size(), 0), n) == IntVec(b2.size(), 0));
    CHECK_THROWS_AS(eta3(IntVec(3, 0), n), std::invalid_argument);

    for (int m = 4; m <= 8; ++m) {
        for (const Quad& q : all_ordered_quads(m)) {
            IntVec lhs = phi2(q, m);
            for (long long& x : lhs) x *= 2;
            CHECK(eta3(phi3(q, m), m) == lhs);
        }
    }
}

TEST_CASE("nu indicator") {
    CHECK(nu(Quad(1, 2, 3, 4)) == 1);
    CHECK(nu(Quad(2, 3, 4, 5)) == 0);
    std::vector<Quad> quads{Quad(1, 2, 3, 4), Quad(1, 2, 3, 5)};
    CHECK(nu_word(Word{{0, +1}, {1, +1}}, quads) == 0);
    // invariant under the dihedral orbit: depends only on the 4-subset
    for (const Quad& q : all_ordered_quads(5))
        CHECK(nu(q) == nu(canonical_quad(q, false).quad));
}

TEST_CASE("well-definedness checks") {
    for (int n = 5; n <= 6; ++n) {
        Presentation gh = build_gamma_hat(n, EnumMode::full);
        CHECK(check_well_defined(make_hom("phi3", gh), gh).empty());
        CHECK(check_well_defined(make_hom("phi2", gh), gh).empty());
    }
    Presentation g5 = build_gamma(5, EnumMode::full);
    CHECK(!check_well_defined(make_hom("phi3", g5), g5).empty());  // (ijkl)^2 -> 2v over Z
    CHECK(check_well_defined(make_hom("phi3_mod2", g5), g5).empty());
    CHECK(check_well_defined(make_hom("phi2_mod2", g5), g5).empty());
    CHECK(check_well_defined(make_hom("nu", g5), g5).empty());
    Presentation theta = build_gamma(5, EnumMode::reduced);
    CHECK(check_well_defined(make_hom("nu", theta), theta).empty());
}

TEST_CASE("phi3 lattice image at n=4: image Z^3, quotient Z + (Z/2)^2") {
    Presentation gh4 = build_gamma_hat(4, EnumMode::full);
    std::vector<IntVec> vectors;
    for (const Quad& q : lambda_generators(4, Family::gamma_hat)) vectors.push_back(phi3(q, 4));
    LatticeInvariants li = lattice_image_invariants(vectors, subset_basis(4, 3).size());
    CHECK(li.image.to_string() == "Z^3");
    CHECK(li.quotient.to_string() == "Z + (Z/2)^2");

    // over all generators the image lattice is unchanged
    std::vector<IntVec> all;
    for (const Quad& q : generator_quads(gh4)) all.push_back(phi3(q, 4));
    CHECK(lattice_image_invariants(all, 4).image.to_string() == "Z^3");
}

TEST_CASE("phi3 image rank equals N_n at n=5") {
    std::vector<IntVec> vectors;
    for (const Quad& q : all_ordered_quads(5)) vectors.push_back(phi3(q, 5));
    LatticeInvariants li = lattice_image_invariants(vectors, subset_basis(5, 3).size());
    CHECK(li.image.free_rank == 9);
}

TEST_CASE("phi2 image is the augmentation-zero sublattice") {
    for (int n = 5; n <= 7; ++n) {
        std::vector<IntVec> vectors;
        for (const Quad& q : all_ordered_quads(n)) {
            IntVec v = phi2(q, n);
            long long total = 0;
            for (long long x : v) total += x;
            CHECK(total == 0);  // contained in the sublattice
            vectors.push_back(std::move(v));
        }
        const int d = subset_basis(n, 2).size();
        LatticeInvariants li = lattice_image_invariants(vectors, d);
        CHECK(li.image.free_rank == d - 1);
        CHECK(li.quotient.to_string() == "Z");  // saturated of corank one

        // the spanning differences from the generating computation
        SubsetBasis b2 = subset_basis(n, 2);
        for (int i = 1; i + 2 <= n - 2; ++i) {
            int j = i + 1;
            IntVec w = phi2(Quad(i, n - 1, j, n), n);
            CHECK(w[b2.index_of({i, j})] == 1);
            CHECK(w[b2.index_of({n - 1, n})] == -1);
        }
    }
}

TEST_CASE("mod-2 ranks of the generator image matrices") {
    for (int n = 4; n <= 6; ++n) {
        Presentation g = build_gamma(n, EnumMode::full);
        AbelianHom h3 = make_hom("phi3_mod2", g);
        AbelianHom h2 = make_hom("phi2_mod2", g);
        SparseIntMatrix m3 = hom_image_matrix(h3);
        SparseIntMatrix st = vstack(transpose(hom_image_matrix(h3)), transpose(hom_image_matrix(h2)));
        CHECK(rank_mod_p(m3, 2) == binomial(n - 1, 3));
        CHECK(rank_mod_p(transpose(st), 2) == lambda_size_binomial(n));
    }
}

TEST_CASE("every registry hom resolves on the Theta presentation") {
    Presentation theta = build_gamma(5, EnumMode::reduced);
    for (const std::string& name : hom_registry_names()) {
        AbelianHom h = make_hom(name, theta);
        CHECK(h.name == name);
        CHECK(static_cast<int>(h.images.size()) == theta.generator_count());
    }
}

TEST_CASE("registry rejects bad requests") {
    Presentation d5 = build_delta(5, false);
    CHECK_THROWS_AS(make_hom("nu", d5), std::invalid_argument);  // wrong family
    Presentation g6 = build_gamma(6, EnumMode::full);
    CHECK_THROWS_AS(make_hom("nu", g6), std::invalid_argument);  // wrong n
    CHECK_THROWS_AS(make_hom("no_such_hom", d5), std::invalid_argument);
    CHECK_THROWS_AS(lattice_image_invariants({{1, 0}, {1, 0, 0}}, 2), std::invalid_argument);
}

TEST_CASE("abelianization hom enumerates H1 classes") {
    Presentation theta = build_gamma(5, EnumMode::reduced);
    AbelianHom ab = make_hom("abelianization", theta);
    CHECK(ab.modulus == 2);
    CHECK(ab.target_dim == 9);
    CHECK(check_well_defined(ab, theta).empty());
    CHECK_THROWS_AS(make_hom("abelianization", build_gamma_hat(5, EnumMode::full)),
                    std::invalid_argument);
}

TEST_CASE("rewritten-invariance oracle: phi3 is constant on dihedral orbits") {
    std::mt19937_64 rng(5);
    auto quads = all_ordered_quads(7);
    std::uniform_int_distribution<std::size_t> pick(0, quads.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const Quad& q = quads[pick(rng)];
        auto c = canonical_quad(q, true);
        IntVec direct = phi3(q, 7);
        IntVec canon = phi3(c.quad, 7);
        for (long long& x : canon) x *= c.sign;
        CHECK(direct == canon);
    }
}
