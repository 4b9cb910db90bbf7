#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "km/matrix.hpp"
#include "km/oracles.hpp"
#include "km/snf.hpp"

using namespace km;

namespace {

SparseIntMatrix from_rows(const std::vector<std::vector<long>>& rows, int cols) {
    SparseIntMatrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c)
            if (rows[r][c] != 0) m.set(static_cast<int>(r), c, mpz_class(rows[r][c]));
    return m;
}

std::vector<mpz_class> factors_of(const SparseIntMatrix& m) {
    return smith_normal_form(m).factors;
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
    CHECK(factors_of(from_rows({{2, 4}, {6, 8}}, 2)) == std::vector<mpz_class>{2, 4});
    CHECK(factors_of(SparseIntMatrix(3, 4)).empty());
    CHECK(factors_of(from_rows({{6, 0}, {0, 4}}, 2)) == std::vector<mpz_class>{2, 12});
}

TEST_CASE("smith normal form with transforms: U*M*V diagonal, U and V unimodular") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        int r = dim(rng), c = dim(rng);
        std::vector<std::vector<long>> rows(r, std::vector<long>(c));
        for (auto& row : rows)
            for (auto& v : row) v = entry(rng);
        SparseIntMatrix m = from_rows(rows, c);
        SnfOptions opts;
        opts.with_transforms = true;
        SnfResult snf = smith_normal_form(m, opts);
        REQUIRE(snf.row_transform);
        REQUIRE(snf.col_transform);
        REQUIRE(snf.col_transform_inv);

        mpz_class du = dense_determinant(*snf.row_transform);
        mpz_class dv = dense_determinant(*snf.col_transform);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));

        DenseIntMatrix prod =
            dense_multiply(dense_multiply(*snf.row_transform, to_dense(m)), *snf.col_transform);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                mpz_class expect = 0;
                if (i == j && static_cast<std::size_t>(i) < snf.factors.size())
                    expect = snf.factors[i];
                CHECK(prod[i][j] == expect);
            }

        DenseIntMatrix vv = dense_multiply(*snf.col_transform, *snf.col_transform_inv);
        CHECK(vv == dense_identity(c));

        // the sparse path agrees with the transform-tracking path
        CHECK(smith_normal_form(m).factors == snf.factors);
    }
}

TEST_CASE("smith normal form agrees with the minor-gcd oracle") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 120; ++trial) {
        int r = dim(rng), c = dim(rng);
        std::vector<std::vector<long>> rows(r, std::vector<long>(c));
        for (auto& row : rows)
            for (auto& v : row) v = entry(rng);
        SparseIntMatrix m = from_rows(rows, c);
        CHECK(factors_of(m) == oracle::invariant_factors_via_minor_gcd(to_dense(m)));
    }
}

TEST_CASE("snf divisibility chain holds") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> entry(-30, 30);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::vector<long>> rows(4, std::vector<long>(4));
        for (auto& row : rows)
            for (auto& v : row) v = entry(rng) * entry(rng);
        auto f = factors_of(from_rows(rows, 4));
        for (std::size_t i = 1; i < f.size(); ++i)
            CHECK(mpz_divisible_p(f[i].get_mpz_t(), f[i - 1].get_mpz_t()));
    }
}

TEST_CASE("rank_mod_p basics") {
    SparseIntMatrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.set(i, i, 1);
    CHECK(rank_mod_p(id3, 5) == 3);
    CHECK_THROWS_AS(rank_mod_p(id3, 6), std::invalid_argument);

    // rank over GF(p) counts the invariant factors not divisible by p
    SparseIntMatrix m = from_rows({{2, 0}, {0, 3}}, 2);
    CHECK(rank_mod_p(m, 2) == 1);
    CHECK(rank_mod_p(m, 3) == 1);
    CHECK(rank_mod_p(m, 5) == 2);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<long>> rows(3, std::vector<long>(4));
        for (auto& row : rows)
            for (auto& v : row) v = entry(rng);
        SparseIntMatrix a = from_rows(rows, 4);
        long long rank_q = smith_normal_form(a).rank();
        for (long long p : {2, 3, 5}) CHECK(rank_mod_p(a, p) <= rank_q);
    }
}

TEST_CASE("lattice invariants of a single vector (2,0)") {
    LatticeInvariants li = lattice_image_invariants({{2, 0}}, 2);
    CHECK(li.image.to_string() == "Z");
    CHECK(li.quotient.to_string() == "Z + Z/2");
}

TEST_CASE("simplex boundary matrices form a chain complex") {
    for (int n = 4; n <= 8; ++n) {
        for (int k = 2; k <= n - 1; ++k) {
            SparseIntMatrix dk = simplex_boundary_matrix(n, k - 1);
            SparseIntMatrix dk1 = simplex_boundary_matrix(n, k);
            CHECK(multiply(dk, dk1).nnz() == 0);
        }
    }
    CHECK(rank_mod_p(simplex_boundary_matrix(5, 3), 2) == 4);
    CHECK(rank_mod_p(simplex_boundary_matrix(6, 3), 2) == 10);
    CHECK_THROWS_AS(simplex_boundary_matrix(5, 5), std::invalid_argument);
}

TEST_CASE("matrix market round trip") {
    SparseIntMatrix m = from_rows({{0, -7, 0}, {123456789, 0, 2}}, 3);
    std::ostringstream os;
    write_matrix_market(os, m);
    std::istringstream is(os.str());
    CHECK(read_matrix_market(is) == m);
}

TEST_CASE("invariant rendering") {
    AbelianInvariants a;
    CHECK(a.to_string() == "0");
    a.free_rank = 9;
    CHECK(a.to_string() == "Z^9");
    a.free_rank = 2;
    a.torsion = {2, 2, 2, 2, 2, 2};
    CHECK(a.to_string() == "Z^2 + (Z/2)^6");
    a.free_rank = 0;
    a.torsion = {2, 4};
    CHECK(a.to_string() == "Z/2 + Z/4");
    a.free_rank = 1;
    a.torsion = {2};
    CHECK(a.to_string() == "Z + Z/2");
}

TEST_CASE("large inputs run the GF(p) consistency screen") {
    // above 2e5 nonzeros the SNF cross-checks its factors against GF(2) and
    // GF(3) ranks before returning
    const int n = 70000;
    SparseIntMatrix m(n, n + 2);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, (i % 3 == 0) ? 2 : 1);
        m.set(i, i + 1, 1);
        m.set(i, i + 2, (i % 2) ? 1 : -1);
    }
    REQUIRE(m.nnz() > 200000);
    bool screened = false;
    SnfOptions opts;
    opts.progress = [&](const std::string& stage, std::size_t, std::size_t) {
        if (stage == "snf/screen") screened = true;
        return true;
    };
    SnfResult snf = smith_normal_form(m, opts);
    CHECK(screened);
    CHECK(snf.rank() == n);
}

TEST_CASE("progress hook can cancel") {
    std::vector<std::vector<long>> rows(30, std::vector<long>(30, 0));
    for (int i = 0; i < 30; ++i)
        for (int j = 0; j < 30; ++j) rows[i][j] = (i * 7 + j * 3) % 5 - 2;
    SparseIntMatrix m = from_rows(rows, 30);
    SnfOptions opts;
    opts.progress = [](const std::string&, std::size_t, std::size_t) { return false; };
    CHECK_THROWS_AS(smith_normal_form(m, opts), OperationCancelled);
}
