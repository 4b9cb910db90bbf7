#include "km/oracles.hpp"

#include <vector>

namespace km {
namespace oracle {

namespace {

mpz_class laplace_det(const DenseIntMatrix& a, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return a[rows[0]][cols[0]];
    mpz_class det = 0;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols(cols.size() - 1);
    for (std::size_t j = 0; j < k; ++j) {
        if (a[rows[0]][cols[j]] == 0) continue;
        std::size_t at = 0;
        for (std::size_t c = 0; c < k; ++c)
            if (c != j) sub_cols[at++] = cols[c];
        mpz_class term = a[rows[0]][cols[j]] * laplace_det(a, sub_rows, sub_cols);
        if (j % 2)
            det -= term;
        else
            det += term;
    }
    return det;
}

void subsets_of(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(k);
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (k - pos); ++v) {
            cur[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

std::vector<mpz_class> invariant_factors_via_minor_gcd(const DenseIntMatrix& a) {
    const int nrows = static_cast<int>(a.size());
    const int ncols = nrows ? static_cast<int>(a[0].size()) : 0;
    const int kmax = std::min(nrows, ncols);
    std::vector<mpz_class> gcds{1};  // d_0
    for (int k = 1; k <= kmax; ++k) {
        std::vector<std::vector<int>> row_sets, col_sets;
        subsets_of(nrows, k, row_sets);
        subsets_of(ncols, k, col_sets);
        mpz_class g = 0;
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets) g = gcd(g, laplace_det(a, rs, cs));
        if (g == 0) break;
        gcds.push_back(g);
    }
    std::vector<mpz_class> factors;
    for (std::size_t k = 1; k < gcds.size(); ++k) factors.push_back(gcds[k] / gcds[k - 1]);
    return factors;
}

}  // namespace oracle
}  // namespace km
