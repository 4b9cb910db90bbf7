#include "km/subsets.hpp"

#include <stdexcept>

namespace km {

int SubsetBasis::index_of(const std::vector<int>& s) const {
    auto it = rank.find(s);
    if (it == rank.end()) throw std::invalid_argument("SubsetBasis: unknown subset");
    return it->second;
}

SubsetBasis subset_basis(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("subset_basis: bad k");
    SubsetBasis b;
    b.n = n;
    b.k = k;
    std::vector<int> cur(k);
    // lexicographic enumeration
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == k) {
            b.rank.emplace(cur, static_cast<int>(b.sets.size()));
            b.sets.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (k - pos - 1); ++v) {
            cur[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return b;
}

}  // namespace km
