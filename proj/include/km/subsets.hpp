#pragma once

#include <map>
#include <vector>

namespace km {

// The k-element subsets of [1..n] in lexicographic order ({1,2,3} < {1,2,4} <
// ... < {n-2,n-1,n}), as the ordered basis of the free abelian group Z[n]_k.
struct SubsetBasis {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> sets;
    std::map<std::vector<int>, int> rank;

    int size() const { return static_cast<int>(sets.size()); }

    // `s` must be strictly increasing; throws on unknown subsets.
    int index_of(const std::vector<int>& s) const;
};

SubsetBasis subset_basis(int n, int k);

}  // namespace km
