#pragma once

#include <array>
#include <utility>
#include <vector>

#include "km/presentation.hpp"
#include "km/quad.hpp"

namespace km {

using Quint = std::array<int, 5>;

std::vector<Quint> all_ordered_quints(int n);
std::vector<Quint> increasing_quints(int n);

// The five letters of the pentagon relation for an ordered 5-tuple
// (i,j,k,l,m): (ijkl)(ijlm)(jklm)(ijkm)(iklm), with the last two letters
// inverted in the signed variant.
std::array<std::pair<Quad, int>, 5> pentagon_letters(const Quint& t, bool signed_variant);

struct RelatorCounts {
    long long involutive = 0;
    long long dihedral = 0;
    long long commutative = 0;
    long long pentagon = 0;
    long long total() const { return involutive + dihedral + commutative + pentagon; }
};

// Builders for the group families. Full mode enumerates one generator per
// ordered 4-tuple; reduced mode keeps only canonical quads, folds the
// dihedral relations into the generator table, restricts commutative
// relators to canonical pairs, and (for gamma, where involutivity makes it
// sound) keeps just 12 pentagon relators per 5-subset. Reduced and full mode
// present isomorphic groups.
Presentation build_gamma(int n, EnumMode mode, RelatorCounts* counts = nullptr);
Presentation build_gamma_hat(int n, EnumMode mode, RelatorCounts* counts = nullptr);
Presentation build_delta(int n, bool hat, RelatorCounts* counts = nullptr);
Presentation build_family(Family f, int n, EnumMode mode, RelatorCounts* counts = nullptr);

// Minimal generating sets: for gamma / gamma_hat the set Lambda of types
// (G1) (123k), (G2) (1i2k) with 3<=i<k<=n, (G3) (1ijk) with 2<=i<k<j<=n,
// of size C(n,3)-1; for delta / delta_hat the increasing quads through 1,
// of size C(n-1,3).
std::vector<Quad> lambda_generators(int n, Family family);

long long lambda_size_closed_form(int n);  // (n-3)(n^2+2)/6
long long lambda_size_binomial(int n);     // C(n,3) - 1

// Fixed presentations for the n=5 delta computations: the four-generator
// rewriting of delta_5 and the <a,b,c | acac, (b c^-1 b^-1 a^-1)^2>
// presentation of its index-2 subgroup.
Presentation delta5_four_generator_presentation();
Presentation delta5_index2_subgroup_presentation();

}  // namespace km
