#pragma once

#include <string>
#include <vector>

#include "km/presentation.hpp"
#include "km/quad.hpp"
#include "km/subsets.hpp"

namespace km {

using IntVec = std::vector<long long>;

// Phi_3((ijkl)) = {i,j,k} - {i,j,l} + {i,k,l} - {j,k,l} in Z[n]_3.
IntVec phi3(const Quad& q, int n);

// Phi_2((ijkl)) = {i,k} - {j,l} in Z[n]_2.
IntVec phi2(const Quad& q, int n);

// eta_3({i,j,k}) = {i,j} + {j,k} + {k,i}, extended linearly Z[n]_3 -> Z[n]_2.
IntVec eta3(const IntVec& v, int n);

// nu((ijkl)) = 1 iff 1 in {i,j,k,l}; extended additively mod 2 over words.
int nu(const Quad& q);
int nu_word(const Word& w, const std::vector<Quad>& generator_quads);

// A homomorphism from a presented group to Z^d (modulus 0) or (Z/2)^d
// (modulus 2), given by per-generator image vectors.
struct AbelianHom {
    std::string name;
    int target_dim = 0;
    int modulus = 0;  // 0 or 2
    std::vector<IntVec> images;  // one per source generator

    IntVec apply(const Word& w) const;
};

// Indices of relators whose image is nonzero (mod the target modulus);
// empty iff the hom is well-defined on p.
std::vector<int> check_well_defined(const AbelianHom& h, const Presentation& p);

// Built-in registry: phi3, phi2, phi3_mod2, phi2_mod2, nu, eps_all_ones,
// abelianization. Quad-valued homs require generator names that parse as
// quads; `abelianization` requires H1(p) to be elementary abelian of
// exponent 2 (it is the canonical quotient onto H1).
AbelianHom make_hom(const std::string& name, const Presentation& p);

std::vector<std::string> hom_registry_names();

// Quads parsed from the presentation's generator names (throws when a name
// is not a quad label).
std::vector<Quad> generator_quads(const Presentation& p);

// Per-generator image matrix of h (one row per generator).
SparseIntMatrix hom_image_matrix(const AbelianHom& h);

}  // namespace km
