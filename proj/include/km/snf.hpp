#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "km/matrix.hpp"

namespace km {

// Invariants of a finitely generated abelian group: free rank plus a torsion
// divisibility chain d1 | d2 | ..., each di >= 2.
struct AbelianInvariants {
    long long free_rank = 0;
    std::vector<mpz_class> torsion;

    bool operator==(const AbelianInvariants&) const = default;

    // "Z^2 + (Z/2)^6", "Z^9", "(Z/2)^19", "0", ...
    std::string to_string() const;
};

struct OperationCancelled : std::runtime_error {
    OperationCancelled() : std::runtime_error("operation cancelled") {}
};

// Return false to cancel the surrounding computation.
using ProgressHook =
    std::function<bool(const std::string& stage, std::size_t done, std::size_t total)>;

struct SnfOptions {
    bool with_transforms = false;
    ProgressHook progress;
};

struct SnfResult {
    // Nonzero diagonal entries d1 | d2 | ... | dr (r = rank), all positive;
    // entries equal to 1 are kept so that factors.size() == rank.
    std::vector<mpz_class> factors;

    // Present only when with_transforms: U * M * V is the SNF diagonal, with
    // U, V unimodular. col_transform_inv is V^-1.
    std::optional<DenseIntMatrix> row_transform;
    std::optional<DenseIntMatrix> col_transform;
    std::optional<DenseIntMatrix> col_transform_inv;

    long long rank() const { return static_cast<long long>(factors.size()); }
};

SnfResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opts = {});

// Cokernel invariants of the row lattice of `m` inside Z^cols.
AbelianInvariants cokernel_invariants(const SparseIntMatrix& m, const SnfOptions& opts = {});

// Rank over the field with p elements; p must be prime.
long long rank_mod_p(const SparseIntMatrix& m, long long p);

struct LatticeInvariants {
    AbelianInvariants image;     // always free, rank = matrix rank
    AbelianInvariants quotient;  // Z^d / row lattice
};

// Rows of `m` span the lattice.
LatticeInvariants lattice_image_invariants(const SparseIntMatrix& m);
LatticeInvariants lattice_image_invariants(const std::vector<std::vector<long long>>& vectors,
                                           int ambient_dim);

// Boundary map of the simplicial chain complex of the (n-1)-simplex with
// vertices 1..n: C_k -> C_{k-1}, one column per (k+1)-subset, alternating
// signs over face deletion. Requires 1 <= k <= n-1.
SparseIntMatrix simplex_boundary_matrix(int n, int k);

bool is_prime(long long p);

}  // namespace km
