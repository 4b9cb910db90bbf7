#pragma once

#include "km/matrix.hpp"

namespace km {
namespace oracle {

// Invariant factors from the gcd chain of k x k minors (Laplace expansion,
// exponential; for small matrices only). Deliberately shares nothing with
// the elimination-based Smith normal form it cross-checks.
std::vector<mpz_class> invariant_factors_via_minor_gcd(const DenseIntMatrix& a);

}  // namespace oracle
}  // namespace km
