#pragma once

#include <cstdint>
#include <vector>

#include "km/report.hpp"
#include "km/snf.hpp"

namespace km {
namespace verify {

struct Options {
    int n_min = 4;
    int n_max = 6;
    bool include_slow = false;  // adds the n=7 abelianizations and the 512-coset run
    std::uint64_t seed = 20260810ull;
    int threads = 1;
    ProgressHook progress;
};

// The full verification suite: abelianizations, lattice images, mod-2 ranks,
// the Reidemeister-Schreier pipeline, the n=5 delta computations, the
// rewriting of every generator, the character identities, and the
// oracle/property suites. One CheckLine per check.
std::vector<CheckLine> run_all(const Options& opts);

}  // namespace verify
}  // namespace km
