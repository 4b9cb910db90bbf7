#pragma once

#include <string>
#include <vector>

#include "km/homs.hpp"
#include "km/presentation.hpp"

namespace km {

// Coset table of the kernel of a map onto a finite elementary abelian
// 2-group: cosets are the elements of the image subgroup, coset 0 the
// subgroup itself; the action adds generator images.
struct CosetTable {
    int num_cosets = 0;
    int num_generators = 0;
    std::vector<std::vector<int>> action;  // [coset][gen]

    // Generators of order dividing 2 in the target act the same as their
    // inverses, so the sign is immaterial here.
    int act(int coset, int gen, int sign = +1) const {
        (void)sign;
        return action.at(coset).at(gen);
    }
};

// Throws when h is not well-defined on p or the target is not finite
// (modulus 0).
CosetTable coset_table(const Presentation& p, const AbelianHom& h);

// Prefix-closed coset representatives; reps[0] is the empty word.
struct Transversal {
    std::vector<Word> reps;
};

// Breadth-first over cosets with generators in index order.
Transversal schreier_transversal(const CosetTable& t);

// Parses `;`-separated representative words (word syntax over p's generator
// names, `1` = empty) and validates completeness, distinctness and the
// Schreier prefix property.
Transversal parse_transversal(const std::string& text, const Presentation& p,
                              const CosetTable& t);

// Rewriting process tau: scan w from `start_coset`, emitting the Schreier
// symbol gamma(coset, gen) per letter (id = coset * generators + gen).
// Freely-trivial symbols are kept; the result is freely reduced.
Word schreier_rewrite(const CosetTable& t, const Word& w, int start_coset = 0);

struct SchreierName {
    int coset = 0;
    int gen = 0;
    std::string name;
    bool trivial = false;          // rep(coset)*gen freely equals rep(target)
    int presentation_index = -1;   // -1 for trivial pairs
};

struct RsPresentation {
    Presentation presentation;  // generators: the non-trivial Schreier pairs
    std::vector<SchreierName> naming;
    Transversal transversal;
};

// Kernel presentation via Reidemeister-Schreier: one generator per
// non-trivial (coset, generator) pair, one relator tau(t r t^-1) per
// (transversal element, relator) pair, with trivial symbols substituted by
// the identity during emission.
RsPresentation rs_presentation(const Presentation& p, const CosetTable& t,
                               const Transversal& tr);

std::string naming_map_to_json(const RsPresentation& rs, const Presentation& p);

// Streams the abelianized kernel relation matrix without materializing the
// rewritten words; conjugating prefixes cancel after abelianization, so row
// (t, r) is the exponent vector of r scanned from coset t.
SparseIntMatrix rs_abelianized_matrix(const Presentation& p, const CosetTable& t,
                                      const Transversal& tr);

enum class KernelRoute { automatic, materialize, stream };

struct KernelH1Options {
    KernelRoute route = KernelRoute::automatic;
    const Transversal* transversal = nullptr;  // BFS transversal when null
    int tietze_max_rounds = 100;
    SnfOptions snf;
};

struct KernelH1Result {
    AbelianInvariants invariants;
    KernelRoute route_taken = KernelRoute::automatic;
    int num_cosets = 0;
    long long schreier_pairs = 0;      // cosets x generators
    long long rs_generators = 0;       // non-trivial pairs
    long long rs_relators = 0;
    long long simplified_generators = -1;  // materialize route only
    long long simplified_relators = -1;
    Transversal transversal;
};

// coset table -> transversal -> Reidemeister-Schreier -> (Tietze ->) H1.
KernelH1Result h1_kernel(const Presentation& p, const AbelianHom& h,
                         const KernelH1Options& opts = {});

}  // namespace km
