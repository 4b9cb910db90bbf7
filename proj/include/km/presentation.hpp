#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "km/snf.hpp"
#include "km/word.hpp"

namespace km {

enum class Family { gamma, gamma_hat, delta, delta_hat, custom };
enum class EnumMode { full, reduced };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& s);
std::string mode_name(EnumMode m);
std::optional<EnumMode> parse_mode(const std::string& s);

// A finite presentation: named generators, freely reduced relator words, and
// provenance metadata. Values are immutable once built; all transformations
// return fresh presentations.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    Family family = Family::custom;
    int n = 0;
    EnumMode mode = EnumMode::full;

    int generator_count() const { return static_cast<int>(generators.size()); }

    // Free-reduces; drops relators that reduce to the empty word.
    void add_relator(const Word& w);
};

// Name -> index lookup for parsing words against a presentation.
std::unordered_map<std::string, int> generator_index(const Presentation& p);

// Empty iff the presentation invariants hold; each violation names the
// offending relator or symbol. Diagnostic only, never throws.
std::vector<std::string> validate(const Presentation& p);

// One row per relator, one column per generator; entry = signed exponent sum.
SparseIntMatrix abelianized_relation_matrix(const Presentation& p);

// Abelianization invariants from the Smith normal form of the relation matrix.
AbelianInvariants h1(const Presentation& p, const SnfOptions& opts = {});

// --- file formats ------------------------------------------------------

// Line-oriented text: `# family=gamma n=5 mode=full` header, `gen <name>`
// lines, `rel <word>` lines in word syntax.
std::string presentation_to_text(const Presentation& p);
Presentation presentation_from_text(std::istream& is);
Presentation presentation_from_text(const std::string& text);

// JSON mirror: {family, n, mode, generators:[string],
// relators:[[[genIndex,sign],...]]}.
std::string presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const std::string& text);

// --- Tietze simplification ---------------------------------------------

// Moves: drop freely/cyclically trivial relators, drop duplicates (up to
// rotation and inversion), eliminate a generator via a relator g*w with w not
// containing g. An elimination is applied only when it strictly shrinks the
// total letter count; candidates are ranked by growth, then by generator id.
struct TietzeResult {
    Presentation presentation;
    std::vector<std::string> log;
    int rounds = 0;
};

TietzeResult tietze_simplify(const Presentation& p, int max_rounds = 100);

}  // namespace km
